// Independent reference implementations used to cross-check the library.
// Nothing here may call into fieldlink's production quadrature or kernels.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <functional>

namespace testsupport {

/// J0 by its power series sum_k (-1)^k (z^2/4)^k / (k!)^2.
double bessel_j0_series(double z);

/// J0 by the integral representation (1/pi) Int_0^pi cos(z sin t) dt,
/// evaluated with a fine trapezoid rule (the integrand is periodic-smooth,
/// so the trapezoid converges spectrally).
double bessel_j0_quadrature(double z);

/// Continuum Pauli-Jordan kernel -1/2 sgn(dt) theta(dt^2 - dx^2) J0(m s).
double pauli_jordan_closed_form(double mass, double dt, double dx);

/// Brute-force double integral Int_0^tf dt Int_0^t dt' f(t, t') on a fine
/// uniform grid (trapezoid in both directions, diagonal handled by halving);
/// deliberately unrelated to the library's Simpson machinery.
double ordered_double_integral(const std::function<double(double, double)>& f, double t_final,
                               int steps);

/// Plain trapezoid quadrature of f over [0, t_final].
double trapezoid(const std::function<double(double)>& f, double t_final, int steps);

/// Concurrence of a pure two-qubit state from the Schmidt coefficients
/// (singular values of the 2x2 amplitude matrix): 2 s0 s1.
double schmidt_concurrence(const Eigen::Vector4cd& state);

/// Two-qubit density matrix of |psi><psi|.
Eigen::Matrix4cd pure_density(const Eigen::Vector4cd& state);

/// Full-state construction of the reduced branch density operator: builds
/// |Psi> = sum alpha_P beta_Q |PQ> x (U_A_P x U_B_Q)|chi> in the
/// 4 * dim_a * dim_b space and traces out the mediator.
Eigen::Matrix4cd brute_force_rho(const Eigen::MatrixXcd& u_a_r, const Eigen::MatrixXcd& u_a_l,
                                 const Eigen::MatrixXcd& u_b_r, const Eigen::MatrixXcd& u_b_l,
                                 const Eigen::VectorXcd& chi,
                                 const std::array<std::complex<double>, 2>& alpha,
                                 const std::array<std::complex<double>, 2>& beta);

}  // namespace testsupport
