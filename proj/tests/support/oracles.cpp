#include "support/oracles.hpp"

#include <cmath>
#include <numbers>

namespace testsupport {

double bessel_j0_series(double z) {
  const double q = 0.25 * z * z;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 64; ++k) {
    term *= -q / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double bessel_j0_quadrature(double z) {
  const int n = 2048;
  const double h = std::numbers::pi / n;
  double acc = 0.5 * (std::cos(z * std::sin(0.0)) + std::cos(z * std::sin(std::numbers::pi)));
  for (int i = 1; i < n; ++i) acc += std::cos(z * std::sin(h * i));
  return acc * h / std::numbers::pi;
}

double pauli_jordan_closed_form(double mass, double dt, double dx) {
  const double s2 = dt * dt - dx * dx;
  if (s2 < 0.0) return 0.0;
  const double sign = dt > 0.0 ? 1.0 : (dt < 0.0 ? -1.0 : 0.0);
  return -0.5 * sign * bessel_j0_series(mass * std::sqrt(s2));
}

double ordered_double_integral(const std::function<double(double, double)>& f, double t_final,
                               int steps) {
  const double h = t_final / steps;
  double acc = 0.0;
  for (int i = 1; i <= steps; ++i) {
    const double wi = (i == steps) ? 0.5 : 1.0;
    const double t = h * i;
    double inner = 0.0;
    for (int j = 0; j <= i; ++j) {
      const double wj = (j == 0 || j == i) ? 0.5 : 1.0;
      inner += wj * f(t, h * j);
    }
    acc += wi * inner * h;
  }
  return acc * h;
}

double trapezoid(const std::function<double(double)>& f, double t_final, int steps) {
  const double h = t_final / steps;
  double acc = 0.5 * (f(0.0) + f(t_final));
  for (int i = 1; i < steps; ++i) acc += f(h * i);
  return acc * h;
}

double schmidt_concurrence(const Eigen::Vector4cd& state) {
  Eigen::Matrix2cd amp;
  amp << state[0], state[1], state[2], state[3];
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(amp);
  return 2.0 * svd.singularValues()[0] * svd.singularValues()[1];
}

Eigen::Matrix4cd pure_density(const Eigen::Vector4cd& state) { return state * state.adjoint(); }

Eigen::Matrix4cd brute_force_rho(const Eigen::MatrixXcd& u_a_r, const Eigen::MatrixXcd& u_a_l,
                                 const Eigen::MatrixXcd& u_b_r, const Eigen::MatrixXcd& u_b_l,
                                 const Eigen::VectorXcd& chi,
                                 const std::array<std::complex<double>, 2>& alpha,
                                 const std::array<std::complex<double>, 2>& beta) {
  const Eigen::Index da = u_a_r.rows();
  const Eigen::Index db = u_b_r.rows();
  const Eigen::Index dm = da * db;  // mediator dimension

  // kron(U_A, U_B) |chi> with chi A-major
  const auto apply_pair = [&](const Eigen::MatrixXcd& ua, const Eigen::MatrixXcd& ub) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dm);
    for (Eigen::Index a = 0; a < da; ++a)
      for (Eigen::Index b = 0; b < db; ++b) {
        std::complex<double> acc = 0.0;
        for (Eigen::Index ap = 0; ap < da; ++ap)
          for (Eigen::Index bp = 0; bp < db; ++bp) acc += ua(a, ap) * ub(b, bp) * chi[ap * db + bp];
        out[a * db + b] = acc;
      }
    return out;
  };

  // |Psi> over (branch pair) x (mediator)
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4 * dm);
  const std::array<const Eigen::MatrixXcd*, 2> ua = {&u_a_r, &u_a_l};
  const std::array<const Eigen::MatrixXcd*, 2> ub = {&u_b_r, &u_b_l};
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      const Eigen::VectorXcd branch = apply_pair(*ua[p], *ub[q]);
      psi.segment((2 * p + q) * dm, dm) = alpha[p] * beta[q] * branch;
    }

  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      rho(r, c) = psi.segment(c * dm, dm).dot(psi.segment(r * dm, dm));
  return rho;
}

}  // namespace testsupport
