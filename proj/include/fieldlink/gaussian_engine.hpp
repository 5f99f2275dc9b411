#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "fieldlink/entanglement.hpp"
#include "fieldlink/field_model.hpp"
#include "fieldlink/scenario.hpp"

namespace fieldlink {

/// Coherent displacement generated by one branch current: one complex
/// amplitude per mode, ordered by ascending n (index i holds mode n = i - N).
/// Linear in the coupling and in the weight function.
struct DisplacementVector {
  Eigen::VectorXcd amplitudes;
};

/// First-order Magnus term of the branch unitary:
///   alpha_k = -i c Int_0^tf dt s(t) e^{i w_k t} f_k(x(t)) / sqrt(2 L w_k)
/// with f_k(x) = e^{-i k x} e^{-k^2 sigma^2 / 2} the (smeared) mode function.
/// Composite Simpson with step quad_step; quad_step must be positive and
/// divide t_final into at least 16 steps (ConfigError otherwise).
DisplacementVector displacement(const FieldSpec& spec, const Trajectory& traj, double coupling,
                                double quad_step);

/// Second-order Magnus phase of a single branch current (the X = Y case):
///   -1/2 Int_0^tf dt Int_0^t dt' j(t) Delta(t - t', x(t) - x(t')) j(t').
double influence_phase(const FieldSpec& spec, const Trajectory& traj, double coupling,
                       double quad_step);

/// Cross influence phase of two distinct currents:
///   -1/2 Int_0^tf dt Int_0^t dt' [ j_x(t) Delta j_y(t') + j_y(t) Delta j_x(t') ].
/// This is the field-mediated effective A-B interaction; it survives only
/// inside the light cone (up to mode truncation).
double influence_phase(const FieldSpec& spec, const Trajectory& traj_x, const Trajectory& traj_y,
                       double coupling_x, double coupling_y, double quad_step);

/// Full engine output for one scenario.
struct EngineResult {
  /// M[(P,Q),(P',Q')] = <0| U+_{P'Q'} U_{PQ} |0>, basis order (RR,RL,LR,LL).
  Eigen::Matrix4cd overlaps;
  /// rho[(PQ),(P'Q')] = alpha_P conj(alpha_P') beta_Q conj(beta_Q') M[...].
  TwoQubitState rho;
  std::array<double, 2> local_phase_a;  ///< self phases of A_R, A_L
  std::array<double, 2> local_phase_b;
  Eigen::Matrix2d cross_phase;          ///< cross phase for branch pair (P,Q)
  /// Gauge-invariant entangling phase: second difference over (P,Q) of the
  /// cross influence phase minus the vacuum cross term Im<alpha_B, alpha_A>.
  /// Exactly zero for spacelike supports in the continuum limit.
  double entangling_phase;
  /// Re<alpha_A_R - alpha_A_L, alpha_B_R - alpha_B_L>: the correlated part
  /// of the dephasing exponent (the cross term of ||alpha_PQ - alpha_P'Q'||^2).
  double cross_dephasing;
};

EngineResult evolve(const Scenario& s, const FieldSpec& spec, double quad_step);

/// The branch overlap matrix alone.
Eigen::Matrix4cd branch_overlaps(const Scenario& s, const FieldSpec& spec, double quad_step);

/// The reduced trajectory density operator alone.
TwoQubitState reduced_density(const Scenario& s, const FieldSpec& spec, double quad_step);

}  // namespace fieldlink
