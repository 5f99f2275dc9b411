#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "fieldlink/entanglement.hpp"

namespace fieldlink {

/// Finite-dimensional mediator model: one unitary per object branch acting
/// on that object's internal-plus-field factor, and a joint mediator state
/// chi on the product space (A-major ordering: index a * dim_b + b).
struct ControlledUnitaryModel {
  Eigen::MatrixXcd u_a_r, u_a_l;  ///< dim_a x dim_a
  Eigen::MatrixXcd u_b_r, u_b_l;  ///< dim_b x dim_b
  Eigen::VectorXcd chi;           ///< dim_a * dim_b, unit norm
  std::array<std::complex<double>, 2> alpha;
  std::array<std::complex<double>, 2> beta;

  int dim_a() const { return static_cast<int>(u_a_r.rows()); }
  int dim_b() const { return static_cast<int>(u_b_r.rows()); }

  /// Throws NumericError unless all four matrices are unitary within 1e-12,
  /// chi has unit norm and the branch amplitudes are normalized.
  void validate() const;
};

/// Reduced density operator of the two which-path qubits:
///   rho[(PQ),(P'Q')] = alpha_P conj(alpha_P') beta_Q conj(beta_Q')
///                      <chi| (U+_{A_P'} U_{A_P}) x (U+_{B_Q'} U_{B_Q}) |chi>.
TwoQubitState build_rho(const ControlledUnitaryModel& model);

/// One eigenphase cluster of V_RL = U+_{A_R} U_{A_L}.
struct PhaseProjector {
  double theta;               ///< representative eigenphase in (-pi, pi]
  Eigen::MatrixXcd projector; ///< orthogonal projector onto the cluster
};

/// Spectral decomposition of the unitary V_RL: eigenphases clustered when
/// |e^{i theta_i} - e^{i theta_j}| <= tol, projectors orthogonal and complete
/// (their sum is the identity), clusters ordered by ascending phase.
/// Throws NumericError if ||V+V - 1|| exceeds 1e-10.
std::vector<PhaseProjector> spectral_decompose(const ControlledUnitaryModel& model,
                                               double tol = 1e-9);

/// One term of the constructive separable form: weight mu(lambda), the pure
/// A-side state alpha_R |R> + alpha_L e^{i theta} |L>, and the conditioned
/// B-side density operator sigma_B(lambda).
struct SeparableEntry {
  double weight;
  double theta;
  Eigen::Vector2cd a_state;
  Eigen::Matrix2cd b_density;
};

struct SeparableDecomposition {
  std::vector<SeparableEntry> entries;
};

/// Explicit separable decomposition of build_rho(model): weights
/// mu(lambda) = <chi|(P_lambda x 1)|chi>, conditioned B states normalized by
/// mu(lambda); entries with mu < 1e-14 are dropped. Throws InvariantError if
/// the weights fail to sum to 1 within 1e-10.
SeparableDecomposition separable_decomposition(const ControlledUnitaryModel& model,
                                               double tol = 1e-9);

/// Sum of weight * |psi><psi| x sigma_B over the decomposition entries;
/// equals build_rho(model) entrywise within 1e-10.
Eigen::Matrix4cd reconstruct(const SeparableDecomposition& decomposition);

struct ControlledUnitaryForm {
  /// Operator-norm distance between U_AF = |R><R| x U_{A_R} + |L><L| x U_{A_L}
  /// and the factored form (1 x U_{A_R}) exp(-i m_A x X_F).
  double reconstruction_error;
  /// Eigenvalues of m_A = 0 |R><R| + 1 |L><L|; always (0, 1).
  std::array<double, 2> m_a_eigenvalues;
};

/// Rewrites the branch-controlled unitary as a local unitary times the
/// exponential of the Schmidt rank-1 generator m_A x X_F, with
/// X_F = i log(V_RL) on the principal branch (eigenphases in (-pi, pi]).
ControlledUnitaryForm controlled_unitary_form(const ControlledUnitaryModel& model);

}  // namespace fieldlink
