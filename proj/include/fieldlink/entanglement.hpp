#pragma once

#include <Eigen/Dense>
#include <complex>

namespace fieldlink {

/// Which tensor factor an operation acts on. Basis order throughout the
/// library is (RR, RL, LR, LL): index = 2*p + q with p the A branch and
/// q the B branch (R = 0, L = 1).
enum class Subsystem { A, B };

/// 4x4 density operator over the two which-path qubits.
///
/// Construction validates hermiticity (1e-12), unit trace (1e-12) and
/// positivity (eigenvalues >= -1e-10) and throws InvariantError naming the
/// violated invariant otherwise.
class TwoQubitState {
 public:
  static constexpr double kHermTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPsdTol = 1e-10;

  explicit TwoQubitState(const Eigen::Matrix4cd& matrix);

  const Eigen::Matrix4cd& matrix() const { return matrix_; }

  /// Reduced state of one qubit (partial trace over the other).
  Eigen::Matrix2cd reduced(Subsystem keep) const;

 private:
  Eigen::Matrix4cd matrix_;
};

/// Transposes the indices of the chosen factor. Preserves hermiticity and
/// trace; the result need not be positive (that is the point).
Eigen::Matrix4cd partial_transpose(const TwoQubitState& rho, Subsystem subsystem);

/// Sum of |negative eigenvalues| of the partial transpose. Zero iff the
/// state is separable (two-qubit PPT theorem). Independent of the
/// transposed subsystem.
double negativity(const TwoQubitState& rho);

/// S(rho_A) + S(rho_B) - S(rho) in nats. Eigenvalues below 1e-14 are
/// treated as exact zeros in x*log(x); eigenvalues below -1e-10 raise
/// InvariantError instead of being clipped.
double mutual_information(const TwoQubitState& rho);

/// Wootters concurrence of a (generally mixed) two-qubit state. Agrees with
/// 2|det| of the amplitude matrix on pure states.
double concurrence(const TwoQubitState& rho);

/// Trace distance (1/2)||rho - sigma||_1.
double trace_distance(const TwoQubitState& rho, const TwoQubitState& sigma);

}  // namespace fieldlink
