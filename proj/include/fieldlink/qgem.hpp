#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <numbers>
#include <vector>

namespace fieldlink {

struct Node3 {
  double time;
  Eigen::Vector3d position;
};

/// Piecewise-linear 3D worldline on [0, t_final]; strictly increasing node
/// times, first node at t = 0. No speed limit here: the interaction is the
/// instantaneous Newtonian potential.
class Trajectory3 {
 public:
  explicit Trajectory3(std::vector<Node3> nodes);

  static Trajectory3 static_at(const Eigen::Vector3d& position, double t_final);

  double t_final() const { return nodes_.back().time; }
  Eigen::Vector3d position(double t) const;

 private:
  std::vector<Node3> nodes_;
};

enum class Branch { R, L };

/// Two masses, each superposed over two 3D branch trajectories, interacting
/// through the Newtonian potential.
struct QgemConfig {
  double mass_a = 1.0;
  double mass_b = 1.0;
  double newton_g = 1.0;
  double t_final = 1.0;
  std::vector<Trajectory3> a_branches;  ///< exactly 2: R, L
  std::vector<Trajectory3> b_branches;  ///< exactly 2: R, L
  std::array<std::complex<double>, 2> alpha{std::complex<double>(std::numbers::sqrt2 / 2.0, 0.0),
                                            std::complex<double>(std::numbers::sqrt2 / 2.0, 0.0)};
  std::array<std::complex<double>, 2> beta{std::complex<double>(std::numbers::sqrt2 / 2.0, 0.0),
                                           std::complex<double>(std::numbers::sqrt2 / 2.0, 0.0)};
  double d_min = 1e-6;

  void validate() const;
};

/// Accumulated phase Phi_PQ = Int_0^tf dt G m_A m_B / |x_A_P(t) - x_B_Q(t)|
/// by composite Simpson. Throws NumericError if any sampled distance drops
/// below d_min.
double newton_phase(const QgemConfig& cfg, Branch branch_a, Branch branch_b, double quad_step);

/// Evolved four-branch pure state: amplitudes alpha_P beta_Q e^{i Phi_PQ}
/// over (RR, RL, LR, LL). Unit norm for normalized inputs.
Eigen::Vector4cd qgem_state(const std::array<double, 4>& phases,
                            const std::array<std::complex<double>, 2>& alpha,
                            const std::array<std::complex<double>, 2>& beta);

/// Concurrence of the pure two-qubit state, 2 |det of the 2x2 amplitude
/// matrix|. For balanced amplitudes this equals |sin(DeltaPhi / 2)| with
/// DeltaPhi = Phi_RR + Phi_LL - Phi_RL - Phi_LR.
double qgem_concurrence(const Eigen::Vector4cd& state);

}  // namespace fieldlink
