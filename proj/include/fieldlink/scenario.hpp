#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

namespace fieldlink {

struct TrajectoryNode {
  double time;
  double position;
};

struct WeightStep {
  double time;   ///< step takes effect at this time (right-continuous)
  double value;
};

/// Piecewise-linear worldline on [0, t_final] with a piecewise-constant
/// weight s(t) multiplying the coupling. Node times are strictly increasing,
/// the first node sits at t = 0, and every segment is subluminal
/// (|dx/dt| < 1). The weight is right-continuous: a step at time t applies
/// on [t, next step).
class Trajectory {
 public:
  Trajectory(std::vector<TrajectoryNode> nodes, std::vector<WeightStep> weights = {{0.0, 1.0}});

  static Trajectory static_at(double position, double t_final, double weight = 1.0);

  double t_final() const { return nodes_.back().time; }
  const std::vector<TrajectoryNode>& nodes() const { return nodes_; }
  const std::vector<WeightStep>& weight_steps() const { return weights_; }

  /// Linear interpolation between nodes. Throws std::domain_error outside
  /// [0, t_final].
  double position(double t) const;

  /// Value of the last weight step at or before t. Throws std::domain_error
  /// outside [0, t_final].
  double weight(double t) const;

 private:
  std::vector<TrajectoryNode> nodes_;
  std::vector<WeightStep> weights_;
};

/// (position, weight) of the local current at time t.
std::pair<double, double> sample_current(const Trajectory& traj, double t);

/// Two objects, each superposed over two branch trajectories.
struct Scenario {
  Trajectory a_right, a_left, b_right, b_left;
  std::array<std::complex<double>, 2> alpha;  ///< (alpha_R, alpha_L)
  std::array<std::complex<double>, 2> beta;   ///< (beta_R, beta_L)
  double coupling_a = 0.0;
  double coupling_b = 0.0;
  double t_final = 0.0;

  /// Throws ConfigError unless amplitudes are normalized within 1e-12, all
  /// four trajectories share t_final and couplings are >= 0.
  void validate() const;
};

enum class CausalClass { Spacelike, CausallyConnected };

/// Classifies the causal relation of the two objects' spacetime supports.
/// Spacelike iff |x_p - x_q| - |t_p - t_q| > margin for every pair of points
/// p on an A-branch support and q on a B-branch support, restricted to times
/// of nonzero weight. A positive smear width widens each support by
/// 3*smear_width in space. Equality (lightlike contact for margin = 0)
/// counts as CausallyConnected.
///
/// The minimum of the interval function over each pair of linear segments is
/// attained on the corners or on the fold lines of the piecewise-linear
/// objective, so the classifier is exact (no grid sampling).
CausalClass causal_classification(const Scenario& s, double margin = 0.0, double smear_width = 0.0);

const char* to_string(CausalClass c);

}  // namespace fieldlink
