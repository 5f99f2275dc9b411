#include "fieldlink/qgem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fieldlink/errors.hpp"

namespace fieldlink {

Trajectory3::Trajectory3(std::vector<Node3> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw ConfigError("3D trajectory needs at least two nodes");
  if (nodes_.front().time != 0.0) throw ConfigError("3D trajectory must start at t = 0");
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (nodes_[i].time <= nodes_[i - 1].time)
      throw ConfigError("3D trajectory node times must be strictly increasing");
  }
}

Trajectory3 Trajectory3::static_at(const Eigen::Vector3d& position, double t_final) {
  return Trajectory3({{0.0, position}, {t_final, position}});
}

Eigen::Vector3d Trajectory3::position(double t) const {
  if (t < 0.0 || t > t_final()) throw std::domain_error("3D trajectory sampled outside [0, t_final]");
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t,
                             [](double v, const Node3& n) { return v < n.time; });
  if (it == nodes_.begin()) return nodes_.front().position;
  if (it == nodes_.end()) return nodes_.back().position;
  const Node3& hi = *it;
  const Node3& lo = *(it - 1);
  const double f = (t - lo.time) / (hi.time - lo.time);
  return lo.position + f * (hi.position - lo.position);
}

void QgemConfig::validate() const {
  if (!(mass_a > 0.0) || !(mass_b > 0.0)) throw ConfigError("qgem masses must be > 0");
  if (newton_g < 0.0) throw ConfigError("qgem.newton_g must be >= 0");
  if (!(t_final > 0.0)) throw ConfigError("qgem.t_final must be > 0");
  if (!(d_min > 0.0)) throw ConfigError("qgem.d_min must be > 0");
  if (a_branches.size() != 2 || b_branches.size() != 2)
    throw ConfigError("qgem needs exactly two branches per object");
  for (const auto& side : {a_branches, b_branches})
    for (const auto& t : side)
      if (std::abs(t.t_final() - t_final) > 1e-12)
        throw ConfigError("qgem trajectories must share t_final");
  const double na = std::norm(alpha[0]) + std::norm(alpha[1]);
  const double nb = std::norm(beta[0]) + std::norm(beta[1]);
  if (std::abs(na - 1.0) > 1e-12 || std::abs(nb - 1.0) > 1e-12)
    throw ConfigError("qgem branch amplitudes must be normalized");
}

double newton_phase(const QgemConfig& cfg, Branch branch_a, Branch branch_b, double quad_step) {
  cfg.validate();
  if (!(quad_step > 0.0)) throw ConfigError("quad_step must be > 0");
  int n = static_cast<int>(std::ceil(cfg.t_final / quad_step - 1e-9));
  if (n < 16) throw ConfigError("quad_step must divide t_final into at least 16 steps");
  n += n % 2;
  const double h = cfg.t_final / n;

  const Trajectory3& ta = cfg.a_branches[branch_a == Branch::R ? 0 : 1];
  const Trajectory3& tb = cfg.b_branches[branch_b == Branch::R ? 0 : 1];
  const auto integrand = [&](double t) {
    const double d = (ta.position(t) - tb.position(t)).norm();
    if (d < cfg.d_min)
      throw NumericError("branch distance " + std::to_string(d) + " below d_min at t = " +
                         std::to_string(t));
    return cfg.newton_g * cfg.mass_a * cfg.mass_b / d;
  };

  double acc = integrand(0.0) + integrand(cfg.t_final);
  for (int i = 1; i < n; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * integrand(h * i);
  return acc * h / 3.0;
}

Eigen::Vector4cd qgem_state(const std::array<double, 4>& phases,
                            const std::array<std::complex<double>, 2>& alpha,
                            const std::array<std::complex<double>, 2>& beta) {
  const double na = std::norm(alpha[0]) + std::norm(alpha[1]);
  const double nb = std::norm(beta[0]) + std::norm(beta[1]);
  if (std::abs(na - 1.0) > 1e-12 || std::abs(nb - 1.0) > 1e-12)
    throw ConfigError("qgem_state amplitudes must be normalized");
  Eigen::Vector4cd state;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      state[2 * p + q] = alpha[p] * beta[q] * std::polar(1.0, phases[2 * p + q]);
  return state;
}

double qgem_concurrence(const Eigen::Vector4cd& state) {
  if (std::abs(state.norm() - 1.0) > 1e-9)
    throw NumericError("qgem_concurrence needs a unit-norm state");
  // 2 |det| of the 2x2 amplitude matrix [[RR, RL], [LR, LL]]
  return 2.0 * std::abs(state[0] * state[3] - state[1] * state[2]);
}

}  // namespace fieldlink
