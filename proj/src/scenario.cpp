#include "fieldlink/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fieldlink/errors.hpp"

namespace fieldlink {

Trajectory::Trajectory(std::vector<TrajectoryNode> nodes, std::vector<WeightStep> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.size() < 2) throw ConfigError("trajectory needs at least two nodes");
  if (nodes_.front().time != 0.0) throw ConfigError("trajectory must start at t = 0");
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    const double dt = nodes_[i].time - nodes_[i - 1].time;
    const double dx = nodes_[i].position - nodes_[i - 1].position;
    if (dt <= 0.0) throw ConfigError("trajectory node times must be strictly increasing");
    if (std::abs(dx) >= dt) throw ConfigError("trajectory segment is not subluminal (|dx/dt| < 1)");
  }
  if (weights_.empty()) throw ConfigError("trajectory weight table is empty");
  if (weights_.front().time > 0.0) throw ConfigError("first weight step must start at t <= 0");
  for (std::size_t i = 1; i < weights_.size(); ++i) {
    if (weights_[i].time <= weights_[i - 1].time)
      throw ConfigError("weight step times must be strictly increasing");
  }
  if (weights_.back().time >= t_final())
    throw ConfigError("weight steps must start before t_final");
}

Trajectory Trajectory::static_at(double position, double t_final, double weight) {
  return Trajectory({{0.0, position}, {t_final, position}}, {{0.0, weight}});
}

double Trajectory::position(double t) const {
  if (t < 0.0 || t > t_final()) throw std::domain_error("trajectory sampled outside [0, t_final]");
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t,
                             [](double v, const TrajectoryNode& n) { return v < n.time; });
  if (it == nodes_.begin()) return nodes_.front().position;
  if (it == nodes_.end()) return nodes_.back().position;
  const TrajectoryNode& hi = *it;
  const TrajectoryNode& lo = *(it - 1);
  const double f = (t - lo.time) / (hi.time - lo.time);
  return lo.position + f * (hi.position - lo.position);
}

double Trajectory::weight(double t) const {
  if (t < 0.0 || t > t_final()) throw std::domain_error("trajectory sampled outside [0, t_final]");
  auto it = std::upper_bound(weights_.begin(), weights_.end(), t,
                             [](double v, const WeightStep& s) { return v < s.time; });
  if (it == weights_.begin()) return weights_.front().value;
  return (it - 1)->value;
}

std::pair<double, double> sample_current(const Trajectory& traj, double t) {
  return {traj.position(t), traj.weight(t)};
}

void Scenario::validate() const {
  const double na = std::norm(alpha[0]) + std::norm(alpha[1]);
  const double nb = std::norm(beta[0]) + std::norm(beta[1]);
  if (std::abs(na - 1.0) > 1e-12) throw ConfigError("alpha amplitudes are not normalized");
  if (std::abs(nb - 1.0) > 1e-12) throw ConfigError("beta amplitudes are not normalized");
  if (coupling_a < 0.0 || coupling_b < 0.0) throw ConfigError("couplings must be >= 0");
  if (!(t_final > 0.0)) throw ConfigError("t_final must be > 0");
  for (const Trajectory* t : {&a_right, &a_left, &b_right, &b_left}) {
    if (std::abs(t->t_final() - t_final) > 1e-12)
      throw ConfigError("all trajectories must share t_final");
  }
}

namespace {

// One linear piece of a support: x(t) = x0 + v * (t - (time window start)),
// restricted to times of nonzero weight.
struct SupportPiece {
  double t0, t1;   // time window, t0 < t1
  double x0, v;    // x(t) = x0 + v * (t - t0)
  double x_at(double t) const { return x0 + v * (t - t0); }
};

std::vector<SupportPiece> support_pieces(const Trajectory& traj) {
  std::vector<SupportPiece> pieces;
  // cut times: trajectory nodes plus weight steps
  std::vector<double> cuts;
  for (const auto& n : traj.nodes()) cuts.push_back(n.time);
  for (const auto& w : traj.weight_steps())
    if (w.time > 0.0 && w.time < traj.t_final()) cuts.push_back(w.time);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double t0 = cuts[i];
    const double t1 = cuts[i + 1];
    const double mid = 0.5 * (t0 + t1);
    if (traj.weight(mid) == 0.0) continue;
    const double xa = traj.position(t0);
    const double xb = traj.position(t1);
    pieces.push_back({t0, t1, xa, (xb - xa) / (t1 - t0)});
  }
  return pieces;
}

// Minimum over (ta, tb) in [a.t0,a.t1] x [b.t0,b.t1] of
//   f(ta, tb) = max(0, |xa(ta) - xb(tb)| - inflate) - |ta - tb|.
// f is piecewise linear; its folds lie on ta = tb and on
// xa(ta) - xb(tb) = c for c in {-inflate, 0, +inflate}. The minimum is
// attained at a vertex of the fold arrangement restricted to the rectangle.
double pair_min(const SupportPiece& a, const SupportPiece& b, double inflate) {
  const auto objective = [&](double ta, double tb) {
    const double dx = std::abs(a.x_at(ta) - b.x_at(tb));
    return std::max(0.0, dx - inflate) - std::abs(ta - tb);
  };

  std::vector<std::pair<double, double>> cand;
  cand.reserve(32);
  const auto push = [&](double ta, double tb) {
    if (ta >= a.t0 - 1e-12 && ta <= a.t1 + 1e-12 && tb >= b.t0 - 1e-12 && tb <= b.t1 + 1e-12) {
      cand.emplace_back(std::clamp(ta, a.t0, a.t1), std::clamp(tb, b.t0, b.t1));
    }
  };

  // rectangle corners
  for (double ta : {a.t0, a.t1})
    for (double tb : {b.t0, b.t1}) push(ta, tb);

  // fold ta = tb crossing the rectangle
  {
    const double lo = std::max(a.t0, b.t0);
    const double hi = std::min(a.t1, b.t1);
    if (lo <= hi) {
      push(lo, lo);
      push(hi, hi);
    }
  }

  // folds xa(ta) - xb(tb) = c, i.e. a.v * ta - b.v * tb = c - const part
  std::vector<double> levels = {0.0};
  if (inflate > 0.0) {
    levels.push_back(inflate);
    levels.push_back(-inflate);
  }
  const double base = (a.x0 - a.v * a.t0) - (b.x0 - b.v * b.t0);
  for (double c : levels) {
    const double rhs = c - base;  // a.v * ta - b.v * tb = rhs
    // intersections with the four rectangle edges
    for (double ta : {a.t0, a.t1}) {
      if (b.v != 0.0) push(ta, (a.v * ta - rhs) / b.v);
    }
    for (double tb : {b.t0, b.t1}) {
      if (a.v != 0.0) push((rhs + b.v * tb) / a.v, tb);
    }
    // intersection with the fold ta = tb
    if (a.v != b.v) {
      const double t = rhs / (a.v - b.v);
      push(t, t);
    }
    // degenerate fold parallel to an axis: extremes already covered by edges
  }

  double best = std::numeric_limits<double>::infinity();
  for (const auto& [ta, tb] : cand) best = std::min(best, objective(ta, tb));
  return best;
}

}  // namespace

CausalClass causal_classification(const Scenario& s, double margin, double smear_width) {
  s.validate();
  if (margin < 0.0) throw ConfigError("margin must be >= 0");
  const double inflate = 6.0 * std::max(0.0, smear_width);  // 3 sigma per support

  std::vector<SupportPiece> a_pieces;
  for (const Trajectory* t : {&s.a_right, &s.a_left}) {
    auto p = support_pieces(*t);
    a_pieces.insert(a_pieces.end(), p.begin(), p.end());
  }
  std::vector<SupportPiece> b_pieces;
  for (const Trajectory* t : {&s.b_right, &s.b_left}) {
    auto p = support_pieces(*t);
    b_pieces.insert(b_pieces.end(), p.begin(), p.end());
  }

  double min_interval = std::numeric_limits<double>::infinity();
  for (const auto& a : a_pieces)
    for (const auto& b : b_pieces) min_interval = std::min(min_interval, pair_min(a, b, inflate));

  // Empty supports (all weights zero) cannot signal: treat as spacelike.
  if (!std::isfinite(min_interval)) return CausalClass::Spacelike;
  return min_interval > margin ? CausalClass::Spacelike : CausalClass::CausallyConnected;
}

const char* to_string(CausalClass c) {
  return c == CausalClass::Spacelike ? "Spacelike" : "CausallyConnected";
}

}  // namespace fieldlink
