#include "fieldlink/gaussian_engine.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "fieldlink/errors.hpp"

namespace fieldlink {

namespace {

using Complex = std::complex<double>;

struct TimeGrid {
  double h;
  std::vector<double> times;  // n+1 points, n even
};

TimeGrid make_grid(double t_final, double quad_step) {
  if (!(quad_step > 0.0)) throw ConfigError("quad_step must be > 0");
  int n = static_cast<int>(std::ceil(t_final / quad_step - 1e-9));
  if (n < 16) throw ConfigError("quad_step must divide t_final into at least 16 steps");
  n += n % 2;
  TimeGrid grid;
  grid.h = t_final / n;
  grid.times.resize(n + 1);
  for (int i = 0; i <= n; ++i) grid.times[i] = grid.h * i;
  grid.times.back() = t_final;
  return grid;
}

// Composite Simpson over the whole grid.
Complex simpson(const std::vector<Complex>& f, double h) {
  Complex acc = 0.0;
  for (std::size_t j = 0; j + 2 < f.size(); j += 2) {
    acc += f[j] + 4.0 * f[j + 1] + f[j + 2];
  }
  return acc * (h / 3.0);
}

// Cumulative integral C[i] = Int_0^{t_i} f dt' on the same grid. Even nodes
// accumulate full Simpson pairs; odd nodes integrate the local interpolating
// quadratic over its first half, which keeps the composite error at the
// Simpson order.
void cumulative(const std::vector<Complex>& f, double h, std::vector<Complex>& out) {
  out.resize(f.size());
  out[0] = 0.0;
  for (std::size_t j = 0; j + 2 < f.size(); j += 2) {
    out[j + 1] = out[j] + (h / 12.0) * (5.0 * f[j] + 8.0 * f[j + 1] - f[j + 2]);
    out[j + 2] = out[j] + (h / 3.0) * (f[j] + 4.0 * f[j + 1] + f[j + 2]);
  }
}

// Samples of one branch current on the grid.
struct CurrentSamples {
  std::vector<double> x;  // position
  std::vector<double> j;  // coupling * weight
};

CurrentSamples sample(const Trajectory& traj, double coupling, const TimeGrid& grid) {
  CurrentSamples cs;
  cs.x.resize(grid.times.size());
  cs.j.resize(grid.times.size());
  for (std::size_t i = 0; i < grid.times.size(); ++i) {
    cs.x[i] = traj.position(grid.times[i]);
    cs.j[i] = coupling * traj.weight(grid.times[i]);
  }
  return cs;
}

// Shared per-mode machinery. For mode (k, w) and current samples (x, j) the
// profile is v_i = j_i * sm * exp(i (k x_i - w t_i)); then
//   displacement:  alpha = -i conj(Simpson(v)) / sqrt(2 L w)
//   self phase:    -(1 / 2 L w) Im Simpson(v conj(C_v))
//   cross phase:   -(1 / 2 L w) Im [Simpson(v_x conj(C_y)) + Simpson(v_y conj(C_x))]
class ModeAccumulator {
 public:
  ModeAccumulator(const FieldSpec& spec, const TimeGrid& grid) : spec_(spec), grid_(grid) {
    dk_ = 2.0 * std::numbers::pi / spec.box_length;
  }

  int mode_count() const { return 2 * spec_.mode_cutoff + 1; }

  void set_mode(int index) {
    const int n = index - spec_.mode_cutoff;
    k_ = dk_ * n;
    w_ = std::hypot(spec_.mass, k_);
    sm_ = spec_.smear_width > 0.0 ? std::exp(-0.5 * k_ * k_ * spec_.smear_width * spec_.smear_width)
                                  : 1.0;
    norm_ = 1.0 / std::sqrt(2.0 * spec_.box_length * w_);
    phase_weight_ = 1.0 / (2.0 * spec_.box_length * w_);
  }

  void profile(const CurrentSamples& cs, std::vector<Complex>& v) const {
    v.resize(grid_.times.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = cs.j[i] * sm_ * std::polar(1.0, k_ * cs.x[i] - w_ * grid_.times[i]);
    }
  }

  Complex displacement_term(const std::vector<Complex>& v) const {
    return Complex(0.0, -1.0) * std::conj(simpson(v, grid_.h)) * norm_;
  }

  double self_phase_term(const std::vector<Complex>& v, const std::vector<Complex>& cum) const {
    std::vector<Complex> prod(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) prod[i] = v[i] * std::conj(cum[i]);
    return -phase_weight_ * simpson(prod, grid_.h).imag();
  }

  double cross_phase_term(const std::vector<Complex>& vx, const std::vector<Complex>& cx,
                          const std::vector<Complex>& vy, const std::vector<Complex>& cy) const {
    std::vector<Complex> prod(vx.size());
    for (std::size_t i = 0; i < vx.size(); ++i) {
      prod[i] = vx[i] * std::conj(cy[i]) + vy[i] * std::conj(cx[i]);
    }
    return -phase_weight_ * simpson(prod, grid_.h).imag();
  }

 private:
  const FieldSpec& spec_;
  const TimeGrid& grid_;
  double dk_ = 0.0, k_ = 0.0, w_ = 0.0, sm_ = 1.0, norm_ = 0.0, phase_weight_ = 0.0;
};

}  // namespace

DisplacementVector displacement(const FieldSpec& spec, const Trajectory& traj, double coupling,
                                double quad_step) {
  spec.validate();
  const TimeGrid grid = make_grid(traj.t_final(), quad_step);
  const CurrentSamples cs = sample(traj, coupling, grid);
  ModeAccumulator acc(spec, grid);
  DisplacementVector d;
  d.amplitudes.resize(acc.mode_count());
  std::vector<Complex> v;
  for (int m = 0; m < acc.mode_count(); ++m) {
    acc.set_mode(m);
    acc.profile(cs, v);
    d.amplitudes[m] = acc.displacement_term(v);
  }
  return d;
}

double influence_phase(const FieldSpec& spec, const Trajectory& traj, double coupling,
                       double quad_step) {
  spec.validate();
  const TimeGrid grid = make_grid(traj.t_final(), quad_step);
  const CurrentSamples cs = sample(traj, coupling, grid);
  ModeAccumulator acc(spec, grid);
  double theta = 0.0;
  std::vector<Complex> v, c;
  for (int m = 0; m < acc.mode_count(); ++m) {
    acc.set_mode(m);
    acc.profile(cs, v);
    cumulative(v, grid.h, c);
    theta += acc.self_phase_term(v, c);
  }
  return theta;
}

double influence_phase(const FieldSpec& spec, const Trajectory& traj_x, const Trajectory& traj_y,
                       double coupling_x, double coupling_y, double quad_step) {
  spec.validate();
  if (std::abs(traj_x.t_final() - traj_y.t_final()) > 1e-12)
    throw ConfigError("influence_phase requires currents sharing t_final");
  const TimeGrid grid = make_grid(traj_x.t_final(), quad_step);
  const CurrentSamples cx = sample(traj_x, coupling_x, grid);
  const CurrentSamples cy = sample(traj_y, coupling_y, grid);
  ModeAccumulator acc(spec, grid);
  double theta = 0.0;
  std::vector<Complex> vx, vy, ix, iy;
  for (int m = 0; m < acc.mode_count(); ++m) {
    acc.set_mode(m);
    acc.profile(cx, vx);
    acc.profile(cy, vy);
    cumulative(vx, grid.h, ix);
    cumulative(vy, grid.h, iy);
    theta += acc.cross_phase_term(vx, ix, vy, iy);
  }
  return theta;
}

EngineResult evolve(const Scenario& s, const FieldSpec& spec, double quad_step) {
  s.validate();
  spec.validate();
  const TimeGrid grid = make_grid(s.t_final, quad_step);

  // order: A_R, A_L, B_R, B_L
  const std::array<const Trajectory*, 4> trajs = {&s.a_right, &s.a_left, &s.b_right, &s.b_left};
  const std::array<double, 4> couplings = {s.coupling_a, s.coupling_a, s.coupling_b, s.coupling_b};
  std::array<CurrentSamples, 4> cs;
  for (int t = 0; t < 4; ++t) cs[t] = sample(*trajs[t], couplings[t], grid);

  ModeAccumulator acc(spec, grid);
  const int modes = acc.mode_count();

  std::array<Eigen::VectorXcd, 4> disp;
  for (auto& d : disp) d.resize(modes);
  std::array<double, 4> self_phase = {0.0, 0.0, 0.0, 0.0};
  // cross[p][q]: A branch p against B branch q
  double cross[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

  std::array<std::vector<Complex>, 4> v, cum;
  for (int m = 0; m < modes; ++m) {
    acc.set_mode(m);
    for (int t = 0; t < 4; ++t) {
      acc.profile(cs[t], v[t]);
      cumulative(v[t], grid.h, cum[t]);
      disp[t][m] = acc.displacement_term(v[t]);
      self_phase[t] += acc.self_phase_term(v[t], cum[t]);
    }
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q)
        cross[p][q] += acc.cross_phase_term(v[p], cum[p], v[2 + q], cum[2 + q]);
  }

  // Per-branch-pair displacement and total phase.
  std::array<Eigen::VectorXcd, 4> alpha_pq;
  std::array<double, 4> theta_pq;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      alpha_pq[2 * p + q] = disp[p] + disp[2 + q];
      theta_pq[2 * p + q] = self_phase[p] + self_phase[2 + q] + cross[p][q];
    }

  Eigen::Matrix4cd overlaps;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const double phase = theta_pq[r] - theta_pq[c] + (alpha_pq[c].dot(alpha_pq[r])).imag();
      const double decay = 0.5 * (alpha_pq[r] - alpha_pq[c]).squaredNorm();
      overlaps(r, c) = std::polar(std::exp(-decay), phase);
    }
  }

  const std::array<Complex, 4> w = {s.alpha[0] * s.beta[0], s.alpha[0] * s.beta[1],
                                    s.alpha[1] * s.beta[0], s.alpha[1] * s.beta[1]};
  Eigen::Matrix4cd rho;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) rho(r, c) = w[r] * std::conj(w[c]) * overlaps(r, c);

  Eigen::Matrix2d cross_phase;
  cross_phase << cross[0][0], cross[0][1], cross[1][0], cross[1][1];
  // vacuum cross term Im<alpha_B_Q, alpha_A_P> per pair
  double vac[2][2];
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) vac[p][q] = (disp[2 + q].dot(disp[p])).imag();
  const double entangling = (cross[0][0] + cross[1][1] - cross[0][1] - cross[1][0]) -
                            (vac[0][0] + vac[1][1] - vac[0][1] - vac[1][0]);
  const double cross_dephasing = ((disp[0] - disp[1]).dot(disp[2] - disp[3])).real();

  return EngineResult{overlaps,
                      TwoQubitState(rho),
                      {self_phase[0], self_phase[1]},
                      {self_phase[2], self_phase[3]},
                      cross_phase,
                      entangling,
                      cross_dephasing};
}

Eigen::Matrix4cd branch_overlaps(const Scenario& s, const FieldSpec& spec, double quad_step) {
  return evolve(s, spec, quad_step).overlaps;
}

TwoQubitState reduced_density(const Scenario& s, const FieldSpec& spec, double quad_step) {
  return evolve(s, spec, quad_step).rho;
}

}  // namespace fieldlink
