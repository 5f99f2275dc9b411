#include "fieldlink/oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "fieldlink/errors.hpp"

namespace fieldlink {

namespace {

using Complex = std::complex<double>;

constexpr int kMaxFockDim = 2048;

// Ladder operator entries for one mode embedded in the full product space.
// Occupation digits are little-endian in the mode index: basis state b has
// occupation n_m = (b / stride_m) % (cutoff + 1).
struct LadderOp {
  // annihilation: a |.., n, ..> = sqrt(n) |.., n-1, ..>
  // stored as, per basis state b with n > 0: pair (b, b - stride) weight sqrt(n)
  std::vector<int> src, dst;
  std::vector<double> amp;
};

LadderOp make_ladder(int mode, int n_modes, int cutoff, int dim) {
  LadderOp op;
  int stride = 1;
  for (int m = 0; m < mode; ++m) stride *= cutoff + 1;
  (void)n_modes;
  for (int b = 0; b < dim; ++b) {
    const int occ = (b / stride) % (cutoff + 1);
    if (occ > 0) {
      op.src.push_back(b);
      op.dst.push_back(b - stride);
      op.amp.push_back(std::sqrt(static_cast<double>(occ)));
    }
  }
  return op;
}

struct FockSpace {
  int n_modes;
  int cutoff;
  int dim;
  std::vector<double> k, w, g;  // per mode: wavenumber, frequency, coupling norm
  std::vector<LadderOp> ladders;
};

FockSpace make_space(const FieldSpec& spec, int fock_cutoff) {
  spec.validate();
  if (spec.mode_cutoff > 2) throw ConfigError("dense_evolve requires mode_cutoff <= 2");
  if (fock_cutoff < 1) throw ConfigError("fock_cutoff must be >= 1");
  FockSpace fs;
  fs.n_modes = 2 * spec.mode_cutoff + 1;
  fs.cutoff = fock_cutoff;
  double dim = std::pow(fock_cutoff + 1.0, fs.n_modes);
  if (dim > kMaxFockDim) throw ConfigError("Fock dimension exceeds " + std::to_string(kMaxFockDim));
  fs.dim = static_cast<int>(dim + 0.5);
  const double dk = 2.0 * std::numbers::pi / spec.box_length;
  for (int n = -spec.mode_cutoff; n <= spec.mode_cutoff; ++n) {
    const double k = dk * n;
    const double w = std::hypot(spec.mass, k);
    double g = 1.0 / std::sqrt(2.0 * spec.box_length * w);
    if (spec.smear_width > 0.0)
      g *= std::exp(-0.5 * k * k * spec.smear_width * spec.smear_width);
    fs.k.push_back(k);
    fs.w.push_back(w);
    fs.g.push_back(g);
  }
  for (int m = 0; m < fs.n_modes; ++m)
    fs.ladders.push_back(make_ladder(m, fs.n_modes, fock_cutoff, fs.dim));
  return fs;
}

// psi_out += -i H(t) psi with
// H(t) = sum_m [ c_m(t) a_m + conj(c_m(t)) a_m+ ],
// c_m(t) = g_m sum_currents j(t) e^{i (k_m x(t) - w_m t)}.
void apply_hamiltonian(const FockSpace& fs, const std::vector<Complex>& c,
                       const Eigen::VectorXcd& psi, Eigen::VectorXcd& out) {
  out.setZero();
  const Complex minus_i(0.0, -1.0);
  for (int m = 0; m < fs.n_modes; ++m) {
    const LadderOp& op = fs.ladders[m];
    for (std::size_t e = 0; e < op.src.size(); ++e) {
      // annihilation part: <dst| a |src>
      out[op.dst[e]] += minus_i * c[m] * op.amp[e] * psi[op.src[e]];
      // creation part: <src| a+ |dst>
      out[op.src[e]] += minus_i * std::conj(c[m]) * op.amp[e] * psi[op.dst[e]];
    }
  }
}

}  // namespace

TwoQubitState dense_evolve(const Scenario& s, const FieldSpec& spec, int fock_cutoff, int steps) {
  s.validate();
  if (steps < 256) throw ConfigError("dense_evolve requires steps >= 256");
  const FockSpace fs = make_space(spec, fock_cutoff);
  const double h = s.t_final / steps;

  const std::array<const Trajectory*, 2> a_branches = {&s.a_right, &s.a_left};
  const std::array<const Trajectory*, 2> b_branches = {&s.b_right, &s.b_left};

  std::array<Eigen::VectorXcd, 4> final_states;
  Eigen::VectorXcd k1(fs.dim), k2(fs.dim), mid(fs.dim);
  std::vector<Complex> c(fs.n_modes);

  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      const Trajectory& ta = *a_branches[p];
      const Trajectory& tb = *b_branches[q];
      const auto couplings_at = [&](double t) {
        const double xa = ta.position(t);
        const double xb = tb.position(t);
        const double ja = s.coupling_a * ta.weight(t);
        const double jb = s.coupling_b * tb.weight(t);
        for (int m = 0; m < fs.n_modes; ++m) {
          c[m] = fs.g[m] * (ja * std::polar(1.0, fs.k[m] * xa - fs.w[m] * t) +
                            jb * std::polar(1.0, fs.k[m] * xb - fs.w[m] * t));
        }
      };

      Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(fs.dim);
      psi[0] = 1.0;  // vacuum
      for (int i = 0; i < steps; ++i) {
        const double t = h * i;
        couplings_at(t);
        apply_hamiltonian(fs, c, psi, k1);
        mid = psi + (0.5 * h) * k1;
        couplings_at(t + 0.5 * h);
        apply_hamiltonian(fs, c, mid, k2);
        psi += h * k2;
      }
      final_states[2 * p + q] = psi;
    }
  }

  const std::array<Complex, 4> w = {s.alpha[0] * s.beta[0], s.alpha[0] * s.beta[1],
                                    s.alpha[1] * s.beta[0], s.alpha[1] * s.beta[1]};
  Eigen::Matrix4cd rho;
  for (int r = 0; r < 4; ++r)
    for (int cidx = 0; cidx < 4; ++cidx)
      rho(r, cidx) = w[r] * std::conj(w[cidx]) * final_states[cidx].dot(final_states[r]);
  rho /= rho.trace().real();
  return TwoQubitState(rho);
}

Eigen::MatrixXcd haar_unitary(std::mt19937_64& rng, int dim) {
  if (dim < 1) throw ConfigError("haar_unitary needs dim >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

ControlledUnitaryModel random_model(std::uint64_t seed, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1) throw ConfigError("random_model needs dims >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ControlledUnitaryModel model;
  model.u_a_r = haar_unitary(rng, dim_a);
  model.u_a_l = haar_unitary(rng, dim_a);
  model.u_b_r = haar_unitary(rng, dim_b);
  model.u_b_l = haar_unitary(rng, dim_b);
  model.chi.resize(static_cast<Eigen::Index>(dim_a) * dim_b);
  for (Eigen::Index i = 0; i < model.chi.size(); ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    model.chi[i] = Complex(re, im);
  }
  model.chi.normalize();
  for (auto* amps : {&model.alpha, &model.beta}) {
    const double ar = gauss(rng);
    const double ai = gauss(rng);
    const double br = gauss(rng);
    const double bi = gauss(rng);
    const Complex a(ar, ai);
    const Complex b(br, bi);
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    (*amps)[0] = a / n;
    (*amps)[1] = b / n;
  }
  return model;
}

}  // namespace fieldlink
