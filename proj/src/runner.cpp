#include "fieldlink/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "fieldlink/entanglement.hpp"
#include "fieldlink/errors.hpp"
#include "fieldlink/oracle.hpp"
#include "fieldlink/separability.hpp"

namespace fieldlink {

namespace {

constexpr std::array<int, 4> kModelDims = {2, 3, 4, 6};

double min_eigenvalue(const Eigen::Matrix2cd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

std::string format_fixed(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9e", value);
  return buf;
}

}  // namespace

std::string format_full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

SeparabilityResiduals separability_residuals(std::uint64_t seed, int n_models) {
  SeparabilityResiduals r;
  r.models = n_models;
  for (int i = 0; i < n_models; ++i) {
    const int dim_a = kModelDims[i % kModelDims.size()];
    const int dim_b = kModelDims[(i / kModelDims.size()) % kModelDims.size()];
    const ControlledUnitaryModel model = random_model(seed + i, dim_a, dim_b);

    const TwoQubitState rho = build_rho(model);
    r.worst_negativity = std::max(r.worst_negativity, negativity(rho));

    const SeparableDecomposition dec = separable_decomposition(model);
    const Eigen::Matrix4cd rec = reconstruct(dec);
    r.worst_reconstruction =
        std::max(r.worst_reconstruction, (rec - rho.matrix()).cwiseAbs().maxCoeff());
    double weight_sum = 0.0;
    for (const SeparableEntry& e : dec.entries) {
      weight_sum += e.weight;
      r.worst_sigma_b_min_eig = std::min(r.worst_sigma_b_min_eig, min_eigenvalue(e.b_density));
    }
    r.worst_weight_sum_dev = std::max(r.worst_weight_sum_dev, std::abs(weight_sum - 1.0));

    const ControlledUnitaryForm form = controlled_unitary_form(model);
    r.worst_cu_residual = std::max(r.worst_cu_residual, form.reconstruction_error);
    if (form.m_a_eigenvalues[0] != 0.0 || form.m_a_eigenvalues[1] != 1.0)
      r.m_a_eigenvalues_exact = false;
  }
  return r;
}

double closed_form_pauli_jordan(double mass, double dt, double dx) {
  const double s2 = dt * dt - dx * dx;
  if (s2 < 0.0) return 0.0;
  const double sign = dt > 0.0 ? 1.0 : (dt < 0.0 ? -1.0 : 0.0);
  return -0.5 * sign * std::cyl_bessel_j(0.0, mass * std::sqrt(s2));
}

PauliJordanComparison pauli_jordan_comparison(const FieldSpec& spec, double extent, double step,
                                              double cone_exclusion) {
  PauliJordanComparison cmp;
  const int n = static_cast<int>(std::round(2.0 * extent / step));
  for (int i = 0; i <= n; ++i) {
    const double dt = -extent + step * i;
    for (int j = 0; j <= n; ++j) {
      const double dx = -extent + step * j;
      if (std::abs(dt - dx) < cone_exclusion || std::abs(dt + dx) < cone_exclusion) continue;
      const double num = pauli_jordan(spec, dt, dx);
      const double ref = closed_form_pauli_jordan(spec.mass, dt, dx);
      cmp.max_abs_error = std::max(cmp.max_abs_error, std::abs(num - ref));
      if (dx * dx > dt * dt) cmp.max_spacelike_abs = std::max(cmp.max_spacelike_abs, std::abs(num));
      ++cmp.points;
    }
  }
  return cmp;
}

OracleComparison engine_oracle_comparison(const Scenario& s, const FieldSpec& spec,
                                          int fock_cutoff, int steps, double quad_step) {
  const TwoQubitState engine = reduced_density(s, spec, quad_step);
  const TwoQubitState coarse = dense_evolve(s, spec, fock_cutoff, steps);
  const TwoQubitState fine = dense_evolve(s, spec, fock_cutoff, 2 * steps);
  return OracleComparison{trace_distance(engine, coarse), trace_distance(engine, fine)};
}

FieldSpec weak_single_mode_field() { return FieldSpec{1.0, 10.0, 0, 0.0}; }

Scenario weak_single_mode_scenario() {
  const double amp = std::numbers::sqrt2 / 2.0;
  return Scenario{Trajectory::static_at(0.5, 2.0),
                  Trajectory::static_at(-0.5, 2.0),
                  Trajectory::static_at(1.5, 2.0),
                  Trajectory::static_at(2.5, 2.0),
                  {std::complex<double>(amp, 0.0), std::complex<double>(amp, 0.0)},
                  {std::complex<double>(amp, 0.0), std::complex<double>(amp, 0.0)},
                  0.05,
                  0.05,
                  2.0};
}

FieldSpec weak_two_mode_field() { return FieldSpec{1.0, 10.0, 1, 0.0}; }

Scenario weak_two_mode_scenario() {
  Scenario s = weak_single_mode_scenario();
  s.coupling_a = 0.05;
  s.coupling_b = 0.08;
  return s;
}

std::string run_report(const RunConfig& config) {
  const Scenario& s = config.require_scenario();
  const CausalClass cls = causal_classification(s, config.margin, config.field.smear_width);
  const EngineResult result = evolve(s, config.field, config.quad_step());

  std::ostringstream out;
  out << "classification: " << to_string(cls) << "\n";
  out << "negativity: " << format_fixed(negativity(result.rho)) << "\n";
  out << "mutual_information: " << format_fixed(mutual_information(result.rho)) << "\n";
  out << "concurrence: " << format_fixed(concurrence(result.rho)) << "\n";
  out << "entangling_phase: " << format_fixed(result.entangling_phase) << "\n";
  out << "max_cross_phase: " << format_fixed(result.cross_phase.cwiseAbs().maxCoeff()) << "\n";
  out << "cross_dephasing: " << format_fixed(result.cross_dephasing) << "\n";
  out << "truncation: L = " << format_full(config.field.box_length)
      << ", N = " << config.field.mode_cutoff << "\n";
  out << "overlap magnitudes (RR, RL, LR, LL):\n";
  for (int r = 0; r < 4; ++r) {
    out << " ";
    for (int c = 0; c < 4; ++c) out << " " << format_fixed(std::abs(result.overlaps(r, c)));
    out << "\n";
  }
  if (config.qgem) out << "\n" << qgem_report(config);
  return out.str();
}

std::string sweep_csv(const RunConfig& config, const std::string& parameter,
                      const std::vector<double>& values) {
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  read_parameter(config, parameter);  // reject unknown keys before running
  std::ostringstream out;
  out << parameter
      << ",classification,negativity,mutual_information,cross_phase,box_length,mode_cutoff\n";
  for (const double value : values) {
    RunConfig point = config;
    apply_override(point, parameter, format_full(value));
    const Scenario& s = point.require_scenario();
    const CausalClass cls = causal_classification(s, point.margin, point.field.smear_width);
    const EngineResult result = evolve(s, point.field, point.quad_step());
    out << format_full(value) << "," << to_string(cls) << ","
        << format_full(negativity(result.rho)) << ","
        << format_full(mutual_information(result.rho)) << ","
        << format_full(result.cross_phase.cwiseAbs().maxCoeff()) << ","
        << format_full(point.field.box_length) << "," << point.field.mode_cutoff << "\n";
  }
  return out.str();
}

std::string qgem_report(const RunConfig& config) {
  const QgemConfig& q = config.require_qgem();
  const double step = config.qgem_quad_step();
  std::array<double, 4> phases;
  phases[0] = newton_phase(q, Branch::R, Branch::R, step);
  phases[1] = newton_phase(q, Branch::R, Branch::L, step);
  phases[2] = newton_phase(q, Branch::L, Branch::R, step);
  phases[3] = newton_phase(q, Branch::L, Branch::L, step);
  const double delta = phases[0] + phases[3] - phases[1] - phases[2];
  const Eigen::Vector4cd state = qgem_state(phases, q.alpha, q.beta);

  std::ostringstream out;
  out << "phi_rr: " << format_fixed(phases[0]) << "\n";
  out << "phi_rl: " << format_fixed(phases[1]) << "\n";
  out << "phi_lr: " << format_fixed(phases[2]) << "\n";
  out << "phi_ll: " << format_fixed(phases[3]) << "\n";
  out << "delta_phi: " << format_fixed(delta) << "\n";
  out << "qgem_concurrence: " << format_fixed(qgem_concurrence(state)) << "\n";
  return out.str();
}

VerifyResult verify_suite(std::uint64_t seed) {
  std::ostringstream out;
  bool pass = true;
  const auto line = [&](const char* name, double value, double bound, bool below) {
    const bool ok = below ? value <= bound : value >= bound;
    pass = pass && ok;
    out << "  " << name << " " << format_fixed(value) << "  (" << (below ? "<= " : ">= ")
        << format_fixed(bound) << ")  " << (ok ? "ok" : "FAIL") << "\n";
  };

  const SeparabilityResiduals sep = separability_residuals(seed, 200);
  out << "separability suite: " << sep.models << " random models, dims in {2,3,4,6}\n";
  line("worst negativity:          ", sep.worst_negativity, 1e-12, true);
  line("worst reconstruction error:", sep.worst_reconstruction, 1e-10, true);
  line("worst weight-sum deviation:", sep.worst_weight_sum_dev, 1e-12, true);
  line("worst sigma_B eigenvalue:  ", sep.worst_sigma_b_min_eig, -1e-12, false);
  line("controlled-unitary error:  ", sep.worst_cu_residual, 1e-10, true);
  if (!sep.m_a_eigenvalues_exact) {
    pass = false;
    out << "  m_A eigenvalues:           not (0, 1)  FAIL\n";
  } else {
    out << "  m_A eigenvalues:           (0, 1)  ok\n";
  }

  const FieldSpec pj_spec{1.0, 200.0, 2048, 0.0};
  const PauliJordanComparison pj = pauli_jordan_comparison(pj_spec, 5.0, 0.5, 2.5);
  out << "pauli-jordan vs closed form: L = 200, N = 2048, grid step 0.5, cone exclusion 2.5 ("
      << pj.points << " points)\n";
  line("max abs error:             ", pj.max_abs_error, 2e-3, true);
  line("max spacelike |Delta|:     ", pj.max_spacelike_abs, 2e-3, true);

  const OracleComparison single = engine_oracle_comparison(
      weak_single_mode_scenario(), weak_single_mode_field(), 8, 256, 2.0 / 512);
  out << "engine vs dense oracle, single mode (fock cutoff 8, 256/512 steps)\n";
  line("trace distance:            ", single.trace_distance, 1e-2, true);
  line("step-halving ratio:        ", single.ratio(), 3.5, false);
  const OracleComparison two = engine_oracle_comparison(
      weak_two_mode_scenario(), weak_two_mode_field(), 4, 256, 2.0 / 512);
  out << "engine vs dense oracle, two-sided modes (fock cutoff 4, 256/512 steps)\n";
  line("trace distance:            ", two.trace_distance, 1e-2, true);
  line("step-halving ratio:        ", two.ratio(), 3.5, false);

  out << (pass ? "VERIFY PASS\n" : "VERIFY FAIL\n");
  return VerifyResult{out.str(), pass};
}

}  // namespace fieldlink
