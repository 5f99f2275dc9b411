#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fieldlink/config.hpp"
#include "fieldlink/gaussian_engine.hpp"

namespace fieldlink {

/// Worst-case residuals of the randomized separability suite: seeded models
/// with side dimensions drawn from {2, 3, 4, 6}.
struct SeparabilityResiduals {
  int models = 0;
  double worst_negativity = 0.0;
  double worst_reconstruction = 0.0;
  double worst_weight_sum_dev = 0.0;
  double worst_sigma_b_min_eig = 0.0;  ///< most negative eigenvalue seen (0 if none)
  double worst_cu_residual = 0.0;
  bool m_a_eigenvalues_exact = true;
};

SeparabilityResiduals separability_residuals(std::uint64_t seed, int n_models);

/// Continuum Pauli-Jordan kernel -1/2 sgn(dt) theta(dt^2 - dx^2) J0(m s)
/// with s = sqrt(dt^2 - dx^2); the light cone itself uses theta(0) = 1.
double closed_form_pauli_jordan(double mass, double dt, double dx);

struct PauliJordanComparison {
  double max_abs_error = 0.0;      ///< |mode sum - closed form| over the grid
  double max_spacelike_abs = 0.0;  ///< |mode sum| over strictly spacelike grid points
  int points = 0;
};

/// Compares the truncated mode sum against the continuum closed form on the
/// uniform grid |dt|, |dx| <= extent with the given step. cone_exclusion > 0
/// keeps only points whose null coordinates |dt - dx| and |dt + dx| both
/// exceed it (the sharp mode cutoff rings near the light cone, where the
/// closed form is discontinuous and pointwise convergence fails).
PauliJordanComparison pauli_jordan_comparison(const FieldSpec& spec, double extent, double step,
                                              double cone_exclusion);

/// Engine vs dense-Fock-oracle comparison at two oracle step counts.
struct OracleComparison {
  double trace_distance = 0.0;       ///< oracle at `steps`
  double trace_distance_half = 0.0;  ///< oracle at 2 * steps
  double ratio() const { return trace_distance / trace_distance_half; }
};

OracleComparison engine_oracle_comparison(const Scenario& s, const FieldSpec& spec,
                                          int fock_cutoff, int steps, double quad_step);

/// Built-in weak-coupling fixtures for the oracle cross-check.
FieldSpec weak_single_mode_field();
Scenario weak_single_mode_scenario();
FieldSpec weak_two_mode_field();
Scenario weak_two_mode_scenario();

/// Full-precision (%.17g) decimal formatting used for CSV output.
std::string format_full(double value);

/// Scenario report: causal classification, entanglement and correlation
/// measures, engine diagnostics and the overlap-matrix magnitudes; appends
/// the Newtonian-phase block when the config carries a [qgem] section.
std::string run_report(const RunConfig& config);

/// One CSV row per parameter value, deterministic order and formatting.
std::string sweep_csv(const RunConfig& config, const std::string& parameter,
                      const std::vector<double>& values);

/// Newtonian-phase report: the four branch phases, their gauge-invariant
/// second difference and the concurrence of the evolved pure state.
std::string qgem_report(const RunConfig& config);

struct VerifyResult {
  std::string report;
  bool pass = false;
};

/// Randomized separability suite, Pauli-Jordan closed-form comparison and
/// the engine-vs-oracle fixtures, with worst-case residuals.
VerifyResult verify_suite(std::uint64_t seed);

}  // namespace fieldlink
