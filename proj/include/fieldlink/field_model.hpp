#pragma once

#include <complex>
#include <vector>

namespace fieldlink {

/// Free massive scalar field in a periodic 1+1D box of length L, truncated
/// to the 2N+1 modes n in [-N, N] with k_n = 2 pi n / L and
/// omega_n = sqrt(m^2 + k_n^2). Mode functions carry box normalization
/// 1/sqrt(2 L omega_n). smear_width is the Gaussian width used to smear the
/// point currents that couple to the field (0 keeps exact delta currents);
/// it does not affect the field's own correlators.
struct FieldSpec {
  double mass = 1.0;
  double box_length = 200.0;
  int mode_cutoff = 512;
  double smear_width = 0.0;

  /// Throws ConfigError unless mass > 0, box_length > 0, mode_cutoff >= 0
  /// and smear_width >= 0.
  void validate() const;
};

struct Mode {
  double wavenumber;
  double frequency;
};

/// All 2N+1 modes ordered by ascending n.
std::vector<Mode> mode_set(const FieldSpec& spec);

/// Pauli-Jordan commutator kernel Delta with
/// [phi(t,x), phi(t',x')] = i Delta(t-t', x-x'), as the truncated mode sum
///   Delta(dt, dx) = sum_n sin(k_n dx - omega_n dt) / (L omega_n),
/// accumulated in ascending n. Exactly antisymmetric in dt, even in dx and
/// periodic under dx -> dx + L. Vanishes outside the light cone only in the
/// (L, N) -> infinity limit.
double pauli_jordan(const FieldSpec& spec, double dt, double dx);

/// Vacuum Wightman function <0|phi(t,x) phi(t',x')|0> as the truncated sum
///   W(dt, dx) = sum_n exp(i (k_n dx - omega_n dt)) / (2 L omega_n).
/// Satisfies W - conj(W) = i * pauli_jordan identically at any truncation.
std::complex<double> wightman(const FieldSpec& spec, double dt, double dx);

namespace detail {

/// Commutator kernel between two Gaussian-smeared currents: each mode term
/// is damped by exp(-k^2 * smear_sq) where smear_sq collects sigma^2/2 from
/// each participating current. smear_sq = 0 reduces to pauli_jordan.
double smeared_commutator(const FieldSpec& spec, double dt, double dx, double smear_sq);

}  // namespace detail

}  // namespace fieldlink
