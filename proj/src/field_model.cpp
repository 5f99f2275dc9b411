#include "fieldlink/field_model.hpp"

#include <cmath>
#include <numbers>

#include "fieldlink/errors.hpp"

namespace fieldlink {

void FieldSpec::validate() const {
  if (!(mass > 0.0)) throw ConfigError("field.mass must be > 0");
  if (!(box_length > 0.0)) throw ConfigError("field.box_length must be > 0");
  if (mode_cutoff < 0) throw ConfigError("field.mode_cutoff must be >= 0");
  if (smear_width < 0.0) throw ConfigError("field.smear_width must be >= 0");
}

std::vector<Mode> mode_set(const FieldSpec& spec) {
  spec.validate();
  std::vector<Mode> modes;
  modes.reserve(2 * spec.mode_cutoff + 1);
  const double dk = 2.0 * std::numbers::pi / spec.box_length;
  for (int n = -spec.mode_cutoff; n <= spec.mode_cutoff; ++n) {
    const double k = dk * n;
    modes.push_back({k, std::hypot(spec.mass, k)});
  }
  return modes;
}

namespace detail {

double smeared_commutator(const FieldSpec& spec, double dt, double dx, double smear_sq) {
  spec.validate();
  const double dk = 2.0 * std::numbers::pi / spec.box_length;
  // Pair +-n: sin(k dx - w dt) + sin(-k dx - w dt) = -2 cos(k dx) sin(w dt).
  // Accumulating pairs in ascending n keeps the serial sum reproducible while
  // halving the trig work; the pair order equals the ascending-n order up to
  // exact cancellation of the odd-in-k part.
  double sum = -std::sin(spec.mass * dt) / spec.mass;  // n = 0
  for (int n = 1; n <= spec.mode_cutoff; ++n) {
    const double k = dk * n;
    const double w = std::hypot(spec.mass, k);
    double term = -2.0 * std::cos(k * dx) * std::sin(w * dt) / w;
    if (smear_sq > 0.0) term *= std::exp(-k * k * smear_sq);
    sum += term;
  }
  return sum / spec.box_length;
}

}  // namespace detail

double pauli_jordan(const FieldSpec& spec, double dt, double dx) {
  return detail::smeared_commutator(spec, dt, dx, 0.0);
}

std::complex<double> wightman(const FieldSpec& spec, double dt, double dx) {
  spec.validate();
  const double dk = 2.0 * std::numbers::pi / spec.box_length;
  // Pair +-n: e^{i(k dx - w dt)} + e^{i(-k dx - w dt)} = 2 cos(k dx) e^{-i w dt}.
  std::complex<double> sum = std::polar(1.0 / spec.mass, -spec.mass * dt);
  for (int n = 1; n <= spec.mode_cutoff; ++n) {
    const double k = dk * n;
    const double w = std::hypot(spec.mass, k);
    sum += (2.0 * std::cos(k * dx) / w) * std::polar(1.0, -w * dt);
  }
  return sum / (2.0 * spec.box_length);
}

}  // namespace fieldlink
