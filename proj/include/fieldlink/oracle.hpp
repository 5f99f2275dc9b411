#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "fieldlink/entanglement.hpp"
#include "fieldlink/field_model.hpp"
#include "fieldlink/scenario.hpp"
#include "fieldlink/separability.hpp"

namespace fieldlink {

/// Brute-force reference evolution: truncated Fock ladder operators per mode,
/// the interaction-picture Hamiltonian assembled at every step, and explicit
/// midpoint (second-order) time stepping of each branch state from the
/// vacuum. No Magnus shortcut and no quadrature shared with the Gaussian
/// engine. Requires mode_cutoff <= 2, Fock dimension
/// (fock_cutoff + 1)^(2N+1) <= 2048 and steps >= 256 (ConfigError otherwise).
TwoQubitState dense_evolve(const Scenario& s, const FieldSpec& spec, int fock_cutoff, int steps);

/// Haar-distributed unitary from QR of a complex Gaussian matrix with the
/// R-diagonal phase correction.
Eigen::MatrixXcd haar_unitary(std::mt19937_64& rng, int dim);

/// Deterministic random model per seed: Haar unitaries, a Haar-random unit
/// mediator state and branch amplitudes uniform on the normalization sphere.
ControlledUnitaryModel random_model(std::uint64_t seed, int dim_a, int dim_b);

}  // namespace fieldlink
