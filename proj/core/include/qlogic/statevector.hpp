#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qlogic/random.hpp"
#include "qlogic/register_layout.hpp"
#include "qlogic/types.hpp"

namespace qlogic {

// Dense amplitude vector over the composite space of a RegisterLayout.
// All operations below are pure; none mutates its input.
struct StateVector {
  RegisterLayout layout;
  Vector amplitudes;  // length == layout.total_dimension()
};

struct MeasurementRecord {
  std::size_t register_index;
  std::int64_t outcome;
  double probability;  // squared norm of the projection onto the outcome
  StateVector post_state;
};

StateVector basis_state(const RegisterLayout& layout,
                        const std::vector<std::int64_t>& labels);

// Hadamard image of a computational basis state, e.g. H|0> (x) H|1| for
// labels (0,1). Built from hadamard_layer, so every register must have
// power-of-two dimension.
StateVector hadamard_basis_state(const RegisterLayout& layout,
                                 const std::vector<std::int64_t>& labels);

// H^{(x)k} on one register, identity elsewhere. The register dimension must
// be a power of two; anything else throws std::domain_error.
StateVector hadamard_layer(const StateVector& state, std::size_t register_index);

// Outcome probabilities of a computational-basis measurement of one register.
std::vector<double> marginal_distribution(const StateVector& state,
                                          std::size_t register_index);

// Samples an outcome from the register's marginal and collapses. The only
// non-deterministic operation in the library; state must be normalized.
MeasurementRecord measure(const StateVector& state, std::size_t register_index,
                          Rng& rng);

// Renormalized projection onto a fixed outcome: the deterministic counterpart
// of measure, used for conditioning. Throws if the outcome has ~zero weight.
StateVector project_onto_outcome(const StateVector& state,
                                 std::size_t register_index,
                                 std::int64_t outcome);

// The register's own state vector when the state factorizes across the cut
// (register_index vs. everything else); nullopt when it is entangled.
std::optional<Vector> try_factor_register(const StateVector& state,
                                          std::size_t register_index);

double norm(const StateVector& state);

// Global-phase-invariant equality for normalized vectors: |<v|w>| ~ 1.
bool equal_up_to_phase(const Vector& v, const Vector& w,
                       double tol = kTolerance);

}  // namespace qlogic
