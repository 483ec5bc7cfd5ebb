#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qlogic {

// All randomness flows through an explicitly seeded engine; there is no global
// RNG state anywhere in the library.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) built from the top 53 bits of one engine draw, so
// results do not depend on the standard library's distribution internals.
double uniform_unit(Rng& rng);

// Uniform integer in [0, bound), bound >= 1, by rejection sampling.
std::uint64_t uniform_below(std::uint64_t bound, Rng& rng);

// Index drawn from a discrete distribution by a single CDF walk. Weights must
// be non-negative; they are treated as already normalized.
std::size_t sample_index(const std::vector<double>& probabilities, Rng& rng);

}  // namespace qlogic
