#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qlogic/random.hpp"
#include "qlogic/report.hpp"
#include "qlogic/statevector.hpp"
#include "qlogic/subspace.hpp"
#include "qlogic/truth_table.hpp"

namespace qlogic {

// Single-run XOR-oracle test for f: B -> B. Prepares |0>|0>, H on input,
// oracle, H on both registers, measures both. Half the time the outcome is
// 00 and the run is inconclusive; otherwise the verdict is certain.
RunReport deutsch_xor(const TruthTable& f, Rng& rng);

// Phase-kickback variant: |0>|1>, H on both, oracle, H on input. One run,
// always conclusive; the output register provably stays at H|1> up to phase,
// which is verified and recorded in the geometry trace.
RunReport deutsch_cleve(const TruthTable& f);

// n-bit generalization under the constant-or-balanced promise (validated).
// Outcome 0...0 means constant, anything else balanced; always conclusive.
// The verdict never depends on the rng; it only picks which balanced-support
// outcome lands in the trace. The two-argument form uses a fixed seed.
RunReport deutsch_jozsa(const TruthTable& f, std::int64_t n, Rng& rng);
RunReport deutsch_jozsa(const TruthTable& f, std::int64_t n);

// Period finding over (Z_2)^n. Repeats prepare/H/oracle/H/measure-input,
// feeding outcomes to GF(2) elimination, and stops as soon as the solution
// space is one-dimensional. Only the input register is ever measured.
// max_trials = 0 means the default 10 * n.
RunReport simon(const TruthTable& f, std::int64_t n, Rng& rng,
                std::int64_t max_trials = 0);

// span{|y> : r . y = 0 (mod 2)} in C^{2^n}; dimension 2^{n-1}.
Subspace simon_period_subspace(std::int64_t n, std::uint64_t r);

// The two planes a conclusive single-bit run distinguishes, in the ambient
// 4-dimensional two-qubit space: span{H|00>, H|01>} and span{H|00>, H|11>}.
Subspace deutsch_constant_plane();
Subspace deutsch_balanced_plane();

struct ShorSample {
  std::int64_t c = 0;            // raw measured value
  std::int64_t candidate_r = 0;  // denominator of c/s in lowest terms
  bool degenerate = false;       // c == 0, candidate pinned to 1
  MeasurementRecord record;
};

// One period-finding round: uniform superposition over Z_s on the input
// register, modular-multiplication oracle, size-s Fourier transform, input
// measurement. s >= N; the output register has the smallest power-of-two
// dimension >= N, or exactly N when exact_output_dim is set.
ShorSample shor_period_sample(std::int64_t a, std::int64_t N, std::int64_t s,
                              Rng& rng, bool exact_output_dim = false);

struct ShorOptions {
  std::int64_t s = 0;  // 0 = smallest power of two >= N^2
  bool exact_output_dim = false;
  std::optional<std::int64_t> forced_a;  // every round uses this base
  std::int64_t max_rounds = 20;
};

// Full factoring loop. Each round draws a uniformly from [2, N-1] (unless
// forced), takes the gcd shortcut when a shares a factor with N, otherwise
// samples a period candidate and applies the even-order / minus-one-condition
// tests. The report records every round; exhausting max_rounds yields an
// inconclusive report, not an error. N must pass validate_shor_input.
RunReport shor_factor(std::int64_t N, Rng& rng, const ShorOptions& options = {});

struct ShorGeometryEntry {
  std::int64_t r = 0;
  std::vector<std::int64_t> support;  // {k s / r : k = 0..r-1}
  Subspace subspace = Subspace::zero(1);
};

struct ShorGeometry {
  std::int64_t order_of_a = 0;
  std::vector<ShorGeometryEntry> entries;       // realizable orders dividing s
  std::vector<std::int64_t> excluded_orders;    // realizable orders not dividing s
  // (inner, outer) index pairs with entries[inner] contained in entries[outer].
  std::vector<std::pair<std::size_t, std::size_t>> nestings;
};

// For every multiplicative order r mod N realizable by some coprime base and
// dividing s: the subspace span{|k s / r>} of C^s where a period-r input
// register lands after the Fourier transform, plus the containment relations
// between those subspaces. Orders not dividing s are listed as excluded.
ShorGeometry shor_geometry(std::int64_t a, std::int64_t N, std::int64_t s);

}  // namespace qlogic
