#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlogic/random.hpp"

namespace qlogic {

// Total function {0..domain_size-1} -> {0..codomain_size-1} as a value table.
struct TruthTable {
  std::int64_t domain_size = 0;
  std::int64_t codomain_size = 0;
  std::vector<std::int64_t> values;

  bool operator==(const TruthTable& other) const = default;
};

// Throws std::invalid_argument naming the offending field.
void validate_truth_table(const TruthTable& f);

enum class FunctionClass { kConstant, kBalanced, kNeither };

// Exhaustive count of output values; requires codomain_size == 2.
FunctionClass classify_constant_balanced(const TruthTable& f);

// The unique nonzero r with f(x) = f(y) iff y = x ^ r, or nullopt when the
// 2-to-1 promise fails. Exhaustive scan; domain must be a power of two.
std::optional<std::uint64_t> brute_force_simon_period(const TruthTable& f);

// Random 2-to-1 table on n bits with the given period: each {x, x^r} coset
// gets a distinct codomain label, assigned uniformly at random.
TruthTable make_simon_instance(std::int64_t n, std::uint64_t r, Rng& rng);

// values[x] = a^x mod N for x in [0, s).
TruthTable make_modexp_table(std::int64_t a, std::int64_t N, std::int64_t s);

// Smallest r >= 1 with a^r = 1 mod N, by iteration; requires gcd(a, N) = 1.
std::int64_t brute_force_order(std::int64_t a, std::int64_t N);

// JSON form: {"domain_size": int, "codomain_size": int, "values": [int]}.
std::string to_json(const TruthTable& f);
TruthTable truth_table_from_json(const std::string& text);

}  // namespace qlogic
