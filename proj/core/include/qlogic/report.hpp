#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qlogic {

// Summary of one measurement, small enough to serialize.
struct TraceEntry {
  std::size_t register_index = 0;
  std::int64_t outcome = 0;
  double probability = 0.0;

  bool operator==(const TraceEntry& other) const = default;
};

// A named subspace and whether the run's final state landed in it.
struct GeometryEntry {
  std::string name;
  std::int64_t dimension = 0;
  bool contains_final = false;

  bool operator==(const GeometryEntry& other) const = default;
};

// One factoring round. c = -1 means no quantum sample happened (the round
// ended classically at the gcd step).
struct ShorRound {
  std::int64_t a = 0;
  std::int64_t c = -1;
  std::int64_t candidate_r = 0;
  bool lucky_gcd = false;        // gcd(a, N) > 1 gave a factor outright
  bool degenerate = false;       // c == 0 carries no period information
  bool order_valid = false;      // a^candidate_r = 1 mod N
  bool even_order = false;
  bool minus_one_condition = false;  // a^{r/2} = -1 mod N, the failure case
  std::vector<std::int64_t> factors; // nonempty iff the round factored N

  bool operator==(const ShorRound& other) const = default;
};

struct RunReport {
  std::string algorithm;
  std::string verdict;  // "constant", "balanced", period bits, "p,q", "inconclusive"
  bool conclusive = false;
  std::vector<TraceEntry> trace;
  std::vector<GeometryEntry> geometry;
  std::vector<ShorRound> rounds;  // factoring runs only
  std::int64_t trials_used = 0;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> factors;  // conclusive factoring runs only

  bool operator==(const RunReport& other) const = default;
};

// Stable serialization: fixed key order, so equal reports give byte-identical
// text. A conclusive factoring verdict appears as the two-element factor
// array; every other verdict is a string.
std::string to_json(const RunReport& report);
RunReport run_report_from_json(const std::string& text);

std::string to_text(const RunReport& report);

}  // namespace qlogic
