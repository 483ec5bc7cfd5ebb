#include "qlogic/truth_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "qlogic/number_theory.hpp"

namespace qlogic {

namespace {

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

void validate_truth_table(const TruthTable& f) {
  if (f.domain_size < 1) {
    throw std::invalid_argument("TruthTable: domain_size must be positive");
  }
  if (f.codomain_size < 1) {
    throw std::invalid_argument("TruthTable: codomain_size must be positive");
  }
  if (static_cast<std::int64_t>(f.values.size()) != f.domain_size) {
    throw std::invalid_argument("TruthTable: values has length " +
                                std::to_string(f.values.size()) +
                                ", expected domain_size " +
                                std::to_string(f.domain_size));
  }
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (f.values[i] < 0 || f.values[i] >= f.codomain_size) {
      throw std::invalid_argument("TruthTable: values[" + std::to_string(i) +
                                  "] out of range for codomain_size " +
                                  std::to_string(f.codomain_size));
    }
  }
}

FunctionClass classify_constant_balanced(const TruthTable& f) {
  validate_truth_table(f);
  if (f.codomain_size != 2) {
    throw std::invalid_argument(
        "classify_constant_balanced: codomain_size must be 2");
  }
  const std::int64_t ones =
      std::count(f.values.begin(), f.values.end(), std::int64_t{1});
  if (ones == 0 || ones == f.domain_size) return FunctionClass::kConstant;
  if (2 * ones == f.domain_size) return FunctionClass::kBalanced;
  return FunctionClass::kNeither;
}

std::optional<std::uint64_t> brute_force_simon_period(const TruthTable& f) {
  validate_truth_table(f);
  if (!is_power_of_two(f.domain_size)) {
    throw std::invalid_argument(
        "brute_force_simon_period: domain_size must be a power of two");
  }
  const std::uint64_t size = static_cast<std::uint64_t>(f.domain_size);
  if (size == 1) return std::nullopt;

  // Candidate periods are the r with f(x) = f(x ^ r) everywhere.
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t r = 1; r < size; ++r) {
    bool holds = true;
    for (std::uint64_t x = 0; x < size; ++x) {
      if (f.values[x] != f.values[x ^ r]) {
        holds = false;
        break;
      }
    }
    if (holds) candidates.push_back(r);
  }
  if (candidates.size() != 1) return std::nullopt;

  // The promise also demands the converse: equal values only within cosets,
  // i.e. every value taken exactly twice.
  std::map<std::int64_t, int> multiplicity;
  for (std::int64_t v : f.values) ++multiplicity[v];
  for (const auto& [value, count] : multiplicity) {
    if (count != 2) return std::nullopt;
  }
  return candidates.front();
}

TruthTable make_simon_instance(std::int64_t n, std::uint64_t r, Rng& rng) {
  if (n < 1 || n > 16) {
    throw std::invalid_argument("make_simon_instance: n must be in [1, 16]");
  }
  const std::uint64_t size = std::uint64_t{1} << n;
  if (r == 0 || r >= size) {
    throw std::invalid_argument("make_simon_instance: r must satisfy 0 < r < 2^n");
  }

  // Shuffle the codomain and hand labels out to cosets in order of their
  // smallest representative; distinctness comes from sampling without
  // replacement.
  std::vector<std::int64_t> labels(size);
  std::iota(labels.begin(), labels.end(), 0);
  for (std::uint64_t i = size - 1; i > 0; --i) {
    const std::uint64_t j = uniform_below(i + 1, rng);
    std::swap(labels[i], labels[j]);
  }

  TruthTable f{static_cast<std::int64_t>(size), static_cast<std::int64_t>(size),
               std::vector<std::int64_t>(size, -1)};
  std::size_t next_label = 0;
  for (std::uint64_t x = 0; x < size; ++x) {
    if (f.values[x] >= 0) continue;
    f.values[x] = labels[next_label];
    f.values[x ^ r] = labels[next_label];
    ++next_label;
  }
  return f;
}

TruthTable make_modexp_table(std::int64_t a, std::int64_t N, std::int64_t s) {
  if (N < 2) {
    throw std::invalid_argument("make_modexp_table: N must be >= 2");
  }
  if (a < 1 || a >= N) {
    throw std::invalid_argument("make_modexp_table: need 1 <= a < N");
  }
  if (gcd(a, N) != 1) {
    throw std::invalid_argument("make_modexp_table: a must be coprime to N");
  }
  if (s < 2) {
    throw std::invalid_argument("make_modexp_table: s must be >= 2");
  }
  TruthTable f{s, N, std::vector<std::int64_t>(s)};
  std::int64_t value = 1 % N;
  for (std::int64_t x = 0; x < s; ++x) {
    f.values[x] = value;
    value = value * a % N;
  }
  return f;
}

std::int64_t brute_force_order(std::int64_t a, std::int64_t N) {
  if (N < 2) {
    throw std::invalid_argument("brute_force_order: N must be >= 2");
  }
  if (a < 1) {
    throw std::invalid_argument("brute_force_order: a must be >= 1");
  }
  if (std::gcd(a, N) != 1) {
    throw std::invalid_argument("brute_force_order: a must be coprime to N");
  }
  std::int64_t r = 1;
  std::int64_t value = a % N;
  while (value != 1) {
    value = value * a % N;
    ++r;
  }
  return r;
}

std::string to_json(const TruthTable& f) {
  nlohmann::ordered_json j;
  j["domain_size"] = f.domain_size;
  j["codomain_size"] = f.codomain_size;
  j["values"] = f.values;
  return j.dump();
}

TruthTable truth_table_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("TruthTable JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("TruthTable JSON: top level must be an object");
  }
  for (const char* field : {"domain_size", "codomain_size", "values"}) {
    if (!j.contains(field)) {
      throw std::invalid_argument(std::string("TruthTable JSON: missing field '") +
                                  field + "'");
    }
  }
  if (!j["domain_size"].is_number_integer()) {
    throw std::invalid_argument("TruthTable JSON: field 'domain_size' must be an integer");
  }
  if (!j["codomain_size"].is_number_integer()) {
    throw std::invalid_argument("TruthTable JSON: field 'codomain_size' must be an integer");
  }
  if (!j["values"].is_array()) {
    throw std::invalid_argument("TruthTable JSON: field 'values' must be an array");
  }
  TruthTable f;
  f.domain_size = j["domain_size"].get<std::int64_t>();
  f.codomain_size = j["codomain_size"].get<std::int64_t>();
  f.values.reserve(j["values"].size());
  for (std::size_t i = 0; i < j["values"].size(); ++i) {
    if (!j["values"][i].is_number_integer()) {
      throw std::invalid_argument("TruthTable JSON: values[" + std::to_string(i) +
                                  "] must be an integer");
    }
    f.values.push_back(j["values"][i].get<std::int64_t>());
  }
  validate_truth_table(f);
  return f;
}

}  // namespace qlogic
