// Command-line front end: one subcommand per algorithm, reports on stdout.
// Exit code 0 means a conclusive run, 2 an inconclusive one, 1 any usage or
// validation error.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "qlogic/algorithms.hpp"
#include "qlogic/report.hpp"
#include "qlogic/truth_table.hpp"
#include "qlogic/verification.hpp"

namespace {

using qlogic::Rng;
using qlogic::RunReport;
using qlogic::TruthTable;

TruthTable load_oracle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot read oracle file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return qlogic::truth_table_from_json(buffer.str());
}

TruthTable single_bit_builtin(const std::string& name) {
  if (name == "constant0") return {2, 2, {0, 0}};
  if (name == "constant1") return {2, 2, {1, 1}};
  if (name == "identity") return {2, 2, {0, 1}};
  if (name == "not") return {2, 2, {1, 0}};
  throw std::invalid_argument(
      "unknown oracle '" + name +
      "' (builtins: constant0, constant1, identity, not)");
}

TruthTable wide_builtin(const std::string& name, std::int64_t n) {
  const std::int64_t size = std::int64_t{1} << n;
  std::vector<std::int64_t> values(size, 0);
  if (name == "constant0") return {size, 2, values};
  if (name == "constant1") {
    std::fill(values.begin(), values.end(), 1);
    return {size, 2, values};
  }
  if (name == "parity") {
    for (std::int64_t x = 0; x < size; ++x) {
      values[x] = std::popcount(static_cast<std::uint64_t>(x)) & 1;
    }
    return {size, 2, values};
  }
  throw std::invalid_argument("unknown oracle '" + name +
                              "' (builtins: constant0, constant1, parity)");
}

TruthTable resolve_oracle(const std::string& builtin, const std::string& file,
                          std::optional<std::int64_t> n) {
  if (builtin.empty() == file.empty()) {
    throw std::invalid_argument(
        "exactly one of --oracle and --oracle-file is required");
  }
  if (!file.empty()) return load_oracle_file(file);
  return n.has_value() ? wide_builtin(builtin, *n) : single_bit_builtin(builtin);
}

int emit(RunReport report, const std::string& format, std::uint64_t seed) {
  report.seed = seed;
  if (format == "text") {
    std::cout << qlogic::to_text(report);
  } else {
    std::cout << qlogic::to_json(report);
  }
  return report.conclusive ? 0 : 2;
}

int run_geometry(std::int64_t a, std::int64_t N, std::int64_t s,
                 const std::string& format) {
  const qlogic::ShorGeometry geometry = qlogic::shor_geometry(a, N, s);
  if (format == "text") {
    std::cout << "order of a: " << geometry.order_of_a << "\n";
    for (const auto& entry : geometry.entries) {
      std::cout << "r=" << entry.r << " support {";
      for (std::size_t i = 0; i < entry.support.size(); ++i) {
        std::cout << (i ? "," : "") << entry.support[i];
      }
      std::cout << "} dim " << entry.subspace.dim() << "\n";
    }
    for (const auto r : geometry.excluded_orders) {
      std::cout << "r=" << r << " excluded (does not divide " << s << ")\n";
    }
    for (const auto& [inner, outer] : geometry.nestings) {
      std::cout << "r=" << geometry.entries[inner].r << " inside r="
                << geometry.entries[outer].r << "\n";
    }
    return 0;
  }
  nlohmann::ordered_json j;
  j["a"] = a;
  j["N"] = N;
  j["s"] = s;
  j["order_of_a"] = geometry.order_of_a;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& entry : geometry.entries) {
    j["entries"].push_back({{"r", entry.r},
                            {"support", entry.support},
                            {"dimension", entry.subspace.dim()}});
  }
  j["excluded_orders"] = geometry.excluded_orders;
  j["nestings"] = nlohmann::ordered_json::array();
  for (const auto& [inner, outer] : geometry.nestings) {
    j["nestings"].push_back({inner, outer});
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_checks() {
  const auto results = qlogic::run_acceptance_checks();
  int passed = 0;
  for (const auto& result : results) {
    std::cout << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << " "
              << result.name << "  " << result.detail << "\n";
    if (result.passed) ++passed;
  }
  std::cout << passed << "/" << results.size() << " checks passed\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oracle-decision and period-finding simulator"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --format trail the subcommand arguments
  app.set_version_flag("--version", "1.0.0");

  std::string format = "json";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string builtin, oracle_file;
  std::uint64_t seed = 0;
  std::int64_t n = 0;

  auto* deutsch = app.add_subcommand(
      "deutsch", "Single-run constant-or-balanced test, XOR staging");
  deutsch->add_option("--oracle", builtin, "Builtin oracle name");
  deutsch->add_option("--oracle-file", oracle_file, "Oracle JSON file");
  deutsch->add_option("--seed", seed, "RNG seed")->capture_default_str();

  auto* cleve = app.add_subcommand(
      "cleve", "Single-run constant-or-balanced test, phase kickback");
  cleve->add_option("--oracle", builtin, "Builtin oracle name");
  cleve->add_option("--oracle-file", oracle_file, "Oracle JSON file");

  auto* dj = app.add_subcommand(
      "dj", "n-bit constant-or-balanced test under the promise");
  dj->add_option("--n", n, "Input width in bits")->required();
  dj->add_option("--oracle", builtin, "Builtin oracle name");
  dj->add_option("--oracle-file", oracle_file, "Oracle JSON file");
  dj->add_option("--seed", seed, "RNG seed")->capture_default_str();

  std::uint64_t mask = 0;
  std::int64_t max_trials = 0;
  auto* simon = app.add_subcommand("simon", "XOR-period recovery");
  simon->add_option("--n", n, "Input width in bits")->required();
  simon->add_option("--oracle-file", oracle_file, "Oracle JSON file");
  simon->add_option("--r", mask,
                    "Generate a random instance with this period");
  simon->add_option("--seed", seed, "RNG seed")->capture_default_str();
  simon->add_option("--max-trials", max_trials,
                    "Trial budget (0 = ten per bit)");

  std::int64_t modulus = 0, base = 0, size = 0, max_rounds = 20;
  bool exact_output = false;
  auto* shor = app.add_subcommand("shor", "Order-finding factorization");
  shor->add_option("-N,--modulus", modulus, "Odd composite to factor")
      ->required();
  shor->add_option("-a,--base", base, "Force this base every round");
  shor->add_option("-s,--size", size,
                   "Input register size (0 = smallest power of two >= N^2)");
  shor->add_option("--max-rounds", max_rounds, "Round budget")
      ->capture_default_str();
  shor->add_flag("--exact-output", exact_output,
                 "Size the output register exactly N, no power-of-two padding");
  shor->add_option("--seed", seed, "RNG seed")->capture_default_str();

  auto* sample = app.add_subcommand(
      "sample", "One period-finding round: measured c and its candidate order");
  sample->add_option("-a,--base", base, "Base, coprime to the modulus")
      ->required();
  sample->add_option("-N,--modulus", modulus, "Modulus")->required();
  sample->add_option("-s,--size", size, "Input register size")->required();
  sample->add_flag("--exact-output", exact_output,
                   "Size the output register exactly N");
  sample->add_option("--seed", seed, "RNG seed")->capture_default_str();

  auto* geometry =
      app.add_subcommand("geometry", "Order subspaces of the input register");
  geometry->add_option("-a,--base", base, "Base, coprime to the modulus")
      ->required();
  geometry->add_option("-N,--modulus", modulus, "Modulus")->required();
  geometry->add_option("-s,--size", size, "Input register size")->required();

  auto* check =
      app.add_subcommand("check", "Run the library's built-in self checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (deutsch->parsed()) {
      Rng rng(seed);
      return emit(qlogic::deutsch_xor(resolve_oracle(builtin, oracle_file, {}),
                                      rng),
                  format, seed);
    }
    if (cleve->parsed()) {
      return emit(qlogic::deutsch_cleve(resolve_oracle(builtin, oracle_file, {})),
                  format, 0);
    }
    if (dj->parsed()) {
      Rng rng(seed);
      return emit(
          qlogic::deutsch_jozsa(resolve_oracle(builtin, oracle_file, n), n, rng),
          format, seed);
    }
    if (simon->parsed()) {
      if (oracle_file.empty() == (mask == 0)) {
        throw std::invalid_argument(
            "exactly one of --oracle-file and --r is required");
      }
      Rng rng(seed);
      const TruthTable f = oracle_file.empty()
                               ? qlogic::make_simon_instance(n, mask, rng)
                               : load_oracle_file(oracle_file);
      return emit(qlogic::simon(f, n, rng, max_trials), format, seed);
    }
    if (shor->parsed()) {
      qlogic::ShorOptions options;
      options.s = size;
      options.exact_output_dim = exact_output;
      options.max_rounds = max_rounds;
      if (base != 0) options.forced_a = base;
      Rng rng(seed);
      return emit(qlogic::shor_factor(modulus, rng, options), format, seed);
    }
    if (sample->parsed()) {
      Rng rng(seed);
      const qlogic::ShorSample drawn =
          qlogic::shor_period_sample(base, modulus, size, rng, exact_output);
      if (format == "text") {
        std::cout << "c = " << drawn.c << " (p = " << drawn.record.probability
                  << "), candidate order " << drawn.candidate_r
                  << (drawn.degenerate ? " (degenerate)" : "") << "\n";
      } else {
        nlohmann::ordered_json j;
        j["c"] = drawn.c;
        j["candidate_r"] = drawn.candidate_r;
        j["degenerate"] = drawn.degenerate;
        j["probability"] = drawn.record.probability;
        j["seed"] = seed;
        std::cout << j.dump(2) << "\n";
      }
      return drawn.degenerate ? 2 : 0;
    }
    if (geometry->parsed()) {
      return run_geometry(base, modulus, size, format);
    }
    if (check->parsed()) {
      return run_checks();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
