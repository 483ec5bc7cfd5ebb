#include "qlogic/report.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qlogic {

namespace {

using Json = nlohmann::ordered_json;

Json round_to_json(const ShorRound& round) {
  Json j;
  j["a"] = round.a;
  j["c"] = round.c;
  j["candidate_r"] = round.candidate_r;
  j["lucky_gcd"] = round.lucky_gcd;
  j["degenerate"] = round.degenerate;
  j["order_valid"] = round.order_valid;
  j["even_order"] = round.even_order;
  j["minus_one_condition"] = round.minus_one_condition;
  j["factors"] = round.factors;
  return j;
}

ShorRound round_from_json(const Json& j) {
  ShorRound round;
  round.a = j.at("a").get<std::int64_t>();
  round.c = j.at("c").get<std::int64_t>();
  round.candidate_r = j.at("candidate_r").get<std::int64_t>();
  round.lucky_gcd = j.at("lucky_gcd").get<bool>();
  round.degenerate = j.at("degenerate").get<bool>();
  round.order_valid = j.at("order_valid").get<bool>();
  round.even_order = j.at("even_order").get<bool>();
  round.minus_one_condition = j.at("minus_one_condition").get<bool>();
  round.factors = j.at("factors").get<std::vector<std::int64_t>>();
  return round;
}

}  // namespace

std::string to_json(const RunReport& report) {
  Json j;
  j["schema_version"] = 1;
  j["algorithm"] = report.algorithm;
  if (!report.factors.empty() && report.conclusive) {
    j["verdict"] = report.factors;
  } else {
    j["verdict"] = report.verdict;
  }
  j["conclusive"] = report.conclusive;
  j["trace"] = Json::array();
  for (const TraceEntry& entry : report.trace) {
    Json e;
    e["register"] = entry.register_index;
    e["outcome"] = entry.outcome;
    e["probability"] = entry.probability;
    j["trace"].push_back(std::move(e));
  }
  j["geometry"] = Json::array();
  for (const GeometryEntry& entry : report.geometry) {
    Json e;
    e["name"] = entry.name;
    e["dimension"] = entry.dimension;
    e["contains_final"] = entry.contains_final;
    j["geometry"].push_back(std::move(e));
  }
  if (!report.rounds.empty()) {
    j["rounds"] = Json::array();
    for (const ShorRound& round : report.rounds) {
      j["rounds"].push_back(round_to_json(round));
    }
  }
  j["trials_used"] = report.trials_used;
  j["seed"] = report.seed;
  return j.dump(2) + "\n";
}

RunReport run_report_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("RunReport JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema_version")) {
    throw std::invalid_argument("RunReport JSON: missing schema_version");
  }
  if (j["schema_version"].get<int>() != 1) {
    throw std::invalid_argument("RunReport JSON: unsupported schema_version");
  }
  RunReport report;
  try {
    report.algorithm = j.at("algorithm").get<std::string>();
    if (j.at("verdict").is_array()) {
      report.factors = j["verdict"].get<std::vector<std::int64_t>>();
      std::ostringstream verdict;
      for (std::size_t i = 0; i < report.factors.size(); ++i) {
        if (i > 0) verdict << ",";
        verdict << report.factors[i];
      }
      report.verdict = verdict.str();
    } else {
      report.verdict = j.at("verdict").get<std::string>();
    }
    report.conclusive = j.at("conclusive").get<bool>();
    for (const Json& e : j.at("trace")) {
      report.trace.push_back(TraceEntry{e.at("register").get<std::size_t>(),
                                        e.at("outcome").get<std::int64_t>(),
                                        e.at("probability").get<double>()});
    }
    for (const Json& e : j.at("geometry")) {
      report.geometry.push_back(
          GeometryEntry{e.at("name").get<std::string>(),
                        e.at("dimension").get<std::int64_t>(),
                        e.at("contains_final").get<bool>()});
    }
    if (j.contains("rounds")) {
      for (const Json& e : j["rounds"]) {
        report.rounds.push_back(round_from_json(e));
      }
    }
    report.trials_used = j.at("trials_used").get<std::int64_t>();
    report.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    // at() and get() raise nlohmann errors whose messages name the key;
    // surface them under the one exception type callers handle.
    throw std::invalid_argument(std::string("RunReport JSON: ") + e.what());
  }
  return report;
}

std::string to_text(const RunReport& report) {
  std::ostringstream out;
  out << report.algorithm << ": " << report.verdict
      << (report.conclusive ? " (conclusive)" : " (inconclusive)") << "\n";
  out << "trials: " << report.trials_used << ", seed: " << report.seed << "\n";
  if (!report.trace.empty()) {
    out << "measurements:\n";
    for (const TraceEntry& entry : report.trace) {
      out << "  register " << entry.register_index << " -> " << entry.outcome
          << " (p = " << entry.probability << ")\n";
    }
  }
  if (!report.geometry.empty()) {
    out << "geometry:\n";
    for (const GeometryEntry& entry : report.geometry) {
      out << "  " << entry.name << " dim " << entry.dimension
          << (entry.contains_final ? " contains final state"
                                   : " does not contain final state")
          << "\n";
    }
  }
  if (!report.rounds.empty()) {
    out << "rounds:\n";
    for (const ShorRound& round : report.rounds) {
      out << "  a=" << round.a;
      if (round.lucky_gcd) {
        out << " shares a factor with N";
      } else {
        out << " c=" << round.c << " candidate_r=" << round.candidate_r;
        if (round.degenerate) out << " degenerate";
        if (!round.order_valid) out << " order-invalid";
        if (round.minus_one_condition) out << " minus-one-condition";
      }
      if (!round.factors.empty()) {
        out << " factors " << round.factors[0] << "," << round.factors[1];
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace qlogic
