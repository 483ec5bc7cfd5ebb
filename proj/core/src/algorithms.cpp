#include "qlogic/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qlogic/number_theory.hpp"
#include "qlogic/unitary.hpp"

namespace qlogic {

namespace {

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

std::int64_t next_power_of_two(std::int64_t v) {
  std::int64_t p = 1;
  while (p < v) p <<= 1;
  return p;
}

std::string bit_string(std::uint64_t v, std::int64_t n) {
  std::string s(n, '0');
  for (std::int64_t i = 0; i < n; ++i) {
    if (v >> (n - 1 - i) & 1) s[i] = '1';
  }
  return s;
}

bool parity(std::uint64_t v) { return std::popcount(v) & 1; }

void check_single_bit_oracle(const TruthTable& f, const char* who) {
  validate_truth_table(f);
  if (f.domain_size != 2 || f.codomain_size != 2) {
    throw std::invalid_argument(std::string(who) +
                                ": oracle must map one bit to one bit");
  }
}

TraceEntry summarize(const MeasurementRecord& record) {
  return TraceEntry{record.register_index, record.outcome, record.probability};
}

// Deterministic stand-in for measure when the marginal is a point mass; used
// where the staging guarantees certainty, so no RNG draw is consumed.
TraceEntry certain_outcome(const StateVector& state, std::size_t register_index) {
  const std::vector<double> marginal =
      marginal_distribution(state, register_index);
  for (std::size_t i = 0; i < marginal.size(); ++i) {
    if (marginal[i] >= 1.0 - kTolerance) {
      return TraceEntry{register_index, static_cast<std::int64_t>(i),
                        marginal[i]};
    }
  }
  throw std::logic_error("expected a deterministic outcome");
}

Vector state_of(const StateVector& s) { return s.amplitudes; }

}  // namespace

Subspace deutsch_constant_plane() {
  const RegisterLayout layout({2, 2});
  return span({state_of(hadamard_basis_state(layout, {0, 0})),
               state_of(hadamard_basis_state(layout, {0, 1}))},
              4);
}

Subspace deutsch_balanced_plane() {
  const RegisterLayout layout({2, 2});
  return span({state_of(hadamard_basis_state(layout, {0, 0})),
               state_of(hadamard_basis_state(layout, {1, 1}))},
              4);
}

RunReport deutsch_xor(const TruthTable& f, Rng& rng) {
  check_single_bit_oracle(f, "deutsch_xor");
  const RegisterLayout layout({2, 2});

  StateVector state = basis_state(layout, {0, 0});
  state = hadamard_layer(state, 0);
  state = apply(oracle_xor_unitary(f, layout), state);
  const StateVector mid = state;  // pre-final-Hadamard, lives in one plane
  state = hadamard_layer(state, 0);
  state = hadamard_layer(state, 1);

  const MeasurementRecord first = measure(state, 0, rng);
  const MeasurementRecord second = measure(first.post_state, 1, rng);

  RunReport report;
  report.algorithm = "deutsch_xor";
  report.trace = {summarize(first), summarize(second)};
  report.trials_used = 1;

  const Subspace constant_plane = deutsch_constant_plane();
  const Subspace balanced_plane = deutsch_balanced_plane();
  const Subspace ray = meet(constant_plane, balanced_plane);
  report.geometry = {
      {"constant_plane", constant_plane.dim(),
       contains(constant_plane, mid.amplitudes)},
      {"balanced_plane", balanced_plane.dim(),
       contains(balanced_plane, mid.amplitudes)},
      {"intersection_ray", ray.dim(), contains(ray, mid.amplitudes)},
  };

  if (first.outcome == 0 && second.outcome == 0) {
    report.verdict = "inconclusive";
    report.conclusive = false;
  } else if (first.outcome == 0 && second.outcome == 1) {
    report.verdict = "constant";
    report.conclusive = true;
  } else if (first.outcome == 1 && second.outcome == 1) {
    report.verdict = "balanced";
    report.conclusive = true;
  } else {
    // The final state is provably orthogonal to this outcome's basis vector.
    throw std::logic_error("deutsch_xor: impossible outcome 10");
  }
  return report;
}

RunReport deutsch_cleve(const TruthTable& f) {
  check_single_bit_oracle(f, "deutsch_cleve");
  const RegisterLayout layout({2, 2});

  StateVector state = basis_state(layout, {0, 1});
  state = hadamard_layer(state, 0);
  state = hadamard_layer(state, 1);
  state = apply(oracle_xor_unitary(f, layout), state);
  state = hadamard_layer(state, 0);

  RunReport report;
  report.algorithm = "deutsch_cleve";
  report.trials_used = 1;

  // Phase kickback leaves a product state; the input marginal is a point mass.
  const TraceEntry entry = certain_outcome(state, 0);
  report.trace = {entry};
  report.verdict = entry.outcome == 0 ? "constant" : "balanced";
  report.conclusive = true;

  const auto output_state = try_factor_register(state, 1);
  const RegisterLayout single({2});
  const Vector minus = state_of(hadamard_basis_state(single, {1}));
  const bool output_unchanged =
      output_state.has_value() && equal_up_to_phase(*output_state, minus);
  if (!output_unchanged) {
    throw std::logic_error("deutsch_cleve: output register left its ray");
  }
  report.geometry = {{"output_minus_ray", 1, true}};
  return report;
}

RunReport deutsch_jozsa(const TruthTable& f, std::int64_t n, Rng& rng) {
  validate_truth_table(f);
  if (n < 1 || f.domain_size != (std::int64_t{1} << n)) {
    throw std::invalid_argument("deutsch_jozsa: domain_size must equal 2^n");
  }
  const FunctionClass promise = classify_constant_balanced(f);
  if (promise == FunctionClass::kNeither) {
    throw std::invalid_argument(
        "deutsch_jozsa: oracle is neither constant nor balanced");
  }
  const std::int64_t in_dim = f.domain_size;
  const RegisterLayout layout({in_dim, 2});

  StateVector state = basis_state(layout, {0, 1});
  state = hadamard_layer(state, 0);
  state = hadamard_layer(state, 1);
  state = apply(oracle_xor_unitary(f, layout), state);
  state = hadamard_layer(state, 0);

  const MeasurementRecord record = measure(state, 0, rng);

  RunReport report;
  report.algorithm = "deutsch_jozsa";
  report.trace = {summarize(record)};
  report.trials_used = 1;
  report.verdict = record.outcome == 0 ? "constant" : "balanced";
  report.conclusive = true;

  const auto input_state = try_factor_register(state, 0);
  if (!input_state.has_value()) {
    throw std::logic_error("deutsch_jozsa: input register is entangled");
  }
  Vector zero_vector = Vector::Zero(in_dim);
  zero_vector[0] = Complex{1.0, 0.0};
  const Subspace zero_ray = span({zero_vector}, in_dim);
  const Subspace balanced_space = orthocomplement(zero_ray);
  report.geometry = {
      {"all_zero_ray", 1, contains(zero_ray, *input_state)},
      {"all_zero_orthocomplement", balanced_space.dim(),
       contains(balanced_space, *input_state)},
  };
  return report;
}

RunReport deutsch_jozsa(const TruthTable& f, std::int64_t n) {
  // The verdict is certain under the promise; the seed only picks which
  // balanced-support outcome lands in the trace.
  Rng rng(0);
  return deutsch_jozsa(f, n, rng);
}

RunReport simon(const TruthTable& f, std::int64_t n, Rng& rng,
                std::int64_t max_trials) {
  validate_truth_table(f);
  if (n < 1 || n > 16 || f.domain_size != (std::int64_t{1} << n)) {
    throw std::invalid_argument("simon: domain_size must equal 2^n");
  }
  if (!is_power_of_two(f.codomain_size)) {
    throw std::invalid_argument("simon: codomain_size must be a power of two");
  }
  const auto true_period = brute_force_simon_period(f);
  if (!true_period.has_value()) {
    throw std::invalid_argument("simon: oracle violates the 2-to-1 promise");
  }
  if (max_trials == 0) max_trials = 10 * n;
  if (max_trials < 1) {
    throw std::invalid_argument("simon: max_trials must be >= 1");
  }

  const RegisterLayout layout({f.domain_size, f.codomain_size});
  const Unitary oracle = oracle_xor_unitary(f, layout);

  RunReport report;
  report.algorithm = "simon";
  std::vector<std::uint64_t> equations;
  std::optional<std::uint64_t> recovered;
  for (std::int64_t trial = 0; trial < max_trials; ++trial) {
    StateVector state = basis_state(layout, {0, 0});
    state = hadamard_layer(state, 0);
    state = apply(oracle, state);
    state = hadamard_layer(state, 0);
    // Only the input register is measured; the output register never is.
    const MeasurementRecord record = measure(state, 0, rng);
    report.trace.push_back(summarize(record));
    equations.push_back(static_cast<std::uint64_t>(record.outcome));
    report.trials_used = trial + 1;

    const std::vector<std::uint64_t> basis =
        solve_gf2(equations, static_cast<int>(n));
    if (basis.size() == 1) {
      recovered = basis.front();
      break;
    }
  }

  if (recovered.has_value()) {
    report.verdict = bit_string(*recovered, n);
    report.conclusive = true;
    const Subspace period_space = simon_period_subspace(n, *recovered);
    bool all_in = true;
    for (const TraceEntry& entry : report.trace) {
      Vector e = Vector::Zero(f.domain_size);
      e[entry.outcome] = Complex{1.0, 0.0};
      if (!contains(period_space, e)) {
        all_in = false;
        break;
      }
    }
    report.geometry = {{"period_subspace_" + bit_string(*recovered, n),
                        period_space.dim(), all_in}};
  } else {
    report.verdict = "inconclusive";
    report.conclusive = false;
  }
  return report;
}

Subspace simon_period_subspace(std::int64_t n, std::uint64_t r) {
  if (n < 1 || n > 16) {
    throw std::invalid_argument("simon_period_subspace: n must be in [1, 16]");
  }
  const std::int64_t size = std::int64_t{1} << n;
  if (r == 0 || r >= static_cast<std::uint64_t>(size)) {
    throw std::invalid_argument("simon_period_subspace: r must satisfy 0 < r < 2^n");
  }
  std::vector<Vector> vectors;
  for (std::int64_t y = 0; y < size; ++y) {
    if (parity(static_cast<std::uint64_t>(y) & r)) continue;
    Vector e = Vector::Zero(size);
    e[y] = Complex{1.0, 0.0};
    vectors.push_back(std::move(e));
  }
  return span(vectors, size);
}

ShorSample shor_period_sample(std::int64_t a, std::int64_t N, std::int64_t s,
                              Rng& rng, bool exact_output_dim) {
  if (N < 2) {
    throw std::invalid_argument("shor_period_sample: N must be >= 2");
  }
  if (a < 1 || a >= N || gcd(a, N) != 1) {
    throw std::invalid_argument(
        "shor_period_sample: a must be in [1, N) and coprime to N");
  }
  if (s < N) {
    throw std::invalid_argument("shor_period_sample: s must be >= N");
  }
  const std::int64_t out_dim = exact_output_dim ? N : next_power_of_two(N);
  const RegisterLayout layout({s, out_dim});

  StateVector state = basis_state(layout, {0, 0});
  if (is_power_of_two(s)) {
    state = hadamard_layer(state, 0);
  } else {
    // Same action on |0>: uniform superposition over Z_s.
    state = apply(qft_unitary(s), state, 0);
  }
  state = apply(oracle_modmul_unitary(a, N, layout), state);
  state = apply(qft_unitary(s), state, 0);
  const MeasurementRecord record = measure(state, 0, rng);

  ShorSample sample{record.outcome, 1, false, record};
  if (sample.c == 0) {
    sample.degenerate = true;
  } else {
    sample.candidate_r = reduce(Fraction{sample.c, s}).denominator;
  }
  return sample;
}

RunReport shor_factor(std::int64_t N, Rng& rng, const ShorOptions& options) {
  const ShorInputCheck check = validate_shor_input(N);
  if (!check.ok()) {
    std::string reason;
    switch (check.status) {
      case ShorInputCheck::Status::kEven:
        reason = "N is even (factor 2)";
        break;
      case ShorInputCheck::Status::kPrime:
        reason = "N is prime";
        break;
      default:
        reason = "N is a perfect power (base " + std::to_string(check.witness) + ")";
        break;
    }
    throw std::invalid_argument("shor_factor: " + reason);
  }
  if (options.max_rounds < 1) {
    throw std::invalid_argument("shor_factor: max_rounds must be >= 1");
  }
  const std::int64_t s =
      options.s > 0 ? options.s : next_power_of_two(N * N);
  if (s < N) {
    throw std::invalid_argument("shor_factor: s must be >= N");
  }
  if (options.forced_a.has_value() &&
      (*options.forced_a < 2 || *options.forced_a >= N)) {
    throw std::invalid_argument("shor_factor: forced a must be in [2, N)");
  }

  RunReport report;
  report.algorithm = "shor_factor";
  std::int64_t last_sampled_a = 0;
  std::int64_t last_c = -1;

  for (std::int64_t round_index = 0; round_index < options.max_rounds;
       ++round_index) {
    ShorRound round;
    round.a = options.forced_a.has_value()
                  ? *options.forced_a
                  : static_cast<std::int64_t>(
                        2 + uniform_below(static_cast<std::uint64_t>(N - 2), rng));

    const std::int64_t g = gcd(round.a, N);
    if (g > 1) {
      round.lucky_gcd = true;
      round.factors = {std::min(g, N / g), std::max(g, N / g)};
    } else {
      const ShorSample sample =
          shor_period_sample(round.a, N, s, rng, options.exact_output_dim);
      report.trace.push_back(summarize(sample.record));
      last_sampled_a = round.a;
      last_c = sample.c;
      round.c = sample.c;
      round.candidate_r = sample.candidate_r;
      round.degenerate = sample.degenerate;
      if (!round.degenerate) {
        round.order_valid = mod_exp(round.a, round.candidate_r, N) == 1;
        if (round.order_valid) {
          round.even_order = round.candidate_r % 2 == 0;
          if (round.even_order) {
            const std::int64_t half = mod_exp(round.a, round.candidate_r / 2, N);
            round.minus_one_condition = half == N - 1;
            if (!round.minus_one_condition) {
              for (const std::int64_t candidate :
                   {gcd(half + 1, N), gcd(half >= 1 ? half - 1 : 0, N)}) {
                if (candidate > 1 && candidate < N) {
                  round.factors = {std::min(candidate, N / candidate),
                                   std::max(candidate, N / candidate)};
                  break;
                }
              }
            }
          }
        }
      }
    }

    const bool succeeded = !round.factors.empty();
    report.rounds.push_back(round);
    report.trials_used = round_index + 1;
    if (succeeded) {
      report.factors = round.factors;
      report.conclusive = true;
      std::ostringstream verdict;
      verdict << round.factors[0] << "," << round.factors[1];
      report.verdict = verdict.str();
      break;
    }
  }
  if (!report.conclusive) {
    report.verdict = "inconclusive";
  }

  // Geometry relative to the last quantum sample: which order subspace the
  // measured input label landed in.
  if (last_c >= 0) {
    const ShorGeometry geometry = shor_geometry(last_sampled_a, N, s);
    Vector c_vector = Vector::Zero(s);
    c_vector[last_c] = Complex{1.0, 0.0};
    for (const ShorGeometryEntry& entry : geometry.entries) {
      std::ostringstream name;
      name << "order_subspace_r" << entry.r << "_span{";
      for (std::size_t i = 0; i < entry.support.size(); ++i) {
        if (i > 0) name << ",";
        name << entry.support[i];
      }
      name << "}";
      report.geometry.push_back(GeometryEntry{
          name.str(), entry.subspace.dim(), contains(entry.subspace, c_vector)});
    }
  }
  return report;
}

ShorGeometry shor_geometry(std::int64_t a, std::int64_t N, std::int64_t s) {
  if (N < 2) {
    throw std::invalid_argument("shor_geometry: N must be >= 2");
  }
  if (a < 1 || a >= N || gcd(a, N) != 1) {
    throw std::invalid_argument(
        "shor_geometry: a must be in [1, N) and coprime to N");
  }
  if (s < 2) {
    throw std::invalid_argument("shor_geometry: s must be >= 2");
  }

  ShorGeometry geometry;
  geometry.order_of_a = brute_force_order(a, N);

  std::vector<std::int64_t> orders;
  for (std::int64_t b = 1; b < N; ++b) {
    if (std::gcd(b, N) != 1) continue;
    const std::int64_t r = brute_force_order(b, N);
    if (std::find(orders.begin(), orders.end(), r) == orders.end()) {
      orders.push_back(r);
    }
  }
  std::sort(orders.begin(), orders.end());

  for (const std::int64_t r : orders) {
    if (s % r != 0) {
      geometry.excluded_orders.push_back(r);
      continue;
    }
    ShorGeometryEntry entry;
    entry.r = r;
    std::vector<Vector> vectors;
    for (std::int64_t k = 0; k < r; ++k) {
      entry.support.push_back(k * (s / r));
      Vector e = Vector::Zero(s);
      e[k * (s / r)] = Complex{1.0, 0.0};
      vectors.push_back(std::move(e));
    }
    entry.subspace = span(vectors, s);
    geometry.entries.push_back(std::move(entry));
  }

  for (std::size_t i = 0; i < geometry.entries.size(); ++i) {
    for (std::size_t j = 0; j < geometry.entries.size(); ++j) {
      if (i == j) continue;
      if (is_subspace_of(geometry.entries[i].subspace,
                         geometry.entries[j].subspace)) {
        geometry.nestings.emplace_back(i, j);
      }
    }
  }
  return geometry;
}

}  // namespace qlogic
