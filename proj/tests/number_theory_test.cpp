#include "qlogic/number_theory.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <set>
#include <stdexcept>

#include "qlogic/random.hpp"
#include "qlogic/truth_table.hpp"

namespace qlogic {
namespace {

TEST(Gcd, KnownValues) {
  EXPECT_EQ(gcd(48, 15), 3);
  EXPECT_EQ(gcd(50, 15), 5);
  EXPECT_EQ(gcd(15, 50), 5);
  EXPECT_EQ(gcd(7, 15), 1);
  EXPECT_EQ(gcd(0, 5), 5);
  EXPECT_EQ(gcd(5, 0), 5);
  EXPECT_EQ(gcd(13, 13), 13);
}

TEST(Gcd, RejectsInvalid) {
  EXPECT_THROW(gcd(0, 0), std::invalid_argument);
  EXPECT_THROW(gcd(-4, 6), std::invalid_argument);
  EXPECT_THROW(gcd(4, -6), std::invalid_argument);
}

TEST(ModExp, PowersOfTwoModFifteen) {
  const std::int64_t expected[] = {1, 2, 4, 8, 1, 2, 4, 8};
  for (int e = 0; e < 8; ++e) {
    EXPECT_EQ(mod_exp(2, e, 15), expected[e]) << "e=" << e;
  }
}

TEST(ModExp, LargeExponent) {
  // 7 has order 4 mod 15; 2^40 = 0 mod 4.
  EXPECT_EQ(mod_exp(7, std::int64_t{1} << 40, 15), 1);
  // Independent reference value: pow(3, 10**15, 1000003) in any bignum tool.
  EXPECT_EQ(mod_exp(3, 1000000000000000, 1000003), 400755);
  // Modulus at the upper cap; 2^62 fits the intermediate square.
  EXPECT_EQ(mod_exp((std::int64_t{1} << 31) - 1, 2, std::int64_t{1} << 31),
            1);
}

TEST(ModExp, Edges) {
  EXPECT_EQ(mod_exp(9, 0, 15), 1);
  EXPECT_EQ(mod_exp(0, 3, 15), 0);
  EXPECT_EQ(mod_exp(15, 1, 15), 0);  // a reduced mod n first
  EXPECT_THROW(mod_exp(2, -1, 15), std::invalid_argument);
  EXPECT_THROW(mod_exp(2, 3, 1), std::invalid_argument);
  EXPECT_THROW(mod_exp(-2, 3, 15), std::invalid_argument);
  EXPECT_THROW(mod_exp(2, 3, (std::int64_t{1} << 31) + 1),
               std::invalid_argument);
}

TEST(Fraction, ReduceLowestTerms) {
  EXPECT_EQ(reduce({32, 64}), (Fraction{1, 2}));
  EXPECT_EQ(reduce({16, 64}), (Fraction{1, 4}));
  EXPECT_EQ(reduce({48, 64}), (Fraction{3, 4}));
  EXPECT_EQ(reduce({13, 66}), (Fraction{13, 66}));
  EXPECT_EQ(reduce({0, 7}), (Fraction{0, 1}));
  EXPECT_EQ(reduce({6, 6}), (Fraction{1, 1}));
}

TEST(Fraction, ReduceRejectsInvalid) {
  EXPECT_THROW(reduce({1, 0}), std::invalid_argument);
  EXPECT_THROW(reduce({1, -2}), std::invalid_argument);
  EXPECT_THROW(reduce({-1, 2}), std::invalid_argument);
}

TEST(ShorInput, AcceptsOddCompositeNonPowers) {
  for (const std::int64_t n : {15, 21, 33, 35, 91}) {
    const ShorInputCheck check = validate_shor_input(n);
    EXPECT_TRUE(check.ok()) << "n=" << n;
  }
}

TEST(ShorInput, RejectsWithWitnesses) {
  ShorInputCheck check = validate_shor_input(14);
  EXPECT_EQ(check.status, ShorInputCheck::Status::kEven);
  EXPECT_EQ(check.witness, 2);

  check = validate_shor_input(13);
  EXPECT_EQ(check.status, ShorInputCheck::Status::kPrime);

  check = validate_shor_input(27);
  EXPECT_EQ(check.status, ShorInputCheck::Status::kPerfectPower);
  EXPECT_EQ(check.witness, 3);

  check = validate_shor_input(121);
  EXPECT_EQ(check.status, ShorInputCheck::Status::kPerfectPower);
  EXPECT_EQ(check.witness, 11);
}

TEST(ShorInput, PerfectPowerScreensBeforeParity) {
  // 16 is both even and a power; the power structure is the stronger fact.
  const ShorInputCheck check = validate_shor_input(16);
  EXPECT_EQ(check.status, ShorInputCheck::Status::kPerfectPower);
  EXPECT_EQ(check.witness, 4);  // smallest exponent found first: 4^2
}

TEST(ShorInput, RejectsOutOfRange) {
  EXPECT_THROW(validate_shor_input(1), std::invalid_argument);
  EXPECT_THROW(validate_shor_input((std::int64_t{1} << 31) + 1),
               std::invalid_argument);
}

TEST(BruteForceOrder, SurveyModFifteen) {
  const std::int64_t bases[] = {2, 4, 8, 11, 13, 14};
  const std::int64_t orders[] = {4, 2, 4, 2, 4, 2};
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(brute_force_order(bases[i], 15), orders[i]) << "a=" << bases[i];
  }
  EXPECT_EQ(brute_force_order(1, 15), 1);
  EXPECT_EQ(brute_force_order(7, 15), 4);
  EXPECT_EQ(brute_force_order(10, 33), 2);
  EXPECT_THROW(brute_force_order(6, 15), std::invalid_argument);
}

bool gf2_orthogonal(std::uint64_t a, std::uint64_t b) {
  return (std::popcount(a & b) & 1) == 0;
}

TEST(SolveGf2, FrozenSmallSystems) {
  EXPECT_EQ(solve_gf2({0b011, 0b101}, 3),
            (std::vector<std::uint64_t>{0b111}));
  EXPECT_EQ(solve_gf2({0b010, 0b100}, 3),
            (std::vector<std::uint64_t>{0b001}));
}

TEST(SolveGf2, EmptyAndRedundantSystems) {
  const auto full = solve_gf2({}, 2);
  EXPECT_EQ(full.size(), 2u);
  const auto redundant = solve_gf2({0b011, 0b011, 0b000}, 3);
  EXPECT_EQ(redundant.size(), 2u);
  for (const std::uint64_t v : redundant) {
    EXPECT_TRUE(gf2_orthogonal(v, 0b011));
  }
}

// Independent oracle: enumerate the whole solution set and require the basis
// to generate exactly that set.
TEST(SolveGf2, BasisGeneratesExactSolutionSet) {
  Rng rng(3);
  const int n = 6;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> equations;
    const int count = static_cast<int>(uniform_below(8, rng));
    for (int i = 0; i < count; ++i) {
      equations.push_back(uniform_below(std::uint64_t{1} << n, rng));
    }
    const auto basis = solve_gf2(equations, n);

    std::set<std::uint64_t> solutions;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      bool ok = true;
      for (const std::uint64_t e : equations) ok = ok && gf2_orthogonal(v, e);
      if (ok) solutions.insert(v);
    }

    std::set<std::uint64_t> generated;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size());
         ++mask) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (mask >> i & 1) v ^= basis[i];
      }
      generated.insert(v);
    }
    EXPECT_EQ(generated, solutions) << "trial " << trial;
    EXPECT_EQ(generated.size(), std::uint64_t{1} << basis.size());
  }
}

TEST(SolveGf2, RejectsBadInput) {
  EXPECT_THROW(solve_gf2({}, 0), std::invalid_argument);
  EXPECT_THROW(solve_gf2({}, 64), std::invalid_argument);
  EXPECT_THROW(solve_gf2({0b100}, 2), std::invalid_argument);  // bit beyond n
}

}  // namespace
}  // namespace qlogic
