#include "qlogic/number_theory.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qlogic {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Largest b with b^k <= n, by binary search on 64-bit-safe powers.
std::int64_t integer_kth_root(std::int64_t n, int k) {
  std::int64_t lo = 1, hi = n;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    std::int64_t power = 1;
    bool overflow = false;
    for (int i = 0; i < k; ++i) {
      if (power > n / mid) {
        overflow = true;
        break;
      }
      power *= mid;
    }
    if (!overflow && power <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) {
    throw std::invalid_argument("gcd: arguments must be non-negative");
  }
  if (a == 0 && b == 0) {
    throw std::invalid_argument("gcd: gcd(0, 0) is undefined");
  }
  return std::gcd(a, b);
}

std::int64_t mod_exp(std::int64_t a, std::int64_t e, std::int64_t n) {
  if (n < 2) {
    throw std::invalid_argument("mod_exp: modulus must be >= 2");
  }
  if (n > kMaxModulus) {
    throw std::invalid_argument("mod_exp: modulus exceeds 2^31, products would overflow");
  }
  if (e < 0) {
    throw std::invalid_argument("mod_exp: exponent must be non-negative");
  }
  if (a < 0) {
    throw std::invalid_argument("mod_exp: base must be non-negative");
  }
  std::uint64_t base = static_cast<std::uint64_t>(a % n);
  std::uint64_t result = 1 % static_cast<std::uint64_t>(n);
  std::uint64_t exp = static_cast<std::uint64_t>(e);
  const std::uint64_t mod = static_cast<std::uint64_t>(n);
  while (exp > 0) {
    if (exp & 1) {
      result = result * base % mod;
    }
    base = base * base % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

Fraction reduce(const Fraction& f) {
  if (f.denominator <= 0) {
    throw std::invalid_argument("reduce: denominator must be positive");
  }
  if (f.numerator < 0) {
    throw std::invalid_argument("reduce: numerator must be non-negative");
  }
  if (f.numerator == 0) {
    return Fraction{0, 1};
  }
  const std::int64_t g = std::gcd(f.numerator, f.denominator);
  return Fraction{f.numerator / g, f.denominator / g};
}

ShorInputCheck validate_shor_input(std::int64_t n) {
  if (n < 2) {
    throw std::invalid_argument("validate_shor_input: N must be >= 2");
  }
  if (n > kMaxModulus) {
    throw std::invalid_argument("validate_shor_input: N exceeds 2^31");
  }
  // Perfect powers first so N = 16 reports its structure rather than parity.
  for (int k = 2; (std::int64_t{1} << k) <= n; ++k) {
    const std::int64_t b = integer_kth_root(n, k);
    if (b >= 2) {
      std::int64_t power = 1;
      for (int i = 0; i < k; ++i) power *= b;
      if (power == n) {
        return {ShorInputCheck::Status::kPerfectPower, b};
      }
    }
  }
  if (n % 2 == 0) {
    return {ShorInputCheck::Status::kEven, 2};
  }
  if (is_prime(n)) {
    return {ShorInputCheck::Status::kPrime, 0};
  }
  return {ShorInputCheck::Status::kOk, 0};
}

std::vector<std::uint64_t> solve_gf2(const std::vector<std::uint64_t>& equations,
                                     int n) {
  if (n < 1 || n > 63) {
    throw std::invalid_argument("solve_gf2: n must be in [1, 63]");
  }
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t eq : equations) {
    if (eq & ~mask) {
      throw std::invalid_argument("solve_gf2: equation wider than n bits");
    }
  }

  std::vector<std::uint64_t> rows(equations.begin(), equations.end());
  // pivot_row[bit] = index of the row that pivots on that bit, or -1.
  std::vector<int> pivot_row(n, -1);
  int rank = 0;
  for (int bit = 0; bit < n && rank < static_cast<int>(rows.size()); ++bit) {
    int chosen = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i] >> bit & 1) {
        chosen = i;
        break;
      }
    }
    if (chosen < 0) continue;
    std::swap(rows[rank], rows[chosen]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != rank && (rows[i] >> bit & 1)) {
        rows[i] ^= rows[rank];
      }
    }
    pivot_row[bit] = rank;
    ++rank;
  }

  std::vector<std::uint64_t> basis;
  for (int free_bit = 0; free_bit < n; ++free_bit) {
    if (pivot_row[free_bit] >= 0) continue;
    std::uint64_t v = std::uint64_t{1} << free_bit;
    for (int bit = 0; bit < n; ++bit) {
      if (pivot_row[bit] >= 0 && (rows[pivot_row[bit]] >> free_bit & 1)) {
        v |= std::uint64_t{1} << bit;
      }
    }
    basis.push_back(v);
  }
  return basis;
}

}  // namespace qlogic
