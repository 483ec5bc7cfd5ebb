#pragma once

#include <cstdint>
#include <vector>

namespace qlogic {

// Greatest common divisor; a, b >= 0 and not both zero.
std::int64_t gcd(std::int64_t a, std::int64_t b);

// a^e mod n by square-and-multiply. n is validated to be in [2, 2^31] so
// intermediate products fit in 64 bits.
std::int64_t mod_exp(std::int64_t a, std::int64_t e, std::int64_t n);

struct Fraction {
  std::int64_t numerator = 0;   // >= 0
  std::int64_t denominator = 1; // > 0

  bool operator==(const Fraction& other) const = default;
};

// Both components divided by their gcd; 0/s reduces to 0/1.
Fraction reduce(const Fraction& f);

// Classical screen for factoring input. Rejections are values, not errors;
// even and perfect-power rejections carry a nontrivial factor as witness.
struct ShorInputCheck {
  enum class Status { kOk, kEven, kPrime, kPerfectPower };

  Status status = Status::kOk;
  std::int64_t witness = 0;

  bool ok() const { return status == Status::kOk; }
};

ShorInputCheck validate_shor_input(std::int64_t n);

// Basis of the null space {r : y . r = 0 (mod 2) for every equation y} by
// Gaussian elimination, pivoting on the lowest set bit first. Vectors are
// n-bit masks, 1 <= n <= 63; basis vectors come out in increasing free-bit
// order, so the result is deterministic.
std::vector<std::uint64_t> solve_gf2(const std::vector<std::uint64_t>& equations,
                                     int n);

}  // namespace qlogic
