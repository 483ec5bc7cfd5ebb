#include "qlogic/unitary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qlogic/number_theory.hpp"

namespace qlogic {

namespace {

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

void check_two_registers(const RegisterLayout& layout, const char* who) {
  if (layout.register_count() != 2) {
    throw std::invalid_argument(std::string(who) +
                                ": layout must have input and output registers");
  }
}

}  // namespace

Unitary oracle_xor_unitary(const TruthTable& f, const RegisterLayout& layout) {
  check_two_registers(layout, "oracle_xor_unitary");
  validate_truth_table(f);
  const std::int64_t in_dim = layout.dim(0);
  const std::int64_t out_dim = layout.dim(1);
  if (f.domain_size != in_dim) {
    throw std::invalid_argument(
        "oracle_xor_unitary: domain_size does not match input dimension");
  }
  if (!is_power_of_two(out_dim) || f.codomain_size != out_dim) {
    throw std::invalid_argument(
        "oracle_xor_unitary: codomain and output dimension must be the same "
        "power of two");
  }

  const std::int64_t total = layout.total_dimension();
  Unitary u{Matrix::Zero(total, total)};
  for (std::int64_t x = 0; x < in_dim; ++x) {
    for (std::int64_t y = 0; y < out_dim; ++y) {
      const std::int64_t from = layout.composite_index({x, y});
      const std::int64_t to = layout.composite_index({x, y ^ f.values[x]});
      u.matrix(to, from) = Complex{1.0, 0.0};
    }
  }
  return u;
}

Unitary oracle_modmul_unitary(std::int64_t a, std::int64_t N,
                              const RegisterLayout& layout) {
  check_two_registers(layout, "oracle_modmul_unitary");
  if (N < 2) {
    throw std::invalid_argument("oracle_modmul_unitary: N must be >= 2");
  }
  if (a < 1 || gcd(a, N) != 1) {
    throw std::invalid_argument("oracle_modmul_unitary: a must be coprime to N");
  }
  const std::int64_t in_dim = layout.dim(0);
  const std::int64_t out_dim = layout.dim(1);
  if (out_dim < N) {
    throw std::invalid_argument(
        "oracle_modmul_unitary: output dimension must be >= N");
  }

  const std::int64_t total = layout.total_dimension();
  Unitary u{Matrix::Zero(total, total)};
  std::int64_t power = 1 % N;  // a^x mod N, updated per column block
  for (std::int64_t x = 0; x < in_dim; ++x) {
    for (std::int64_t y = 0; y < out_dim; ++y) {
      std::int64_t image;
      if (y >= N) {
        image = y;
      } else {
        image = y * power % N;
        // Multiplication alone fixes 0; swapping the images 0 and a^x makes
        // the zero label carry the modular power, as the algorithm needs.
        if (image == 0) {
          image = power;
        } else if (image == power) {
          image = 0;
        }
      }
      u.matrix(layout.composite_index({x, image}),
               layout.composite_index({x, y})) = Complex{1.0, 0.0};
    }
    power = power * a % N;
  }
  return u;
}

Unitary qft_unitary(std::int64_t s) {
  if (s < 2) {
    throw std::invalid_argument("qft_unitary: s must be >= 2");
  }
  Unitary u{Matrix(s, s)};
  const double scale = 1.0 / std::sqrt(static_cast<double>(s));
  const double theta = 2.0 * std::numbers::pi / static_cast<double>(s);
  for (std::int64_t y = 0; y < s; ++y) {
    for (std::int64_t x = 0; x < s; ++x) {
      // Exponent reduced mod s to keep the angle small and the matrix exactly
      // symmetric in x and y.
      const double angle = theta * static_cast<double>(x * y % s);
      u.matrix(y, x) = scale * Complex{std::cos(angle), std::sin(angle)};
    }
  }
  return u;
}

StateVector apply(const Unitary& u, const StateVector& state) {
  if (u.dimension() != state.layout.total_dimension()) {
    throw std::invalid_argument("apply: unitary dimension does not match state");
  }
  return StateVector{state.layout, u.matrix * state.amplitudes};
}

StateVector apply(const Unitary& u, const StateVector& state,
                  std::size_t register_index) {
  if (register_index >= state.layout.register_count()) {
    throw std::invalid_argument("apply: register index out of range");
  }
  const std::int64_t dim = state.layout.dim(register_index);
  if (u.dimension() != dim) {
    throw std::invalid_argument("apply: unitary dimension does not match register");
  }
  const std::int64_t stride = state.layout.stride(register_index);
  const std::int64_t total = state.layout.total_dimension();

  StateVector result{state.layout, Vector(total)};
  Vector fiber(dim);
  // Each fiber fixes all other registers' labels and runs over this one.
  for (std::int64_t high = 0; high < total / (stride * dim); ++high) {
    for (std::int64_t low = 0; low < stride; ++low) {
      const std::int64_t base = high * stride * dim + low;
      for (std::int64_t k = 0; k < dim; ++k) {
        fiber[k] = state.amplitudes[base + k * stride];
      }
      const Vector image = u.matrix * fiber;
      for (std::int64_t k = 0; k < dim; ++k) {
        result.amplitudes[base + k * stride] = image[k];
      }
    }
  }
  return result;
}

}  // namespace qlogic
