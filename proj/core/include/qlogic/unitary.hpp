#pragma once

#include <cstdint>

#include "qlogic/register_layout.hpp"
#include "qlogic/statevector.hpp"
#include "qlogic/truth_table.hpp"
#include "qlogic/types.hpp"

namespace qlogic {

struct Unitary {
  Matrix matrix;  // square

  std::int64_t dimension() const { return matrix.rows(); }
};

// Permutation unitary |x>|y> -> |x>|y ^ f(x)> on a two-register layout.
// f.domain_size must equal the input dimension and f.codomain_size the output
// dimension, both powers of two (XOR acts bitwise).
Unitary oracle_xor_unitary(const TruthTable& f, const RegisterLayout& layout);

// Permutation unitary sending |x>|0> to |x>|a^x mod N>. Other output labels
// y < N are multiplied by a^x mod N, with the images 0 and a^x mod N swapped
// to keep the map a bijection; labels N <= y < output_dim are fixed.
// Requires gcd(a, N) = 1 and output dimension >= N.
Unitary oracle_modmul_unitary(std::int64_t a, std::int64_t N,
                              const RegisterLayout& layout);

// Fourier matrix mod s: entry (y, x) = e^{2 pi i x y / s} / sqrt(s). s = 2
// gives the Hadamard matrix.
Unitary qft_unitary(std::int64_t s);

// Whole-space application: dimension of u must equal the total dimension.
StateVector apply(const Unitary& u, const StateVector& state);

// Application to a single register, identity on the rest.
StateVector apply(const Unitary& u, const StateVector& state,
                  std::size_t register_index);

}  // namespace qlogic
