#include "qlogic/random.hpp"

#include <stdexcept>

namespace qlogic {

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::uint64_t bound, Rng& rng) {
  if (bound == 0) {
    throw std::invalid_argument("uniform_below: bound must be positive");
  }
  // Reject draws from the tail that would bias the modulus.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

std::size_t sample_index(const std::vector<double>& probabilities, Rng& rng) {
  if (probabilities.empty()) {
    throw std::invalid_argument("sample_index: empty distribution");
  }
  std::size_t last_positive = 0;
  bool any_positive = false;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] < 0.0) {
      throw std::invalid_argument("sample_index: negative weight");
    }
    if (probabilities[i] > 0.0) {
      last_positive = i;
      any_positive = true;
    }
  }
  if (!any_positive) {
    throw std::invalid_argument("sample_index: all weights are zero");
  }
  const double u = uniform_unit(rng);
  double cumulative = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    cumulative += probabilities[i];
    if (u < cumulative) {
      return i;
    }
  }
  // u landed beyond the accumulated total by rounding; clamp to the last
  // outcome that has weight.
  return last_positive;
}

}  // namespace qlogic
