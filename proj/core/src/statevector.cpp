#include "qlogic/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlogic {

namespace {

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

void check_register(const StateVector& state, std::size_t register_index) {
  if (register_index >= state.layout.register_count()) {
    throw std::invalid_argument("register index out of range");
  }
  if (state.amplitudes.size() != state.layout.total_dimension()) {
    throw std::invalid_argument("state length does not match layout");
  }
}

void check_normalized(const StateVector& state) {
  if (std::abs(norm(state) - 1.0) > kTolerance) {
    throw std::invalid_argument("state is not normalized");
  }
}

}  // namespace

StateVector basis_state(const RegisterLayout& layout,
                        const std::vector<std::int64_t>& labels) {
  StateVector state{layout, Vector::Zero(layout.total_dimension())};
  state.amplitudes[layout.composite_index(labels)] = Complex{1.0, 0.0};
  return state;
}

StateVector hadamard_basis_state(const RegisterLayout& layout,
                                 const std::vector<std::int64_t>& labels) {
  StateVector state = basis_state(layout, labels);
  for (std::size_t reg = 0; reg < layout.register_count(); ++reg) {
    state = hadamard_layer(state, reg);
  }
  return state;
}

StateVector hadamard_layer(const StateVector& state, std::size_t register_index) {
  check_register(state, register_index);
  const std::int64_t dim = state.layout.dim(register_index);
  if (!is_power_of_two(dim)) {
    throw std::domain_error(
        "hadamard_layer: register dimension " + std::to_string(dim) +
        " is not a power of two");
  }
  const std::int64_t stride = state.layout.stride(register_index);
  const std::int64_t total = state.layout.total_dimension();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  StateVector result = state;
  // Butterfly per qubit of the addressed register: pairs of composite indices
  // differing in one register bit.
  for (std::int64_t bit = 1; bit < dim; bit <<= 1) {
    const std::int64_t bit_stride = bit * stride;
    for (std::int64_t i = 0; i < total; ++i) {
      const std::int64_t label = (i / stride) % dim;
      if (label & bit) continue;
      const std::int64_t j = i + bit_stride;
      const Complex lo = result.amplitudes[i];
      const Complex hi = result.amplitudes[j];
      result.amplitudes[i] = (lo + hi) * inv_sqrt2;
      result.amplitudes[j] = (lo - hi) * inv_sqrt2;
    }
  }
  return result;
}

std::vector<double> marginal_distribution(const StateVector& state,
                                          std::size_t register_index) {
  check_register(state, register_index);
  check_normalized(state);
  const std::int64_t dim = state.layout.dim(register_index);
  const std::int64_t stride = state.layout.stride(register_index);
  std::vector<double> probabilities(dim, 0.0);
  for (std::int64_t i = 0; i < state.layout.total_dimension(); ++i) {
    probabilities[(i / stride) % dim] += std::norm(state.amplitudes[i]);
  }
  return probabilities;
}

MeasurementRecord measure(const StateVector& state, std::size_t register_index,
                          Rng& rng) {
  check_register(state, register_index);
  if (norm(state) <= kTolerance) {
    throw std::invalid_argument("measure: zero-norm state");
  }
  check_normalized(state);
  const std::vector<double> probabilities =
      marginal_distribution(state, register_index);
  const std::int64_t outcome =
      static_cast<std::int64_t>(sample_index(probabilities, rng));

  const std::int64_t dim = state.layout.dim(register_index);
  const std::int64_t stride = state.layout.stride(register_index);
  const double p = probabilities[outcome];
  StateVector post{state.layout, Vector::Zero(state.layout.total_dimension())};
  const double scale = 1.0 / std::sqrt(p);
  for (std::int64_t i = 0; i < state.layout.total_dimension(); ++i) {
    if ((i / stride) % dim == outcome) {
      post.amplitudes[i] = state.amplitudes[i] * scale;
    }
  }
  return MeasurementRecord{register_index, outcome, p, std::move(post)};
}

StateVector project_onto_outcome(const StateVector& state,
                                 std::size_t register_index,
                                 std::int64_t outcome) {
  check_register(state, register_index);
  const std::int64_t dim = state.layout.dim(register_index);
  if (outcome < 0 || outcome >= dim) {
    throw std::invalid_argument("project_onto_outcome: outcome out of range");
  }
  const std::int64_t stride = state.layout.stride(register_index);
  StateVector post{state.layout, Vector::Zero(state.layout.total_dimension())};
  double weight = 0.0;
  for (std::int64_t i = 0; i < state.layout.total_dimension(); ++i) {
    if ((i / stride) % dim == outcome) {
      post.amplitudes[i] = state.amplitudes[i];
      weight += std::norm(state.amplitudes[i]);
    }
  }
  if (weight <= kTolerance * kTolerance) {
    throw std::invalid_argument(
        "project_onto_outcome: outcome has (near-)zero probability");
  }
  post.amplitudes /= std::sqrt(weight);
  return post;
}

std::optional<Vector> try_factor_register(const StateVector& state,
                                          std::size_t register_index) {
  check_register(state, register_index);
  const std::int64_t dim = state.layout.dim(register_index);
  const std::int64_t stride = state.layout.stride(register_index);
  const std::int64_t total = state.layout.total_dimension();
  const std::int64_t rest = total / dim;

  // Reshape to a dim x rest matrix; a product state across this cut is
  // exactly a rank-1 matrix phi * chi^T.
  Matrix m(dim, rest);
  for (std::int64_t i = 0; i < total; ++i) {
    const std::int64_t row = (i / stride) % dim;
    // Column index: all other registers' labels, in layout order.
    const std::int64_t high = i / (stride * dim);
    const std::int64_t low = i % stride;
    m(row, high * stride + low) = state.amplitudes[i];
  }

  std::int64_t best_col = 0;
  double best_norm = 0.0;
  for (std::int64_t c = 0; c < rest; ++c) {
    const double n = m.col(c).norm();
    if (n > best_norm) {
      best_norm = n;
      best_col = c;
    }
  }
  if (best_norm <= kTolerance) return std::nullopt;

  Vector phi = m.col(best_col) / best_norm;
  // Residual of the rank-1 projection; nonzero means entanglement.
  const Matrix residual = m - phi * (phi.adjoint() * m);
  if (residual.cwiseAbs().maxCoeff() > kTolerance) return std::nullopt;

  const double n = phi.norm();
  return Vector(phi / n);
}

double norm(const StateVector& state) { return state.amplitudes.norm(); }

bool equal_up_to_phase(const Vector& v, const Vector& w, double tol) {
  if (v.size() != w.size()) return false;
  return std::abs(std::abs(v.dot(w)) - 1.0) <= tol;
}

}  // namespace qlogic
