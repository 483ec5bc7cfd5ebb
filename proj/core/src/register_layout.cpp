#include "qlogic/register_layout.hpp"

#include <stdexcept>
#include <string>

namespace qlogic {

namespace {
constexpr std::int64_t kMaxCompositeDimension = std::int64_t{1} << 16;
}

RegisterLayout::RegisterLayout(std::vector<std::int64_t> dims)
    : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw std::invalid_argument("RegisterLayout: at least one register required");
  }
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 2) {
      throw std::invalid_argument("RegisterLayout: register " + std::to_string(i) +
                                  " has dimension < 2");
    }
    if (total_ > kMaxCompositeDimension / dims_[i]) {
      throw std::invalid_argument("RegisterLayout: composite dimension exceeds 2^16");
    }
    total_ *= dims_[i];
  }
  strides_.assign(dims_.size(), 1);
  for (std::size_t i = dims_.size(); i-- > 1;) {
    strides_[i - 1] = strides_[i] * dims_[i];
  }
}

std::int64_t RegisterLayout::dim(std::size_t reg) const {
  if (reg >= dims_.size()) {
    throw std::invalid_argument("RegisterLayout: register index out of range");
  }
  return dims_[reg];
}

std::int64_t RegisterLayout::stride(std::size_t reg) const {
  if (reg >= strides_.size()) {
    throw std::invalid_argument("RegisterLayout: register index out of range");
  }
  return strides_[reg];
}

std::int64_t RegisterLayout::composite_index(
    const std::vector<std::int64_t>& labels) const {
  if (labels.size() != dims_.size()) {
    throw std::invalid_argument("RegisterLayout: label count mismatch");
  }
  std::int64_t index = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= dims_[i]) {
      throw std::invalid_argument("RegisterLayout: label for register " +
                                  std::to_string(i) + " out of range");
    }
    index += labels[i] * strides_[i];
  }
  return index;
}

std::vector<std::int64_t> RegisterLayout::labels_of(std::int64_t composite) const {
  if (composite < 0 || composite >= total_) {
    throw std::invalid_argument("RegisterLayout: composite index out of range");
  }
  std::vector<std::int64_t> labels(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    labels[i] = (composite / strides_[i]) % dims_[i];
  }
  return labels;
}

std::int64_t RegisterLayout::label_of(std::int64_t composite,
                                      std::size_t reg) const {
  if (composite < 0 || composite >= total_) {
    throw std::invalid_argument("RegisterLayout: composite index out of range");
  }
  return (composite / stride(reg)) % dims_[reg];
}

bool RegisterLayout::operator==(const RegisterLayout& other) const {
  return dims_ == other.dims_;
}

}  // namespace qlogic
