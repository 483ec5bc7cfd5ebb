#pragma once

#include <cstdint>
#include <vector>

namespace qlogic {

// Ordered register dimensions, input register first, output register second.
// Composite indices are row-major: with two registers, a basis label pair
// (x, y) sits at composite index x * output_dim + y.
class RegisterLayout {
 public:
  // Every dimension must be >= 2 and the product must not exceed 2^16.
  explicit RegisterLayout(std::vector<std::int64_t> dims);

  std::int64_t total_dimension() const { return total_; }
  std::size_t register_count() const { return dims_.size(); }
  std::int64_t dim(std::size_t reg) const;
  std::int64_t stride(std::size_t reg) const;

  std::int64_t composite_index(const std::vector<std::int64_t>& labels) const;
  std::vector<std::int64_t> labels_of(std::int64_t composite) const;
  std::int64_t label_of(std::int64_t composite, std::size_t reg) const;

  bool operator==(const RegisterLayout& other) const;

 private:
  std::vector<std::int64_t> dims_;
  std::vector<std::int64_t> strides_;
  std::int64_t total_ = 1;
};

}  // namespace qlogic
