#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qlogic/types.hpp"

namespace qlogic {

// Closed subspace of C^ambient, held as an orthonormal basis. Immutable.
class Subspace {
 public:
  // Columns of basis must be orthonormal within kTolerance (validated).
  Subspace(std::int64_t ambient_dimension, Matrix basis);

  static Subspace zero(std::int64_t ambient_dimension);
  static Subspace full(std::int64_t ambient_dimension);

  std::int64_t ambient_dimension() const { return ambient_; }
  std::int64_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::int64_t i) const { return basis_.col(i); }

 private:
  std::int64_t ambient_;
  Matrix basis_;  // ambient_ rows, dim() orthonormal columns
};

struct Projector {
  Matrix matrix;  // Hermitian, idempotent
};

// Orthonormal basis of the linear span by modified (re-orthogonalized)
// Gram-Schmidt, processing vectors in input order; vectors whose residual
// norm is <= kRankTolerance are discarded. Empty input gives the zero
// subspace.
Subspace span(const std::vector<Vector>& vectors, std::int64_t ambient_dimension);

// P = sum_i |b_i><b_i|.
Projector projector(const Subspace& sub);

// Intersection, computed as the span of eigenvectors of P_a P_b P_a with
// eigenvalue within kRankTolerance of 1. Exact for commuting pairs, stable
// for near-commuting ones.
Subspace meet(const Subspace& a, const Subspace& b);

// Span of the union of bases.
Subspace join(const Subspace& a, const Subspace& b);

Subspace orthocomplement(const Subspace& a);

// Max-entry test of |P_a P_b - P_b P_a|.
bool commutes(const Subspace& a, const Subspace& b, double tol = kTolerance);

// ||P_a v - v|| <= tol for a normalized v.
bool contains(const Subspace& a, const Vector& v, double tol = kTolerance);

// Mutual containment of bases; bases themselves are not canonical.
bool subspace_equal(const Subspace& a, const Subspace& b, double tol = kTolerance);

// Every basis vector of a lies in b.
bool is_subspace_of(const Subspace& a, const Subspace& b, double tol = kTolerance);

// Index of the unique candidate containing v, nullopt when v lies in more
// than one (i.e. in a pairwise meet, where the result carries no
// distinguishing information). Candidates are assumed pairwise commuting.
// Throws std::invalid_argument when no candidate contains v.
std::optional<std::size_t> subspace_distinguisher(
    const std::vector<Subspace>& candidates, const Vector& v,
    double tol = kTolerance);

}  // namespace qlogic
