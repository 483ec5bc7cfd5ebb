#include "qlogic/subspace.hpp"

#include <stdexcept>

namespace qlogic {

namespace {

void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dimension() != b.ambient_dimension()) {
    throw std::invalid_argument("subspace ambient dimensions differ");
  }
}

}  // namespace

Subspace::Subspace(std::int64_t ambient_dimension, Matrix basis)
    : ambient_(ambient_dimension), basis_(std::move(basis)) {
  if (ambient_ < 1) {
    throw std::invalid_argument("Subspace: ambient dimension must be positive");
  }
  if (basis_.size() == 0) {
    basis_ = Matrix(ambient_, 0);
  }
  if (basis_.rows() != ambient_) {
    throw std::invalid_argument("Subspace: basis vectors have wrong dimension");
  }
  if (basis_.cols() > ambient_) {
    throw std::invalid_argument("Subspace: more basis vectors than dimensions");
  }
  const Matrix gram = basis_.adjoint() * basis_;
  const Matrix deviation =
      gram - Matrix::Identity(basis_.cols(), basis_.cols());
  if (basis_.cols() > 0 && deviation.cwiseAbs().maxCoeff() > kTolerance) {
    throw std::invalid_argument("Subspace: basis is not orthonormal");
  }
}

Subspace Subspace::zero(std::int64_t ambient_dimension) {
  return Subspace(ambient_dimension, Matrix(ambient_dimension, 0));
}

Subspace Subspace::full(std::int64_t ambient_dimension) {
  return Subspace(ambient_dimension,
                  Matrix::Identity(ambient_dimension, ambient_dimension));
}

Subspace span(const std::vector<Vector>& vectors, std::int64_t ambient_dimension) {
  if (ambient_dimension < 1) {
    throw std::invalid_argument("span: ambient dimension must be positive");
  }
  for (const Vector& v : vectors) {
    if (v.size() != ambient_dimension) {
      throw std::invalid_argument("span: vector dimension mismatch");
    }
  }
  Matrix basis(ambient_dimension, 0);
  for (const Vector& v : vectors) {
    Vector w = v;
    // Two orthogonalization passes keep the basis orthonormal well below the
    // rank tolerance even for nearly dependent inputs.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::int64_t i = 0; i < basis.cols(); ++i) {
        w -= basis.col(i).dot(w) * basis.col(i);
      }
    }
    const double residual = w.norm();
    if (residual <= kRankTolerance) continue;
    basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
    basis.col(basis.cols() - 1) = w / residual;
  }
  return Subspace(ambient_dimension, std::move(basis));
}

Projector projector(const Subspace& sub) {
  if (sub.dim() == 0) {
    return Projector{
        Matrix::Zero(sub.ambient_dimension(), sub.ambient_dimension())};
  }
  return Projector{sub.basis() * sub.basis().adjoint()};
}

Subspace meet(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  const std::int64_t n = a.ambient_dimension();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);

  const Matrix pa = projector(a).matrix;
  const Matrix pb = projector(b).matrix;
  // P_a P_b P_a is Hermitian PSD; its eigenvalue-1 eigenspace is the
  // intersection (eigenvalues in (0,1) witness non-commuting overlap).
  const Matrix sandwich = pa * pb * pa;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sandwich);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("meet: eigendecomposition failed");
  }
  std::vector<Vector> kept;
  for (std::int64_t i = 0; i < n; ++i) {
    if (solver.eigenvalues()[i] >= 1.0 - kRankTolerance) {
      kept.push_back(solver.eigenvectors().col(i));
    }
  }
  return span(kept, n);
}

Subspace join(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  std::vector<Vector> vectors;
  vectors.reserve(a.dim() + b.dim());
  for (std::int64_t i = 0; i < a.dim(); ++i) vectors.push_back(a.basis_vector(i));
  for (std::int64_t i = 0; i < b.dim(); ++i) vectors.push_back(b.basis_vector(i));
  return span(vectors, a.ambient_dimension());
}

Subspace orthocomplement(const Subspace& a) {
  const std::int64_t n = a.ambient_dimension();
  // Extend a's basis by the standard basis; the vectors accepted after a's
  // are exactly an orthonormal basis of the complement.
  Matrix basis = a.basis();
  Matrix complement(n, 0);
  for (std::int64_t e = 0; e < n; ++e) {
    Vector w = Vector::Zero(n);
    w[e] = Complex{1.0, 0.0};
    for (int pass = 0; pass < 2; ++pass) {
      for (std::int64_t i = 0; i < basis.cols(); ++i) {
        w -= basis.col(i).dot(w) * basis.col(i);
      }
      for (std::int64_t i = 0; i < complement.cols(); ++i) {
        w -= complement.col(i).dot(w) * complement.col(i);
      }
    }
    const double residual = w.norm();
    if (residual <= kRankTolerance) continue;
    complement.conservativeResize(Eigen::NoChange, complement.cols() + 1);
    complement.col(complement.cols() - 1) = w / residual;
  }
  return Subspace(n, std::move(complement));
}

bool commutes(const Subspace& a, const Subspace& b, double tol) {
  check_same_ambient(a, b);
  const Matrix pa = projector(a).matrix;
  const Matrix pb = projector(b).matrix;
  return (pa * pb - pb * pa).cwiseAbs().maxCoeff() <= tol;
}

bool contains(const Subspace& a, const Vector& v, double tol) {
  if (v.size() != a.ambient_dimension()) {
    throw std::invalid_argument("contains: vector dimension mismatch");
  }
  if (a.dim() == 0) return v.norm() <= tol;
  // ||P v - v|| without forming the projector.
  const Vector coefficients = a.basis().adjoint() * v;
  const Vector projected = a.basis() * coefficients;
  return (projected - v).norm() <= tol;
}

bool is_subspace_of(const Subspace& a, const Subspace& b, double tol) {
  check_same_ambient(a, b);
  for (std::int64_t i = 0; i < a.dim(); ++i) {
    if (!contains(b, a.basis_vector(i), tol)) return false;
  }
  return true;
}

bool subspace_equal(const Subspace& a, const Subspace& b, double tol) {
  return is_subspace_of(a, b, tol) && is_subspace_of(b, a, tol);
}

std::optional<std::size_t> subspace_distinguisher(
    const std::vector<Subspace>& candidates, const Vector& v, double tol) {
  if (candidates.empty()) {
    throw std::invalid_argument("subspace_distinguisher: no candidates");
  }
  std::vector<std::size_t> holding;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (contains(candidates[i], v, tol)) holding.push_back(i);
  }
  if (holding.empty()) {
    throw std::invalid_argument(
        "subspace_distinguisher: state lies in no candidate (promise violation)");
  }
  // Membership in two candidates is exactly membership in their meet: the
  // outcome carries no distinguishing information.
  if (holding.size() > 1) return std::nullopt;
  return holding.front();
}

}  // namespace qlogic
