#pragma once

#include "lienil/matrix.hpp"

namespace lienil {

/// Linear subspace of Q(i)^n held as a canonical RREF basis
/// (rows are basis vectors). Two subspaces are equal iff their
/// RREF bases are identical.
class Subspace {
public:
  /// The zero subspace.
  explicit Subspace(std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t k) const { return basis_.row(k); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

  friend Subspace span(const std::vector<Vector>& vectors,
                       std::size_t ambient_dim);

private:
  std::size_t ambient_;
  Matrix basis_;
};

/// Canonical subspace spanned by the given vectors (each of length
/// ambient_dim); order-insensitive.
Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);

Subspace sum(const Subspace& s, const Subspace& t);

/// s ∩ t; throws std::invalid_argument on ambient-dimension mismatch.
Subspace intersect(const Subspace& s, const Subspace& t);

}  // namespace lienil
