#include "lienil/subspace.hpp"

#include <stdexcept>

namespace lienil {

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("contains: length mismatch");
  // reduce v against the RREF basis; membership iff remainder is zero
  Vector r = v;
  for (std::size_t k = 0; k < basis_.rows(); ++k) {
    std::size_t piv = 0;
    while (piv < ambient_ && basis_.at(k, piv).is_zero()) ++piv;
    if (piv == ambient_) continue;
    if (!r[piv].is_zero()) r = sub(r, scale(r[piv], basis_.row(k)));
  }
  return is_zero_vector(r);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t k = 0; k < other.dim(); ++k)
    if (!contains(other.basis_vector(k))) return false;
  return true;
}

Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  Matrix m(vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim)
      throw std::invalid_argument("span: vector length mismatch");
    m.set_row(r, vectors[r]);
  }
  RrefResult res = rref(m);
  Subspace s(ambient_dim);
  Matrix basis(res.rank, ambient_dim);
  for (std::size_t r = 0; r < res.rank; ++r) basis.set_row(r, res.reduced.row(r));
  s.basis_ = basis;
  return s;
}

Subspace sum(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim())
    throw std::invalid_argument("sum: ambient dimension mismatch");
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < s.dim(); ++k) rows.push_back(s.basis_vector(k));
  for (std::size_t k = 0; k < t.dim(); ++k) rows.push_back(t.basis_vector(k));
  return span(rows, s.ambient_dim());
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  const std::size_t n = s.ambient_dim();
  const std::size_t ds = s.dim(), dt = t.dim();
  // solve x·S = y·T: kernel of the stacked system [S^T | -T^T]
  Matrix sys(n, ds + dt);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < ds; ++k) sys.at(i, k) = s.basis().at(k, i);
    for (std::size_t k = 0; k < dt; ++k) sys.at(i, ds + k) = -t.basis().at(k, i);
  }
  Matrix ker = kernel_basis(sys);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vector v(n);
    for (std::size_t k = 0; k < ds; ++k)
      if (!ker.at(r, k).is_zero())
        v = add(v, scale(ker.at(r, k), s.basis_vector(k)));
    rows.push_back(v);
  }
  return span(rows, n);
}

}  // namespace lienil
