#include "lienil/lie_algebra.hpp"

#include <sstream>

namespace lienil {

namespace {

std::string jacobi_message(std::size_t i, std::size_t j, std::size_t k,
                           const Vector& residual) {
  std::ostringstream os;
  os << "Jacobi identity fails on basis triple (" << i << "," << j << "," << k
     << "); residual (";
  for (std::size_t t = 0; t < residual.size(); ++t)
    os << (t ? "," : "") << residual[t];
  os << ")";
  return os.str();
}

}  // namespace

JacobiViolation::JacobiViolation(std::size_t i, std::size_t j, std::size_t k,
                                 Vector residual)
    : std::runtime_error(jacobi_message(i, j, k, residual)),
      i(i),
      j(j),
      k(k),
      residual(std::move(residual)) {}

LieAlgebra LieAlgebra::from_brackets(
    std::size_t n, const std::vector<BracketRelation>& brackets,
    std::string label) {
  std::vector<Vector> table(n * (n - 1) / 2, Vector(n));
  LieAlgebra l(n, std::move(table), std::move(label));
  for (const auto& rel : brackets) {
    if (rel.i < 1 || rel.j <= rel.i || rel.j > n)
      throw std::out_of_range("from_brackets: bad bracket indices");
    if (rel.value.size() != n)
      throw std::out_of_range("from_brackets: bracket value length mismatch");
    l.table_[l.pair_index(rel.i - 1, rel.j - 1)] = rel.value;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector res = l.bracket(l.basis_bracket(i, j), unit_vector(n, k));
        res = add(res, l.bracket(l.basis_bracket(j, k), unit_vector(n, i)));
        res = add(res, l.bracket(l.basis_bracket(k, i), unit_vector(n, j)));
        if (!is_zero_vector(res))
          throw JacobiViolation(i + 1, j + 1, k + 1, res);
      }
  return l;
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i == j) return zero_vector(n_);
  if (i < j) return table_[pair_index(i, j)];
  return scale(Scalar(-1), table_[pair_index(j, i)]);
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_)
    throw std::invalid_argument("bracket: vector length mismatch");
  Vector r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      Scalar c = x[i] * y[j] - x[j] * y[i];
      if (!c.is_zero()) r = add(r, scale(c, table_[pair_index(i, j)]));
    }
  return r;
}

bool LieAlgebra::same_structure(const LieAlgebra& o) const {
  return n_ == o.n_ && table_ == o.table_;
}

Subspace derived_subalgebra(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(l.basis_bracket(i, j));
  return span(gens, n);
}

namespace {

// matrix of x -> [x, e_j]: column i holds the coordinates of [e_i, e_j]
Matrix adjoint_against(const LieAlgebra& l, std::size_t j) {
  const std::size_t n = l.dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector w = l.basis_bracket(i, j);
    for (std::size_t k = 0; k < n; ++k) m.at(k, i) = w[k];
  }
  return m;
}

// linear operator reducing a vector modulo the RREF basis of s; the
// image is supported on the complement of the pivot columns
Matrix mod_operator(const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  Matrix r = Matrix::identity(n);
  const Matrix& b = s.basis();
  RrefResult rr = rref(b);  // b already RREF; reuse pivot bookkeeping
  for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) {
    std::size_t p = rr.pivot_cols[k];
    for (std::size_t row = 0; row < n; ++row) r.at(row, p) -= b.at(k, row);
  }
  return r;
}

// kernel of the stacked maps x -> reduce([x, e_j]) for all j
Subspace centralizer_mod(const LieAlgebra& l, const Subspace& mod) {
  const std::size_t n = l.dim();
  Matrix red = mod_operator(mod);
  Matrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix m = red * adjoint_against(l, j);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked.at(j * n + r, c) = m.at(r, c);
  }
  Matrix ker = kernel_basis(stacked);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < ker.rows(); ++r) rows.push_back(ker.row(r));
  return span(rows, n);
}

}  // namespace

Subspace center(const LieAlgebra& l) {
  return centralizer_mod(l, Subspace(l.dim()));
}

Subspace centralizer(const LieAlgebra& l, const Subspace& s) {
  const std::size_t n = l.dim();
  if (s.ambient_dim() != n)
    throw std::invalid_argument("centralizer: ambient dimension mismatch");
  if (s.dim() == 0) return Subspace::full(n);
  Matrix stacked(n * s.dim(), n);
  for (std::size_t k = 0; k < s.dim(); ++k) {
    Vector gen = s.basis_vector(k);
    for (std::size_t c = 0; c < n; ++c) {
      Vector br = l.bracket(unit_vector(n, c), gen);
      for (std::size_t r = 0; r < n; ++r) stacked.at(k * n + r, c) = br[r];
    }
  }
  Matrix ker = kernel_basis(stacked);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < ker.rows(); ++r) rows.push_back(ker.row(r));
  return span(rows, n);
}

std::vector<Subspace> lower_central_series(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Subspace> series{Subspace::full(n)};
  while (true) {
    const Subspace& g = series.back();
    std::vector<Vector> gens;
    for (std::size_t k = 0; k < g.dim(); ++k)
      for (std::size_t j = 0; j < n; ++j)
        gens.push_back(l.bracket(g.basis_vector(k), unit_vector(n, j)));
    Subspace next = span(gens, n);
    if (next == series.back()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

std::vector<Subspace> upper_central_series(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Subspace> series{Subspace(n)};
  while (true) {
    Subspace next = centralizer_mod(l, series.back());
    if (next == series.back()) break;
    series.push_back(next);
    if (next.dim() == n) break;
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(const LieAlgebra& l) {
  std::vector<Subspace> ucs = upper_central_series(l);
  if (ucs.back().dim() != l.dim()) return std::nullopt;
  return ucs.size() - 1;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim(), n = na + b.dim();
  std::vector<BracketRelation> rels;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j) {
      Vector w = a.basis_bracket(i, j);
      Vector v(n);
      for (std::size_t k = 0; k < na; ++k) v[k] = w[k];
      if (!is_zero_vector(v)) rels.push_back({i + 1, j + 1, v});
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      Vector w = b.basis_bracket(i, j);
      Vector v(n);
      for (std::size_t k = 0; k < b.dim(); ++k) v[na + k] = w[k];
      if (!is_zero_vector(v)) rels.push_back({na + i + 1, na + j + 1, v});
    }
  std::string label;
  if (!a.label().empty() && !b.label().empty())
    label = a.label() + "+" + b.label();
  return LieAlgebra::from_brackets(n, rels, label);
}

bool is_ideal(const LieAlgebra& l, const Subspace& s) {
  for (std::size_t k = 0; k < s.dim(); ++k)
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (!s.contains(l.bracket(s.basis_vector(k), unit_vector(l.dim(), j))))
        return false;
  return true;
}

LieAlgebra quotient(const LieAlgebra& l, const Subspace& ideal) {
  if (ideal.ambient_dim() != l.dim())
    throw std::invalid_argument("quotient: ambient dimension mismatch");
  if (!is_ideal(l, ideal)) throw NotAnIdeal();
  const std::size_t n = l.dim();
  RrefResult rr = rref(ideal.basis());
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : rr.pivot_cols) is_pivot[p] = true;
  std::vector<std::size_t> comp;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) comp.push_back(c);

  Matrix red = mod_operator(ideal);
  const std::size_t q = comp.size();
  std::vector<BracketRelation> rels;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      Vector w = red.apply(l.basis_bracket(comp[a], comp[b]));
      Vector v(q);
      for (std::size_t k = 0; k < q; ++k) v[k] = w[comp[k]];
      if (!is_zero_vector(v)) rels.push_back({a + 1, b + 1, v});
    }
  return LieAlgebra::from_brackets(q, rels);
}

LieAlgebra change_of_basis(const LieAlgebra& l, const Matrix& p) {
  const std::size_t n = l.dim();
  if (p.rows() != n || p.cols() != n)
    throw std::invalid_argument("change_of_basis: matrix shape mismatch");
  Matrix pinv = inverse(p);  // throws on singular input
  std::vector<BracketRelation> rels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector w = l.bracket(p.row(a), p.row(b));
      // coordinates in the new basis: x with x*P = w
      Vector v(n);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) v[k] += w[j] * pinv.at(j, k);
      if (!is_zero_vector(v)) rels.push_back({a + 1, b + 1, v});
    }
  return LieAlgebra::from_brackets(n, rels, l.label());
}

SemidirectReport is_semidirect(const LieAlgebra& l, const Subspace& a,
                               const Subspace& b) {
  SemidirectReport rep;
  rep.is_ideal_a = is_ideal(l, a);
  rep.spans = sum(a, b).dim() == l.dim();
  rep.trivial_intersection = intersect(a, b).dim() == 0;
  rep.is_central_a = center(l).contains(a);
  return rep;
}

}  // namespace lienil
