#include "lienil/cohomology.hpp"

#include <algorithm>
#include <map>

namespace lienil {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
  return r;
}

namespace {

// all k-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t t = 0; t < k; ++t) cur[t] = t;
  while (true) {
    out.push_back(cur);
    // rightmost position that can still advance
    std::size_t pos = k;
    while (pos > 0 && cur[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return out;
    ++cur[pos - 1];
    for (std::size_t t = pos; t < k; ++t) cur[t] = cur[t - 1] + 1;
  }
}

// sign of the permutation sorting args into a strictly increasing
// sequence; 0 if any index repeats
int sort_sign(std::vector<std::size_t>& args) {
  int sign = 1;
  for (std::size_t i = 0; i < args.size(); ++i)
    for (std::size_t j = i + 1; j < args.size(); ++j) {
      if (args[i] == args[j]) return 0;
      if (args[i] > args[j]) {
        std::swap(args[i], args[j]);
        sign = -sign;
      }
    }
  return sign;
}

}  // namespace

CochainMatrix ce_differential(const LieAlgebra& l, std::size_t p) {
  const std::size_t n = l.dim();
  if (p > n) throw std::out_of_range("ce_differential: degree out of range");
  auto cols = subsets(n, p);
  auto rows = subsets(n, p + 1);
  std::map<std::vector<std::size_t>, std::size_t> col_index;
  for (std::size_t c = 0; c < cols.size(); ++c) col_index[cols[c]] = c;

  CochainMatrix d{p, Matrix(rows.size(), cols.size())};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& tuple = rows[r];
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
      for (std::size_t j = i + 1; j < tuple.size(); ++j) {
        Vector w = l.basis_bracket(tuple[i], tuple[j]);
        int pair_sign = ((i + j) % 2 == 0) ? 1 : -1;
        std::vector<std::size_t> rest;
        for (std::size_t t = 0; t < tuple.size(); ++t)
          if (t != i && t != j) rest.push_back(tuple[t]);
        for (std::size_t k = 0; k < n; ++k) {
          if (w[k].is_zero()) continue;
          std::vector<std::size_t> args{k};
          args.insert(args.end(), rest.begin(), rest.end());
          int s = sort_sign(args);
          if (s == 0) continue;
          Scalar contrib = w[k] * Scalar(pair_sign * s);
          d.matrix.at(r, col_index.at(args)) += contrib;
        }
      }
  }
  return d;
}

CohomologyReport cohomology_report(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  CohomologyReport rep;
  rep.n = n;
  rep.rank_d1 = n >= 1 ? rank(ce_differential(l, 1).matrix) : 0;
  rep.rank_d2 = n >= 2 ? rank(ce_differential(l, 2).matrix) : 0;
  std::size_t c2 = binomial(n, 2);
  rep.multiplier_dim = c2 - rep.rank_d2 - rep.rank_d1;
  rep.corank = static_cast<long>(c2) - static_cast<long>(rep.multiplier_dim);
  return rep;
}

std::size_t schur_multiplier_dim(const LieAlgebra& l) {
  return cohomology_report(l).multiplier_dim;
}

long corank(const LieAlgebra& l) { return cohomology_report(l).corank; }

Scalar TwoCocycle::eval(const Vector& x, const Vector& y) const {
  Scalar r;
  const std::size_t n = theta.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (theta.at(i, j).is_zero()) continue;
      r += x[i] * y[j] * theta.at(i, j);
    }
  return r;
}

std::vector<TwoCocycle> cocycle_space(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  Matrix ker = n >= 2 ? kernel_basis(ce_differential(l, 2).matrix)
                      : Matrix(0, 0);
  auto pairs = subsets(n, 2);
  std::vector<TwoCocycle> basis;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Matrix theta(n, n);
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      theta.at(pairs[c][0], pairs[c][1]) = ker.at(r, c);
      theta.at(pairs[c][1], pairs[c][0]) = -ker.at(r, c);
    }
    basis.push_back(TwoCocycle{theta});
  }
  return basis;
}

bool is_cocycle(const LieAlgebra& l, const TwoCocycle& theta) {
  const std::size_t n = l.dim();
  if (theta.theta.rows() != n || theta.theta.cols() != n)
    throw std::invalid_argument("is_cocycle: theta shape mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (theta.theta.at(i, j) != -theta.theta.at(j, i))
        throw NotAntisymmetric();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Scalar s = theta.eval(l.basis_bracket(i, j), unit_vector(n, k));
        s += theta.eval(l.basis_bracket(j, k), unit_vector(n, i));
        s += theta.eval(l.basis_bracket(k, i), unit_vector(n, j));
        if (!s.is_zero()) return false;
      }
  return true;
}

LieAlgebra central_extension(const LieAlgebra& l, const TwoCocycle& theta) {
  if (!is_cocycle(l, theta)) throw NotACocycle();
  const std::size_t n = l.dim();
  std::vector<BracketRelation> rels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector w = l.basis_bracket(i, j);
      Vector v(n + 1);
      for (std::size_t k = 0; k < n; ++k) v[k] = w[k];
      v[n] = theta.theta.at(i, j);
      if (!is_zero_vector(v)) rels.push_back({i + 1, j + 1, v});
    }
  return LieAlgebra::from_brackets(n + 1, rels);
}

namespace {

// candidate coefficient values ordered by magnitude: 0, 1, -1, 2, -2, ...
std::vector<long> coeff_values(int bound) {
  std::vector<long> v{0};
  for (int b = 1; b <= bound; ++b) {
    v.push_back(b);
    v.push_back(-b);
  }
  return v;
}

}  // namespace

std::optional<TwoCocycle> find_extension_to(const LieAlgebra& l,
                                            const Fingerprint& target,
                                            int coeff_bound) {
  if (coeff_bound < 1)
    throw std::invalid_argument("find_extension_to: coeff_bound must be >= 1");
  const std::size_t n = l.dim();
  if (target.dim != n + 1) return std::nullopt;

  std::vector<TwoCocycle> basis = cocycle_space(l);
  const std::size_t d = basis.size();
  std::vector<long> values = coeff_values(coeff_bound);
  std::vector<std::size_t> odo(d, 0);
  while (true) {
    Matrix theta(n, n);
    for (std::size_t k = 0; k < d; ++k)
      if (values[odo[k]] != 0)
        theta = theta + basis[k].theta.scaled(Scalar(values[odo[k]]));
    TwoCocycle cand{theta};
    LieAlgebra ext = central_extension(l, cand);
    // cheap series invariants first, multiplier rank last
    std::vector<Subspace> lcs = lower_central_series(ext);
    std::vector<std::size_t> lcs_dims;
    for (const auto& s : lcs) lcs_dims.push_back(s.dim());
    if (lcs_dims == target.lcs_dims) {
      Fingerprint fp = fingerprint(ext);
      if (fp == target) return cand;
    }
    // advance odometer
    std::size_t pos = 0;
    while (pos < d && ++odo[pos] == values.size()) odo[pos++] = 0;
    if (pos == d) break;
  }
  return std::nullopt;
}

Fingerprint fingerprint(const LieAlgebra& l) {
  Fingerprint fp;
  fp.dim = l.dim();
  for (const auto& s : lower_central_series(l)) fp.lcs_dims.push_back(s.dim());
  for (const auto& s : upper_central_series(l)) fp.ucs_dims.push_back(s.dim());
  fp.nil_class = nilpotency_class(l);
  CohomologyReport rep = cohomology_report(l);
  fp.multiplier_dim = rep.multiplier_dim;
  fp.corank = rep.corank;
  fp.derived_centralizer_dim = centralizer(l, derived_subalgebra(l)).dim();
  return fp;
}

}  // namespace lienil
