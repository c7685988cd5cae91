#include "lienil/weyl.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lienil/catalog.hpp"

namespace lienil {

WeylElement WeylElement::identity(std::size_t modes) {
  WeylElement e(modes);
  e.add_term(WeylMonomial{std::vector<unsigned>(modes), std::vector<unsigned>(modes)},
             Scalar(1));
  return e;
}

WeylElement WeylElement::a(std::size_t modes, std::size_t k) {
  if (k < 1 || k > modes) throw std::out_of_range("WeylElement::a: bad mode index");
  WeylElement e(modes);
  WeylMonomial m{std::vector<unsigned>(modes), std::vector<unsigned>(modes)};
  m.a_exp[k - 1] = 1;
  e.add_term(m, Scalar(1));
  return e;
}

WeylElement WeylElement::b(std::size_t modes, std::size_t k) {
  if (k < 1 || k > modes) throw std::out_of_range("WeylElement::b: bad mode index");
  WeylElement e(modes);
  WeylMonomial m{std::vector<unsigned>(modes), std::vector<unsigned>(modes)};
  m.b_exp[k - 1] = 1;
  e.add_term(m, Scalar(1));
  return e;
}

void WeylElement::add_term(const WeylMonomial& mono, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int WeylElement::degree() const {
  int deg = -1;
  for (const auto& [mono, c] : terms_) {
    int d = std::accumulate(mono.b_exp.begin(), mono.b_exp.end(), 0) +
            std::accumulate(mono.a_exp.begin(), mono.a_exp.end(), 0);
    deg = std::max(deg, d);
  }
  return deg;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (modes_ != o.modes_) throw std::invalid_argument("Weyl sum: mode mismatch");
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  if (modes_ != o.modes_) throw std::invalid_argument("Weyl sum: mode mismatch");
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

WeylElement WeylElement::scaled(const Scalar& c) const {
  WeylElement r(modes_);
  for (const auto& [mono, coeff] : terms_) r.add_term(mono, c * coeff);
  return r;
}

WeylElement WeylElement::pow(unsigned e) const {
  WeylElement r = identity(modes_);
  for (unsigned t = 0; t < e; ++t) r = multiply(r, *this);
  return r;
}

namespace {

// k! C(q,k) C(r,k) as an exact integer
mpz_class contraction_coeff(unsigned q, unsigned r, unsigned k) {
  mpz_class c = 1;
  for (unsigned t = 0; t < k; ++t) c *= (t + 1);
  mpz_class bq = 1, br = 1;
  for (unsigned t = 0; t < k; ++t) {
    bq = bq * (q - t) / (t + 1);
    br = br * (r - t) / (t + 1);
  }
  return c * bq * br;
}

}  // namespace

WeylElement multiply(const WeylElement& x, const WeylElement& y) {
  if (x.modes() != y.modes())
    throw std::invalid_argument("Weyl product: mode mismatch");
  const std::size_t m = x.modes();
  WeylElement out(m);
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      // contract a^{q_i} of x against b^{r_i} of y mode by mode
      std::vector<unsigned> kmax(m);
      for (std::size_t i = 0; i < m; ++i)
        kmax[i] = std::min(mx.a_exp[i], my.b_exp[i]);
      std::vector<unsigned> k(m, 0);
      while (true) {
        mpz_class coeff = 1;
        for (std::size_t i = 0; i < m; ++i)
          coeff *= contraction_coeff(mx.a_exp[i], my.b_exp[i], k[i]);
        WeylMonomial mono{std::vector<unsigned>(m), std::vector<unsigned>(m)};
        for (std::size_t i = 0; i < m; ++i) {
          mono.b_exp[i] = mx.b_exp[i] + my.b_exp[i] - k[i];
          mono.a_exp[i] = mx.a_exp[i] - k[i] + my.a_exp[i];
        }
        out.add_term(mono, cx * cy * Scalar(mpq_class(coeff)));
        std::size_t pos = 0;
        while (pos < m && k[pos] == kmax[pos]) k[pos++] = 0;
        if (pos == m) break;
        ++k[pos];
      }
    }
  }
  return out;
}

WeylElement commutator(const WeylElement& x, const WeylElement& y) {
  return multiply(x, y) - multiply(y, x);
}

WeylElement adjoint(const WeylElement& x) {
  WeylElement r(x.modes());
  for (const auto& [mono, c] : x.terms())
    r.add_term(WeylMonomial{mono.a_exp, mono.b_exp}, c.conj());
  return r;
}

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (std::size_t i = 0; i < modes_; ++i)
      if (mono.b_exp[i]) {
        os << "*b" << i + 1;
        if (mono.b_exp[i] > 1) os << "^" << mono.b_exp[i];
      }
    for (std::size_t i = 0; i < modes_; ++i)
      if (mono.a_exp[i]) {
        os << "*a" << i + 1;
        if (mono.a_exp[i] > 1) os << "^" << mono.a_exp[i];
      }
  }
  return os.str();
}

RealizationReport verify_realization(const LieAlgebra& l,
                                     const std::vector<WeylElement>& assignment) {
  const std::size_t n = l.dim();
  if (assignment.size() != n)
    throw std::invalid_argument("verify_realization: assignment length mismatch");
  const std::size_t m = assignment.empty() ? 1 : assignment[0].modes();
  for (const auto& x : assignment)
    if (x.modes() != m)
      throw std::invalid_argument("verify_realization: non-uniform mode count");

  RealizationReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      WeylElement expected(m);
      Vector c = l.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!c[k].is_zero()) expected += assignment[k].scaled(c[k]);
      WeylElement diff = commutator(assignment[i], assignment[j]) - expected;
      if (!diff.is_zero()) rep.mismatches.push_back({i + 1, j + 1, diff});
    }
  rep.is_homomorphism = rep.mismatches.empty();

  // faithfulness: rank of the coefficient matrix over all monomials
  std::map<WeylMonomial, std::size_t> cols;
  for (const auto& x : assignment)
    for (const auto& [mono, c] : x.terms())
      cols.try_emplace(mono, cols.size());
  Matrix coeffs(n, cols.size());
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [mono, c] : assignment[r].terms())
      coeffs.at(r, cols.at(mono)) = c;
  rep.is_faithful = rank(coeffs) == n;
  return rep;
}

Realization shifted_heisenberg(std::size_t m, const std::vector<Scalar>& alpha,
                               const std::vector<Scalar>& beta) {
  if (alpha.size() != m || beta.size() != m)
    throw std::invalid_argument("shifted_heisenberg: need m shifts per side");
  for (std::size_t j = 0; j < m; ++j)
    if (alpha[j] == beta[j].conj())
      throw std::domain_error(
          "shifted_heisenberg: alpha_j = conj(beta_j) is the bosonic case");
  std::vector<WeylElement> ops;
  WeylElement id = WeylElement::identity(m);
  for (std::size_t j = 1; j <= m; ++j) {
    ops.push_back(WeylElement::a(m, j) + id.scaled(alpha[j - 1]));
    ops.push_back(WeylElement::b(m, j) + id.scaled(beta[j - 1]));
  }
  ops.push_back(id);
  return {catalog::heisenberg(m), std::move(ops), "pseudo-bosonic"};
}

Realization heisenberg_abelian_realization(std::size_t m, std::size_t k) {
  LieAlgebra l = catalog::heisenberg_plus_abelian(m, k);
  const std::size_t modes = std::max<std::size_t>(m, 1);
  WeylElement id = WeylElement::identity(modes);
  std::vector<WeylElement> ops;
  for (std::size_t j = 1; j <= m; ++j) {
    ops.push_back(WeylElement::a(modes, j));
    ops.push_back(WeylElement::b(modes, j));
  }
  while (ops.size() < l.dim()) ops.push_back(id);
  return {std::move(l), std::move(ops), "bosonic"};
}

namespace {

Realization ladder_realization_l43(const std::string& flavor) {
  // v1 = a, v2 = b^2/2, v3 = b, v4 = I
  std::vector<WeylElement> ops{
      WeylElement::a(1, 1),
      WeylElement::b(1, 1).pow(2).scaled(Scalar(1, 2)),
      WeylElement::b(1, 1),
      WeylElement::identity(1),
  };
  return {catalog::get("L4_3").algebra, std::move(ops), flavor};
}

Realization ladder_realization_l58(const std::string& flavor) {
  // v1 = a1, v2 = b1, v3 = b1 a2, v4 = I, v5 = a2
  std::vector<WeylElement> ops{
      WeylElement::a(2, 1),
      WeylElement::b(2, 1),
      WeylElement::b(2, 1) * WeylElement::a(2, 2),
      WeylElement::identity(2),
      WeylElement::a(2, 2),
  };
  return {catalog::get("L5_8").algebra, std::move(ops), flavor};
}

Realization ladder_realization_l55(const std::string& flavor) {
  // v1 = a1, v2 = a2 + b1^2/2, v3 = b1, v4 = b2, v5 = I
  std::vector<WeylElement> ops{
      WeylElement::a(2, 1),
      WeylElement::a(2, 2) + WeylElement::b(2, 1).pow(2).scaled(Scalar(1, 2)),
      WeylElement::b(2, 1),
      WeylElement::b(2, 2),
      WeylElement::identity(2),
  };
  return {catalog::get("L5_5").algebra, std::move(ops), flavor};
}

}  // namespace

Realization paper_realization(const std::string& name) {
  if (name == "L4_3-bosonic") return ladder_realization_l43("bosonic");
  if (name == "L4_3-pseudo") return ladder_realization_l43("pseudo-bosonic");
  if (name == "L5_8-bosonic") return ladder_realization_l58("bosonic");
  if (name == "L5_8-pseudo") return ladder_realization_l58("pseudo-bosonic");
  if (name == "L5_5-bosonic") return ladder_realization_l55("bosonic");
  if (name == "L5_5-pseudo") return ladder_realization_l55("pseudo-bosonic");
  // sample shifts alpha_j = i, beta_j = 1 (i != conj(1))
  if (name.rfind("H(", 0) == 0 && name.size() > 4 && name.substr(name.find(')')) == ")-shifted") {
    std::size_t m = std::stoul(name.substr(2, name.find(')') - 2));
    return shifted_heisenberg(m, std::vector<Scalar>(m, Scalar::i()),
                              std::vector<Scalar>(m, Scalar(1)));
  }
  auto plus = name.find(")+A(");
  if (name.rfind("H(", 0) == 0 && plus != std::string::npos && name.back() == ')') {
    std::size_t m = std::stoul(name.substr(2, plus - 2));
    std::size_t k = std::stoul(name.substr(plus + 4, name.size() - plus - 5));
    return heisenberg_abelian_realization(m, k);
  }
  throw std::invalid_argument("paper_realization: unknown name " + name);
}

WeylElement hamiltonian_h0(const Scalar& omega, const Scalar& g) {
  if (!omega.is_real()) throw std::domain_error("hamiltonian_h0: omega must be real");
  WeylElement a = WeylElement::a(1, 1), b = WeylElement::b(1, 1);
  return (b * a).scaled(omega) +
         (b.pow(2).scaled(g) - a.pow(2).scaled(g.conj())).scaled(Scalar::i());
}

WeylElement hamiltonian_l58(const Scalar& lambda) {
  if (!lambda.is_real()) throw std::domain_error("hamiltonian_l58: lambda must be real");
  Realization r = ladder_realization_l58("bosonic");
  return (r.ops[2] + r.ops[1] * r.ops[4]).scaled(lambda);
}

WeylElement hamiltonian_l55(const Scalar& omega, const Scalar& lambda) {
  if (!omega.is_real() || !lambda.is_real())
    throw std::domain_error("hamiltonian_l55: omega and lambda must be real");
  Realization r = ladder_realization_l55("bosonic");
  return (r.ops[2] * r.ops[0]).scaled(omega) + (r.ops[3] * r.ops[1]).scaled(lambda);
}

}  // namespace lienil
