// End-to-end acceptance gate. Each criterion prints exactly one
// PASS/FAIL line; known table discrepancies are reported as flagged
// notes underneath, never silently absorbed.

#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "lienil/catalog.hpp"
#include "lienil/cohomology.hpp"
#include "lienil/fock.hpp"
#include "lienil/lie_algebra.hpp"
#include "lienil/weyl.hpp"

using namespace lienil;
using catalog::abelian;
using catalog::heisenberg;
using catalog::heisenberg_plus_abelian;

namespace {

int failures = 0;

struct Criterion {
  int number;
  std::string title;
  bool ok = true;
  std::vector<std::string> notes;

  Criterion(int number, std::string title)
      : number(number), title(std::move(title)) {}

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void flag(const std::string& what) { notes.push_back("flagged: " + what); }

  ~Criterion() {
    std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL")
              << "  " << title << "\n";
    for (const auto& n : notes) std::cout << "    " << n << "\n";
    if (!ok) ++failures;
  }
};

Matrix random_invertible(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<long> entry(-2, 2);
  while (true) {
    Matrix p(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) p.at(r, c) = Scalar(entry(rng));
    try {
      inverse(p);
      return p;
    } catch (const std::domain_error&) {
    }
  }
}

LieAlgebra plus_lines(const LieAlgebra& l, std::size_t k) {
  LieAlgebra r = l;
  for (std::size_t t = 0; t < k; ++t) r = direct_sum(r, abelian(1));
  return r;
}

WeylElement bracket_image(const LieAlgebra& l,
                          const std::vector<WeylElement>& ops, std::size_t i,
                          std::size_t j) {
  WeylElement e(ops[0].modes());
  Vector c = l.basis_bracket(i, j);
  for (std::size_t k = 0; k < ops.size(); ++k)
    if (!c[k].is_zero()) e += ops[k].scaled(c[k]);
  return e;
}

void criterion_1() {
  Criterion c(1, "multiplier formulas for the Heisenberg and abelian families");
  c.require(schur_multiplier_dim(heisenberg(1)) == 2, "dim M(h(1)) = 2");
  for (std::size_t m = 2; m <= 6; ++m) {
    std::size_t want = 2 * m * m - m - 1;
    std::ostringstream what;
    what << "dim M(h(" << m << ")) = " << want;
    c.require(schur_multiplier_dim(heisenberg(m)) == want, what.str());
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    std::ostringstream what;
    what << "abelian(" << n << "): dim M = n(n-1)/2 with corank 0";
    CohomologyReport rep = cohomology_report(abelian(n));
    c.require(rep.multiplier_dim == n * (n - 1) / 2 && rep.corank == 0, what.str());
  }
}

void criterion_2() {
  Criterion c(2, "corank table with the published discrepancy flagged");
  auto expect = [&](const LieAlgebra& l, long t, const std::string& label) {
    c.require(corank(l) == t, label + " has engine corank " + std::to_string(t));
  };
  expect(abelian(4), 0, "abelian(4)");
  expect(catalog::get("L3_2").algebra, 1, "L3_2");
  expect(catalog::get("L4_2").algebra, 2, "L4_2");
  expect(catalog::get("L5_2").algebra, 3, "L5_2");
  expect(catalog::get("L6_2").algebra, 4, "L6_2 = L5_2+A(1)");
  expect(catalog::get("L4_3").algebra, 4, "L4_3");
  expect(catalog::get("L5_8").algebra, 4, "L5_8");
  expect(catalog::get("L7_2").algebra, 5, "L7_2");
  expect(catalog::get("L5_4").algebra, 5, "L5_4 = h(2)");
  expect(catalog::get("L5_5").algebra, 6, "L5_5");
  expect(heisenberg_plus_abelian(2, 1), 6, "h(2)+A(1)");
  expect(direct_sum(catalog::get("L5_8").algebra, abelian(1)), 6, "L5_8+A(1)");
  expect(catalog::get("L8_2").algebra, 6, "L8_2");

  // the published t=6 row listing L4_2+A(1) must fail against the
  // engine (which computes 3) and be reported as a flag, not a pass
  bool found = false;
  for (const auto& [t, rows] : catalog::corank_table())
    for (const auto& row : rows)
      if (row.flagged) {
        found = true;
        c.require(t == 6 && row.expected == 6 && row.computed == 3,
                  "the flagged row is L4_2+A(1) with table 6 vs engine 3");
        c.flag(row.name + ": table says t=" + std::to_string(row.expected) +
               ", engine computes t=" + std::to_string(row.computed));
      }
  c.require(found, "the corank table carries exactly the known flagged row");
}

void criterion_3() {
  Criterion c(3, "corank growth law for h(m) plus abelian lines");
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t k = 0; k <= 3; ++k) {
      long want = static_cast<long>(2 * m + k + 1);
      std::ostringstream what;
      what << "corank(h(" << m << ")+A(" << k << ")) = " << want;
      c.require(corank(heisenberg_plus_abelian(m, k)) == want, what.str());
    }
  for (std::size_t k = 0; k <= 4; ++k) {
    long want = static_cast<long>(k + 1);
    std::ostringstream what;
    what << "corank(h(1)+A(" << k << ")) = " << want;
    c.require(corank(heisenberg_plus_abelian(1, k)) == want, what.str());
  }
  c.flag("for m = 1 the published closed form 2m+k+1 does not hold; the "
         "engine value k+1 is recorded instead");
}

void criterion_4() {
  Criterion c(4, "catalog soundness, distinct fingerprints, identification");
  const auto& entries = catalog::list();
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      c.require(
          fingerprint(entries[i].algebra) != fingerprint(entries[j].algebra),
          "fingerprints of " + entries[i].name + " and " + entries[j].name +
              " differ");
  std::mt19937 rng(97);
  for (const auto& e : entries) {
    c.require(catalog::identify(e.algebra) == e.name,
              "identify round-trips " + e.name);
    for (int trial = 0; trial < 20; ++trial) {
      Matrix p = random_invertible(e.algebra.dim(), rng);
      if (catalog::identify(change_of_basis(e.algebra, p)) != e.name) {
        c.require(false, "identify survives basis scrambles of " + e.name);
        break;
      }
    }
  }
  // golden multiplier values, re-derived by hand rank computation of
  // d2 (rank 4 for both): the two algebras share dim M = 3, so the
  // published expectation of distinct multipliers cannot hold; the
  // identification fingerprint separates them by the centralizer of
  // the derived subalgebra instead
  std::size_t m56 = schur_multiplier_dim(catalog::get("L5_6").algebra);
  std::size_t m57 = schur_multiplier_dim(catalog::get("L5_7").algebra);
  c.require(m56 == 3 && m57 == 3, "golden multiplier values for L5_6 and L5_7");
  c.flag("dim M(L5_6) = dim M(L5_7) = 3 (expected to differ; equality "
         "confirmed by independent recomputation of rank d2); the pair is "
         "separated by centralizer([l,l]) dims 3 vs 4");
}

void criterion_5() {
  Criterion c(5, "central extension searches and quotient round trips");
  struct Target {
    LieAlgebra base;
    std::string target;
  };
  std::vector<Target> targets{
      {heisenberg(1), "L4_3"},
      {heisenberg_plus_abelian(1, 1), "L5_5"},
      {heisenberg_plus_abelian(1, 1), "L5_8"},
      {catalog::get("L4_3").algebra, "L5_6"},
      {catalog::get("L4_3").algebra, "L5_7"},
      {catalog::get("L4_3").algebra, "L5_9"},
      {abelian(4), "L5_4"},
  };
  for (const auto& t : targets) {
    Fingerprint want = fingerprint(catalog::get(t.target).algebra);
    auto theta = find_extension_to(t.base, want, 2);
    if (!theta) {
      c.require(false, "search reaches " + t.target);
      continue;
    }
    LieAlgebra ext = central_extension(t.base, *theta);
    c.require(fingerprint(ext) == want, "extension realizes " + t.target);
    std::size_t n = ext.dim();
    LieAlgebra back = quotient(ext, span({unit_vector(n, n - 1)}, n));
    c.require(fingerprint(back) == fingerprint(t.base),
              "quotient by the new center recovers the base of " + t.target);
  }
}

const std::vector<std::string>& realization_names() {
  static const std::vector<std::string> names{
      "L4_3-bosonic", "L4_3-pseudo",  "L5_8-bosonic", "L5_8-pseudo",
      "L5_5-bosonic", "L5_5-pseudo",  "H(1)-shifted", "H(2)-shifted",
      "H(3)-shifted", "H(1)+A(0)",    "H(2)+A(0)",    "H(1)+A(2)",
      "H(2)+A(3)"};
  return names;
}

void criterion_6() {
  Criterion c(6, "operator realizations verify as Lie homomorphisms");
  for (const auto& name : realization_names()) {
    Realization r = paper_realization(name);
    RealizationReport rep = verify_realization(r.algebra, r.ops);
    c.require(rep.is_homomorphism, name + " is a homomorphism");
    if (name.find("+A(") != std::string::npos) {
      bool k_zero = name.find("+A(0)") != std::string::npos;
      c.require(rep.is_faithful == k_zero,
                name + " faithful exactly when no abelian lines collapse");
    } else {
      c.require(rep.is_faithful, name + " is faithful");
    }
  }
}

void criterion_7() {
  Criterion c(7, "truncated matrix oracle agrees with the symbolic engine");
  for (const auto& name : realization_names()) {
    Realization real = paper_realization(name);
    std::size_t modes = real.ops[0].modes();
    if (modes > 2) continue;
    for (std::size_t n : {std::size_t{6}, std::size_t{10}}) {
      FockRep rep(modes, n);
      bool all = true;
      for (std::size_t i = 0; i < real.ops.size() && all; ++i)
        for (std::size_t j = i + 1; j < real.ops.size() && all; ++j) {
          SafeCheckReport r = safe_commutator_check(
              rep, real.ops[i], real.ops[j],
              bracket_image(real.algebra, real.ops, i, j));
          all = r.checked && r.agrees;
        }
      c.require(all, name + " matches the oracle at N=" + std::to_string(n));
    }
  }
}

void criterion_8() {
  Criterion c(8, "adjoint verdicts for the model Hamiltonians");
  for (auto [omega, g] : std::vector<std::pair<Scalar, Scalar>>{
           {Scalar(1), Scalar::i()}, {Scalar(2), Scalar(1) - Scalar::i()}}) {
    WeylElement h = hamiltonian_h0(omega, g);
    c.require(adjoint(h) == h, "squeezing Hamiltonian self-adjoint for real omega");
  }
  WeylElement h58 = hamiltonian_l58(Scalar(1));
  c.require(adjoint(h58) != h58, "two-mode interaction Hamiltonian (L5_8 form) "
                                 "is not self-adjoint");
  WeylElement h55 = hamiltonian_l55(Scalar(1), Scalar(1));
  c.require(adjoint(h55) != h55, "two-mode interaction Hamiltonian (L5_5 form) "
                                 "is not self-adjoint");
}

WeylElement random_weyl(std::size_t modes, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<unsigned> exp(0, 2);
  std::uniform_int_distribution<long> coeff(-2, 2);
  WeylElement e(modes);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    WeylMonomial m{std::vector<unsigned>(modes), std::vector<unsigned>(modes)};
    for (std::size_t k = 0; k < modes; ++k) {
      m.b_exp[k] = exp(rng);
      m.a_exp[k] = exp(rng);
    }
    Scalar s(coeff(rng), 1);
    if (coeff(rng) > 0) s += Scalar::i();
    e.add_term(m, s);
  }
  return e;
}

void criterion_9() {
  Criterion c(9, "property suites: negative tests and algebraic identities");

  bool rejected = false;
  try {
    LieAlgebra::from_brackets(3, {{1, 2, unit_vector(3, 2)},
                                  {1, 3, unit_vector(3, 0)}});
  } catch (const JacobiViolation&) {
    rejected = true;
  }
  c.require(rejected, "Jacobi violations are rejected at construction");

  for (const auto& e : catalog::list()) {
    std::size_t n = e.algebra.dim();
    bool dd_zero = true;
    for (std::size_t p = 0; p + 1 <= n && dd_zero; ++p)
      dd_zero = (ce_differential(e.algebra, p + 1).matrix *
                 ce_differential(e.algebra, p).matrix)
                    .is_zero();
    c.require(dd_zero, "d compose d vanishes on " + e.name);

    std::size_t ab = n - derived_subalgebra(e.algebra).dim();
    c.require(schur_multiplier_dim(direct_sum(e.algebra, abelian(1))) ==
                  schur_multiplier_dim(e.algebra) + ab,
              "Kuenneth cross-check on " + e.name);
  }

  std::mt19937 rng(131);
  bool assoc = true, jacobi = true;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t modes = 1 + trial % 2;
    WeylElement x = random_weyl(modes, rng);
    WeylElement y = random_weyl(modes, rng);
    WeylElement z = random_weyl(modes, rng);
    if ((x * y) * z != x * (y * z)) assoc = false;
    WeylElement j = commutator(commutator(x, y), z) +
                    commutator(commutator(y, z), x) +
                    commutator(commutator(z, x), y);
    if (!j.is_zero()) jacobi = false;
  }
  c.require(assoc, "Weyl multiplication associative on random triples");
  c.require(jacobi, "Weyl commutator satisfies the Jacobi identity");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures == 0)
    std::cout << "all acceptance criteria passed\n";
  else
    std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
