#include <doctest.h>

#include <random>

#include "lienil/catalog.hpp"
#include "lienil/fingerprint.hpp"
#include "lienil/lie_algebra.hpp"

using namespace lienil;
using catalog::abelian;
using catalog::heisenberg;

namespace {

LieAlgebra by_relations(
    std::size_t n,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& rels) {
  std::vector<BracketRelation> brackets;
  for (auto [i, j, k] : rels) brackets.push_back({i, j, unit_vector(n, k - 1)});
  return LieAlgebra::from_brackets(n, brackets);
}

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

std::vector<std::size_t> dims(const std::vector<Subspace>& series) {
  std::vector<std::size_t> d;
  for (const auto& s : series) d.push_back(s.dim());
  return d;
}

}  // namespace

TEST_CASE("h(1) builds from its single relation") {
  LieAlgebra h1 = by_relations(3, {{1, 2, 3}});
  CHECK(h1.dim() == 3);
  CHECK(h1.bracket(unit_vector(3, 0), unit_vector(3, 1)) == unit_vector(3, 2));
}

TEST_CASE("Jacobi violation is rejected with the offending triple") {
  // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = [e3,e3] + 0 - [e1,e2] = -e3
  std::vector<BracketRelation> rels{{1, 2, unit_vector(3, 2)},
                                    {1, 3, unit_vector(3, 0)}};
  try {
    LieAlgebra::from_brackets(3, rels);
    FAIL("expected JacobiViolation");
  } catch (const JacobiViolation& e) {
    CHECK(e.i == 1);
    CHECK(e.j == 2);
    CHECK(e.k == 3);
    Vector want(3);
    want[2] = Scalar(-1);
    CHECK(e.residual == want);
  }
}

TEST_CASE("empty bracket list gives the abelian algebra") {
  LieAlgebra l = LieAlgebra::from_brackets(4, {});
  CHECK(derived_subalgebra(l).dim() == 0);
  CHECK(center(l).dim() == 4);
}

TEST_CASE("bad bracket indices are rejected") {
  CHECK_THROWS_AS(
      LieAlgebra::from_brackets(3, {{2, 2, unit_vector(3, 0)}}),
      std::out_of_range);
  CHECK_THROWS_AS(
      LieAlgebra::from_brackets(3, {{1, 4, unit_vector(3, 0)}}),
      std::out_of_range);
}

TEST_CASE("bracket is antisymmetric and bilinear") {
  LieAlgebra l43 = catalog::get("L4_3").algebra;
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    Vector x(4), y(4);
    for (auto& v : x) v = Scalar(entry(rng));
    for (auto& v : y) v = Scalar(entry(rng));
    CHECK(is_zero_vector(l43.bracket(x, x)));
    CHECK(l43.bracket(x, y) == scale(Scalar(-1), l43.bracket(y, x)));
  }
  // [e1, e2+e3] = e3 + e4 by linearity over the defining relations
  Vector y = add(unit_vector(4, 1), unit_vector(4, 2));
  CHECK(l43.bracket(unit_vector(4, 0), y) ==
        add(unit_vector(4, 2), unit_vector(4, 3)));
}

TEST_CASE("bracket length mismatch throws") {
  LieAlgebra h1 = heisenberg(1);
  CHECK_THROWS_AS(h1.bracket(zero_vector(2), zero_vector(3)),
                  std::invalid_argument);
}

TEST_CASE("derived subalgebra and center of Heisenberg algebras") {
  for (std::size_t m = 1; m <= 3; ++m) {
    LieAlgebra h = heisenberg(m);
    CHECK(center(h).dim() == 1);
    CHECK(derived_subalgebra(h) == center(h));
  }
}

TEST_CASE("derived and center of L5_8") {
  LieAlgebra l = catalog::get("L5_8").algebra;
  Subspace want = span({unit_vector(5, 3), unit_vector(5, 4)}, 5);
  CHECK(derived_subalgebra(l) == want);
  CHECK(center(l) == want);
}

TEST_CASE("central series of L4_3") {
  LieAlgebra l = catalog::get("L4_3").algebra;
  CHECK(dims(lower_central_series(l)) == std::vector<std::size_t>{4, 2, 1, 0});
  CHECK(dims(upper_central_series(l)) == std::vector<std::size_t>{0, 1, 2, 4});
  CHECK(nilpotency_class(l) == 3);
}

TEST_CASE("Heisenberg algebras have class 2") {
  for (std::size_t m = 1; m <= 3; ++m)
    CHECK(nilpotency_class(heisenberg(m)) == 2);
}

TEST_CASE("central series of L5_7") {
  LieAlgebra l = catalog::get("L5_7").algebra;
  CHECK(dims(lower_central_series(l)) ==
        std::vector<std::size_t>{5, 3, 2, 1, 0});
  CHECK(nilpotency_class(l) == 4);
}

TEST_CASE("series lengths agree with the nilpotency class") {
  for (const auto& e : catalog::list()) {
    auto lcs = lower_central_series(e.algebra);
    auto ucs = upper_central_series(e.algebra);
    auto cls = nilpotency_class(e.algebra);
    REQUIRE(cls.has_value());
    CHECK(lcs.back().dim() == 0);
    CHECK(ucs.back().dim() == e.algebra.dim());
    CHECK(lcs.size() == *cls + 1);
    CHECK(ucs.size() == *cls + 1);
  }
}

TEST_CASE("a non-nilpotent algebra is detected") {
  // sl(2): [v1,v2]=v3, [v1,v3]=-2v1, [v2,v3]=2v2
  std::vector<BracketRelation> rels{
      {1, 2, unit_vector(3, 2)},
      {1, 3, scale(Scalar(-2), unit_vector(3, 0))},
      {2, 3, scale(Scalar(2), unit_vector(3, 1))}};
  LieAlgebra sl2 = LieAlgebra::from_brackets(3, rels);
  CHECK(!nilpotency_class(sl2).has_value());
  CHECK(lower_central_series(sl2).back().dim() == 3);
}

TEST_CASE("direct sums") {
  CHECK(fingerprint(direct_sum(heisenberg(1), abelian(1))) ==
        fingerprint(catalog::get("L4_2").algebra));
  CHECK(fingerprint(direct_sum(abelian(2), abelian(3))) ==
        fingerprint(abelian(5)));
  CHECK(fingerprint(direct_sum(catalog::get("L4_3").algebra, abelian(1))) ==
        fingerprint(catalog::get("L5_3").algebra));
}

TEST_CASE("direct sum is associative up to fingerprint") {
  LieAlgebra a = heisenberg(1), b = abelian(2), c = catalog::get("L4_3").algebra;
  LieAlgebra left = direct_sum(direct_sum(a, b), c);
  LieAlgebra right = direct_sum(a, direct_sum(b, c));
  CHECK(left.dim() == right.dim());
  CHECK(fingerprint(left) == fingerprint(right));
}

TEST_CASE("quotients") {
  LieAlgebra l43 = catalog::get("L4_3").algebra;
  Subspace e4 = span({unit_vector(4, 3)}, 4);
  CHECK(fingerprint(quotient(l43, e4)) == fingerprint(heisenberg(1)));

  CHECK(quotient(l43, Subspace::full(4)).dim() == 0);

  LieAlgebra l58 = catalog::get("L5_8").algebra;
  Subspace e5 = span({unit_vector(5, 4)}, 5);
  CHECK(fingerprint(quotient(l58, e5)) ==
        fingerprint(catalog::get("L4_2").algebra));
}

TEST_CASE("quotient rejects non-ideals") {
  LieAlgebra l43 = catalog::get("L4_3").algebra;
  Subspace e1 = span({unit_vector(4, 0)}, 4);
  CHECK_THROWS_AS(quotient(l43, e1), NotAnIdeal);
}

TEST_CASE("change of basis") {
  LieAlgebra h1 = heisenberg(1);
  CHECK(change_of_basis(h1, Matrix::identity(3)).same_structure(h1));

  // swapping e1 and e2 flips the sign of the only bracket
  Matrix swap(3, 3);
  swap.at(0, 1) = Scalar(1);
  swap.at(1, 0) = Scalar(1);
  swap.at(2, 2) = Scalar(1);
  LieAlgebra swapped = change_of_basis(h1, swap);
  CHECK(swapped.basis_bracket(0, 1) == scale(Scalar(-1), unit_vector(3, 2)));
}

TEST_CASE("change of basis rejects singular matrices") {
  CHECK_THROWS_AS(change_of_basis(heisenberg(1), Matrix(3, 3)),
                  std::domain_error);
}

TEST_CASE("fingerprint is invariant under change of basis") {
  std::mt19937 rng(29);
  LieAlgebra l55 = catalog::get("L5_5").algebra;
  Fingerprint fp = fingerprint(l55);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix p = random_invertible(5, rng);
    CHECK(fingerprint(change_of_basis(l55, p)) == fp);
  }
}

TEST_CASE("semidirect reports") {
  LieAlgebra l42 = catalog::get("L4_2").algebra;
  Subspace a = span({unit_vector(4, 3)}, 4);
  Subspace b = span({unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 2)}, 4);
  SemidirectReport rep = is_semidirect(l42, a, b);
  CHECK(rep.is_ideal_a);
  CHECK(rep.spans);
  CHECK(rep.trivial_intersection);
  CHECK(rep.is_central_a);
  CHECK(rep.is_semidirect());

  SemidirectReport whole = is_semidirect(l42, Subspace::full(4), Subspace::full(4));
  CHECK(whole.spans);
  CHECK(!whole.trivial_intersection);

  LieAlgebra l43 = catalog::get("L4_3").algebra;
  SemidirectReport rep43 = is_semidirect(l43, a, b);
  CHECK(rep43.is_ideal_a);
  CHECK(rep43.spans);
  CHECK(rep43.trivial_intersection);
  CHECK(rep43.is_central_a);
}

TEST_CASE("fingerprints of the spec reference cases") {
  Fingerprint ab4 = fingerprint(abelian(4));
  CHECK(ab4.dim == 4);
  CHECK(ab4.lcs_dims == std::vector<std::size_t>{4, 0});
  CHECK(ab4.ucs_dims == std::vector<std::size_t>{0, 4});
  CHECK(ab4.nil_class == 1);
  CHECK(ab4.multiplier_dim == 6);
  CHECK(ab4.corank == 0);

  Fingerprint h1 = fingerprint(heisenberg(1));
  CHECK(h1.dim == 3);
  CHECK(h1.lcs_dims == std::vector<std::size_t>{3, 1, 0});
  CHECK(h1.ucs_dims == std::vector<std::size_t>{0, 1, 3});
  CHECK(h1.nil_class == 2);
  CHECK(h1.multiplier_dim == 2);
  CHECK(h1.corank == 1);

  Fingerprint l55 = fingerprint(catalog::get("L5_5").algebra);
  CHECK(l55.multiplier_dim == 4);
  CHECK(l55.corank == 6);
}

TEST_CASE("centralizer basics") {
  LieAlgebra l43 = catalog::get("L4_3").algebra;
  CHECK(centralizer(l43, Subspace::full(4)) == center(l43));
  CHECK(centralizer(l43, Subspace(4)) == Subspace::full(4));
  // e2 commutes with everything but e1
  Subspace e2 = span({unit_vector(4, 1)}, 4);
  Subspace c = centralizer(l43, e2);
  CHECK(c.dim() == 3);
  CHECK(c.contains(unit_vector(4, 1)));
  CHECK(!c.contains(unit_vector(4, 0)));
  CHECK_THROWS_AS(centralizer(l43, Subspace(3)), std::invalid_argument);
}

TEST_CASE("zero algebra has class 0") {
  LieAlgebra zero = LieAlgebra::from_brackets(0, {});
  CHECK(nilpotency_class(zero) == 0);
}
