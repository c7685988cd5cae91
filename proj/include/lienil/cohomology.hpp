#pragma once

#include <optional>

#include "lienil/fingerprint.hpp"
#include "lienil/lie_algebra.hpp"

namespace lienil {

/// Matrix of the Chevalley-Eilenberg differential d^p : C^p -> C^{p+1}
/// with trivial coefficients, in the lexicographic p-subset bases.
struct CochainMatrix {
  std::size_t degree = 0;
  Matrix matrix;  // shape C(n,p+1) x C(n,p)
};

CochainMatrix ce_differential(const LieAlgebra& l, std::size_t p);

struct CohomologyReport {
  std::size_t n = 0;
  std::size_t rank_d1 = 0;
  std::size_t rank_d2 = 0;
  std::size_t multiplier_dim = 0;  // dim H^2 = C(n,2) - rank d2 - rank d1
  long corank = 0;                 // n(n-1)/2 - multiplier_dim
};

CohomologyReport cohomology_report(const LieAlgebra& l);
std::size_t schur_multiplier_dim(const LieAlgebra& l);
long corank(const LieAlgebra& l);

struct NotAntisymmetric : std::invalid_argument {
  NotAntisymmetric() : std::invalid_argument("cocycle matrix is not antisymmetric") {}
};

struct NotACocycle : std::invalid_argument {
  NotACocycle() : std::invalid_argument("theta does not satisfy the 2-cocycle condition") {}
};

/// Antisymmetric bilinear form theta(e_i, e_j) = theta.at(i, j); the
/// extension datum for appending one central generator.
struct TwoCocycle {
  Matrix theta;  // n x n, antisymmetric

  Scalar eval(const Vector& x, const Vector& y) const;
};

/// Basis of Z^2 = ker d^2; count = C(n,2) - rank d^2.
std::vector<TwoCocycle> cocycle_space(const LieAlgebra& l);

/// Cocycle condition on all basis triples; throws NotAntisymmetric.
bool is_cocycle(const LieAlgebra& l, const TwoCocycle& theta);

/// Algebra of dimension n+1 with [x,y]_new = [x,y] + theta(x,y) e_{n+1}
/// and e_{n+1} central. Throws NotACocycle.
LieAlgebra central_extension(const LieAlgebra& l, const TwoCocycle& theta);

/// Exhaustive search over integer combinations (coefficients within
/// [-coeff_bound, coeff_bound], small magnitudes first) of the cocycle
/// basis for an extension matching the target fingerprint.
std::optional<TwoCocycle> find_extension_to(const LieAlgebra& l,
                                            const Fingerprint& target,
                                            int coeff_bound);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace lienil
