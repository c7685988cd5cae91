#pragma once

#include <map>
#include <string>
#include <vector>

#include "lienil/lie_algebra.hpp"
#include "lienil/scalar.hpp"

namespace lienil {

/// Exponent key of a normal-ordered monomial
/// b_1^{p_1}..b_m^{p_m} a_1^{q_1}..a_m^{q_m}.
struct WeylMonomial {
  std::vector<unsigned> b_exp, a_exp;
  friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
};

/// Element of the m-mode Weyl algebra generated by ladder pairs with
/// [a_i, b_j] = delta_{ij} I, kept in normal-ordered canonical form
/// (all b's left of all a's, zero coefficients deleted). Whether a
/// pair is read as bosonic (b = a-dagger) or pseudo-bosonic is
/// interpretation-level metadata; the algebra is the same.
class WeylElement;

/// Normal-ordered product. Per mode the reordering law is
/// a^q b^r = sum_k k! C(q,k) C(r,k) b^{r-k} a^{q-k}.
WeylElement multiply(const WeylElement& x, const WeylElement& y);

class WeylElement {
public:
  explicit WeylElement(std::size_t modes = 1) : modes_(modes) {}

  static WeylElement identity(std::size_t modes);
  /// Lowering generator a_k, 1-based mode index.
  static WeylElement a(std::size_t modes, std::size_t k);
  /// Raising generator b_k, 1-based mode index.
  static WeylElement b(std::size_t modes, std::size_t k);
  static WeylElement zero(std::size_t modes) { return WeylElement(modes); }

  std::size_t modes() const { return modes_; }
  const std::map<WeylMonomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree (sum of all exponents of the top term);
  /// -1 for the zero element.
  int degree() const;

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  friend WeylElement operator+(WeylElement x, const WeylElement& y) { return x += y; }
  friend WeylElement operator-(WeylElement x, const WeylElement& y) { return x -= y; }
  WeylElement scaled(const Scalar& c) const;

  friend WeylElement operator*(const WeylElement& x, const WeylElement& y) {
    return multiply(x, y);
  }

  friend bool operator==(const WeylElement& x, const WeylElement& y) {
    return x.modes_ == y.modes_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const WeylElement& x, const WeylElement& y) {
    return !(x == y);
  }

  WeylElement pow(unsigned e) const;

  std::string str() const;

  void add_term(const WeylMonomial& mono, const Scalar& c);

private:
  std::size_t modes_;
  std::map<WeylMonomial, Scalar> terms_;
};

WeylElement commutator(const WeylElement& x, const WeylElement& y);

/// Formal bosonic adjoint: conjugates coefficients, swaps a_i and b_i,
/// reverses products. An involution and an antihomomorphism.
WeylElement adjoint(const WeylElement& x);

struct RealizationReport {
  bool is_homomorphism = false;
  /// Basis pairs (1-based) where [X_i, X_j] differs from the image of
  /// the bracket, with the symbolic difference.
  std::vector<std::tuple<std::size_t, std::size_t, WeylElement>> mismatches;
  /// Linear independence of the assigned images.
  bool is_faithful = false;
};

/// Checks that X_i |-> e_i is a Lie homomorphism, i.e. that
/// [X_i, X_j] equals sum_k c_{ij}^k X_k exactly for all i < j.
RealizationReport verify_realization(const LieAlgebra& l,
                                     const std::vector<WeylElement>& assignment);

struct Realization {
  LieAlgebra algebra;
  std::vector<WeylElement> ops;
  std::string flavor;  // "bosonic" or "pseudo-bosonic"
};

/// Built-in operator assignments: L4_3-bosonic, L4_3-pseudo,
/// L5_8-bosonic, L5_8-pseudo, L5_5-bosonic, L5_5-pseudo,
/// H(m)-shifted, H(m)+A(k). Throws std::invalid_argument on
/// unknown names.
Realization paper_realization(const std::string& name);

/// h(m) realized by shifted ladder pairs w_{2j-1} = a_j + alpha_j I,
/// w_{2j} = b_j + beta_j I; requires alpha_j != conj(beta_j) for the
/// pairs to be genuinely pseudo-bosonic.
Realization shifted_heisenberg(std::size_t m, const std::vector<Scalar>& alpha,
                               const std::vector<Scalar>& beta);

/// h(m) + k abelian summands realized with the k+1 central images all
/// equal to I; a homomorphism for every (m,k) but faithful only for k=0.
Realization heisenberg_abelian_realization(std::size_t m, std::size_t k);

/// Two-photon squeezing generator omega b a + i (g b^2 - conj(g) a^2);
/// self-adjoint for real omega. One mode.
WeylElement hamiltonian_h0(const Scalar& omega, const Scalar& g);

/// lambda (v3 + v2 v5) under the two-mode ladder assignment; not
/// self-adjoint. Requires real lambda.
WeylElement hamiltonian_l58(const Scalar& lambda);

/// omega v3 v1 + lambda v4 v2 under the two-mode ladder assignment;
/// not self-adjoint. Requires real omega and lambda.
WeylElement hamiltonian_l55(const Scalar& omega, const Scalar& lambda);

}  // namespace lienil
