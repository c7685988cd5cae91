#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lienil/subspace.hpp"

namespace lienil {

/// Construction rejected because a basis triple violates the Jacobi
/// identity; carries the offending triple (1-based) and residual vector.
struct JacobiViolation : std::runtime_error {
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k, Vector residual);
  std::size_t i, j, k;
  Vector residual;
};

struct NotAnIdeal : std::runtime_error {
  NotAnIdeal() : std::runtime_error("quotient: subspace is not an ideal") {}
};

/// One bracket relation [e_i, e_j] = value, 1-based, i < j.
struct BracketRelation {
  std::size_t i, j;
  Vector value;
};

/// Finite-dimensional Lie algebra given by structure constants
/// c_{ij}^k over Q(i), Jacobi-validated at construction. Brackets for
/// i >= j are implied by antisymmetry. Immutable once built.
class LieAlgebra {
public:
  /// Builds from bracket relations; unspecified brackets are zero.
  /// Throws JacobiViolation or std::out_of_range.
  static LieAlgebra from_brackets(std::size_t n,
                                  const std::vector<BracketRelation>& brackets,
                                  std::string label = "");

  std::size_t dim() const { return n_; }
  const std::string& label() const { return label_; }

  /// [e_i, e_j] for 0-based basis indices, any i, j.
  Vector basis_bracket(std::size_t i, std::size_t j) const;

  /// Bilinear antisymmetric expansion through the structure constants.
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Structure tensor equality (same basis presentation, labels ignored).
  bool same_structure(const LieAlgebra& o) const;

  LieAlgebra relabeled(std::string label) const {
    LieAlgebra copy = *this;
    copy.label_ = std::move(label);
    return copy;
  }

private:
  LieAlgebra(std::size_t n, std::vector<Vector> table, std::string label)
      : n_(n), table_(std::move(table)), label_(std::move(label)) {}

  std::size_t pair_index(std::size_t i, std::size_t j) const {
    // index of (i,j), i<j, in lexicographic pair order
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }

  std::size_t n_;
  std::vector<Vector> table_;  // [e_i,e_j] for i<j, lexicographic
  std::string label_;
};

Subspace derived_subalgebra(const LieAlgebra& l);
Subspace center(const LieAlgebra& l);

/// gamma_1 = l, gamma_{i+1} = [gamma_i, l]; runs until stabilization.
std::vector<Subspace> lower_central_series(const LieAlgebra& l);

/// Z_0 = 0, Z_{i+1} = preimage of the center of l/Z_i; runs until
/// stabilization.
std::vector<Subspace> upper_central_series(const LieAlgebra& l);

/// Nilpotency class, or nullopt when the series stabilize short.
/// Abelian algebras have class 1; the zero algebra class 0.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& l);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Quotient by a verified ideal; basis is the complement of the
/// ideal's pivot columns in standard coordinates.
LieAlgebra quotient(const LieAlgebra& l, const Subspace& ideal);

/// Structure constants in the basis whose vectors are the rows of p
/// (expressed in the old basis). Throws std::domain_error if singular.
LieAlgebra change_of_basis(const LieAlgebra& l, const Matrix& p);

struct SemidirectReport {
  bool is_ideal_a = false;
  bool spans = false;
  bool trivial_intersection = false;
  bool is_central_a = false;
  bool is_semidirect() const { return is_ideal_a && spans && trivial_intersection; }
};

/// {x : [x,s] = 0 for all s in the subspace}.
Subspace centralizer(const LieAlgebra& l, const Subspace& s);

SemidirectReport is_semidirect(const LieAlgebra& l, const Subspace& a,
                               const Subspace& b);

bool is_ideal(const LieAlgebra& l, const Subspace& s);

}  // namespace lienil
