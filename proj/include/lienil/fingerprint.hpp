#pragma once

#include <optional>
#include <vector>

#include "lienil/lie_algebra.hpp"

namespace lienil {

/// Isomorphism-invariant summary used for catalog identification.
/// Equality is necessary but not sufficient for isomorphism in
/// general; it separates every catalog entry.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> lcs_dims;   // dims of gamma_1 >= gamma_2 >= ...
  std::vector<std::size_t> ucs_dims;   // dims of Z_0 <= Z_1 <= ...
  std::optional<std::size_t> nil_class;  // nullopt: not nilpotent
  std::size_t multiplier_dim = 0;
  long corank = 0;
  /// dim of the centralizer of [l,l]; the tie-breaker for the one
  /// catalog pair (L5_6 vs L5_7) whose other components all agree.
  std::size_t derived_centralizer_dim = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LieAlgebra& l);

}  // namespace lienil
