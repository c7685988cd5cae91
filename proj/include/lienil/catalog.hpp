#pragma once

#include <map>
#include <optional>
#include <string>

#include "lienil/cohomology.hpp"
#include "lienil/fingerprint.hpp"

namespace lienil {
namespace catalog {

/// Heisenberg algebra h(m): dimension 2m+1, only nonzero brackets
/// [v_{2i-1}, v_{2i}] = v_{2m+1}. Requires m >= 1.
LieAlgebra heisenberg(std::size_t m);

LieAlgebra abelian(std::size_t n);

/// h(m) + k abelian summands; dimension 2m+1+k for m >= 1, and the
/// abelian algebra of dimension k for m = 0. (m,k) = (0,0) is rejected.
LieAlgebra heisenberg_plus_abelian(std::size_t m, std::size_t k);

struct CatalogEntry {
  std::string name;
  LieAlgebra algebra;
  /// Corank stated by the classification table, when listed there.
  /// Stored verbatim; engine disagreements surface as flags.
  std::optional<long> expected_corank;
};

struct UnknownName : std::invalid_argument {
  explicit UnknownName(const std::string& name)
      : std::invalid_argument("unknown catalog name: " + name) {}
};

/// Entry by canonical name (L3_1 .. L5_9, L6_2, L7_2, L8_2) or a
/// parametric alias H(m) / A(n). Throws UnknownName.
CatalogEntry get(const std::string& name);

const std::vector<CatalogEntry>& list();

/// Name of the unique catalog entry whose fingerprint matches, or
/// "unknown". Fingerprint uniqueness across the catalog is asserted
/// by the test suite.
std::string identify(const LieAlgebra& l);

struct CorankRow {
  std::string name;
  long expected;   // table value
  long computed;   // engine value
  bool flagged;    // expected != computed
};

/// The published corank table with engine verdicts attached; rows
/// where table and engine disagree are flagged, never corrected.
std::map<long, std::vector<CorankRow>> corank_table();

}  // namespace catalog
}  // namespace lienil
