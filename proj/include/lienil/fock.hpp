#pragma once

#include "lienil/matrix.hpp"
#include "lienil/weyl.hpp"

namespace lienil {

/// Per-mode representation choice: plain ladder pair, or the shifted
/// pair (a + alpha I, b + beta I). Shifts leave all commutators
/// unchanged.
struct PairSpec {
  Scalar alpha, beta;  // both zero for the bosonic pair
  bool is_shifted() const { return !alpha.is_zero() || !beta.is_zero(); }
};

/// Truncated matrix model of the Weyl algebra in the monomial
/// (polynomial) basis: per mode, b maps e_n to e_{n+1} (e_{N-1} to 0)
/// and a maps e_n to n e_{n-1}. Exact Q(i) entries throughout; the
/// matrix adjoint does NOT model the operator adjoint in this basis.
class FockRep {
public:
  /// levels >= 2 required; pair_specs may be empty (all unshifted) or
  /// one entry per mode.
  FockRep(std::size_t modes, std::size_t levels,
          std::vector<PairSpec> pair_specs = {});

  std::size_t modes() const { return modes_; }
  std::size_t levels() const { return levels_; }
  std::size_t dim() const;  // levels^modes
  const std::vector<PairSpec>& pair_specs() const { return specs_; }

  /// True when some mode is shifted with alpha = conj(beta), i.e. the
  /// shift is not a genuine pseudo-bosonic deformation.
  bool has_bosonic_shift_warning() const;

  const Matrix& a_matrix(std::size_t mode) const { return a_[mode]; }
  const Matrix& b_matrix(std::size_t mode) const { return b_[mode]; }

private:
  std::size_t modes_, levels_;
  std::vector<PairSpec> specs_;
  std::vector<Matrix> a_, b_;  // single-mode N x N blocks
};

/// Exact matrix of a Weyl element: per-mode blocks B^p A^q combined by
/// Kronecker product (mode 1 slowest index).
Matrix to_matrix(const FockRep& rep, const WeylElement& x);

struct SafeCheckReport {
  bool checked = false;        // false when no safe columns remain
  bool agrees = false;
  std::size_t safe_levels = 0; // per-mode indices 0..safe_levels-1
  std::vector<std::size_t> mismatch_columns;
  std::string note;
};

/// Compares [to_matrix(x), to_matrix(y)] against to_matrix(expected)
/// on the columns untouched by truncation: basis tuples with every
/// index <= N-1-D, where D = degree(x) + degree(y).
SafeCheckReport safe_commutator_check(const FockRep& rep, const WeylElement& x,
                                      const WeylElement& y,
                                      const WeylElement& expected);

}  // namespace lienil
