#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lienil/lie_algebra.hpp"
#include "lienil/weyl.hpp"

namespace lienil {

/// Syntax error with 1-based source position.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line, std::size_t col, const std::string& message);
  std::size_t line, col;
};

/// Parses an algebra document:
///   algebra NAME dim N
///   [i,j] = TERM (('+'|'-') TERM)*    with TERM = [SCALAR ['*']] vK
/// '#' starts a comment; whitespace is insignificant. Jacobi failures
/// propagate as JacobiViolation.
LieAlgebra parse_algebra(const std::string& text);

std::string serialize_algebra(const LieAlgebra& l);

/// Parses a single operator expression over a1.., b1.., I with
/// +, -, *, ^ and parenthesised subexpressions; the product is
/// non-commutative and '^' binds tightest.
WeylElement parse_weyl_expression(const std::string& text, std::size_t modes);

struct RealizationDocument {
  std::string name;
  /// Exactly one of the two is set: a catalog name, or an inline algebra.
  std::string target_name;
  std::optional<LieAlgebra> inline_algebra;
  std::size_t modes = 0;
  std::vector<WeylElement> assignment;  // index k holds v_{k+1}
};

/// Parses a realization document:
///   realization NAME
///   target CATALOG_NAME        (or an inline "algebra .. dim N" block)
///   modes M
///   vK = EXPRESSION            (each k = 1..dim exactly once)
RealizationDocument parse_realization(const std::string& text);

}  // namespace lienil
