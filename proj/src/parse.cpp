#include "lienil/parse.hpp"

#include <cctype>
#include <sstream>

#include "lienil/catalog.hpp"

namespace lienil {

ParseError::ParseError(std::size_t line, std::size_t col,
                       const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", col " +
                         std::to_string(col) + ": " + message),
      line(line),
      col(col) {}

namespace {

struct Token {
  enum Kind { Int, Ident, Sym, End } kind;
  std::string text;
  std::size_t line, col;
};

std::vector<Token> tokenize_line(const std::string& text, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') break;
    std::size_t col = i + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Int, text.substr(i, j - i), line_no, col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({Token::Ident, text.substr(i, j - i), line_no, col});
      i = j;
    } else if (std::string("[],=+-*/^()").find(c) != std::string::npos) {
      out.push_back({Token::Sym, std::string(1, c), line_no, col});
      ++i;
    } else {
      throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::End, "", line_no, text.size() + 1});
  return out;
}

class TokenStream {
public:
  explicit TokenStream(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = pos_ + ahead;
    return k < toks_.size() ? toks_[k] : toks_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (t.kind != Token::End) ++pos_;
    return t;
  }
  bool accept_sym(const std::string& s) {
    if (peek().kind == Token::Sym && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect_sym(const std::string& s) {
    if (!accept_sym(s)) fail("expected '" + s + "'");
  }
  std::size_t expect_int() {
    if (peek().kind != Token::Int) fail("expected an integer");
    return std::stoul(next().text);
  }
  std::string expect_ident(const std::string& what) {
    if (peek().kind != Token::Ident) fail("expected " + what);
    return next().text;
  }
  void expect_end() {
    if (peek().kind != Token::End) fail("trailing input");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(peek().line, peek().col, msg);
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// RAT = ['-'] INT ['/' INT]; the sign is handled by callers
mpq_class parse_rat(TokenStream& ts) {
  mpq_class num(static_cast<long>(ts.expect_int()));
  if (ts.accept_sym("/")) {
    std::size_t den = ts.expect_int();
    if (den == 0) ts.fail("zero denominator");
    num /= static_cast<long>(den);
  }
  return num;
}

bool at_imag_unit(const TokenStream& ts, std::size_t ahead = 0) {
  return ts.peek(ahead).kind == Token::Ident && ts.peek(ahead).text == "i";
}

// SCALAR = RAT | RAT 'i' | RAT ('+'|'-') RAT 'i' | 'i'
// (the complex continuation is only absorbed when the lookahead
// confirms a trailing 'i', so '+' stays usable as a term separator)
Scalar parse_scalar(TokenStream& ts) {
  if (at_imag_unit(ts)) {
    ts.next();
    return Scalar::i();
  }
  mpq_class re = parse_rat(ts);
  if (at_imag_unit(ts)) {
    ts.next();
    return Scalar(0, re);
  }
  if (ts.peek().kind == Token::Sym &&
      (ts.peek().text == "+" || ts.peek().text == "-") &&
      ts.peek(1).kind == Token::Int) {
    // confirm the trailing 'i' past RAT before committing
    std::size_t ahead = 2;
    if (ts.peek(2).kind == Token::Sym && ts.peek(2).text == "/") ahead = 4;
    if (at_imag_unit(ts, ahead)) {
      bool neg = ts.next().text == "-";
      mpq_class im = parse_rat(ts);
      ts.next();  // 'i'
      return Scalar(re, neg ? mpq_class(-im) : im);
    }
  }
  return Scalar(re, 0);
}

// generator token "v3" -> 3; returns 0 if the token is not of that shape
std::size_t generator_index(const Token& t, char head) {
  if (t.kind != Token::Ident || t.text.size() < 2 || t.text[0] != head) return 0;
  for (std::size_t k = 1; k < t.text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(t.text[k]))) return 0;
  return std::stoul(t.text.substr(1));
}

// TERM (('+'|'-') TERM)* with TERM = [SCALAR ['*']] 'v'K
Vector parse_bracket_value(TokenStream& ts, std::size_t n) {
  Vector value(n);
  // allow "= 0" for an explicitly zero bracket
  if (ts.peek().kind == Token::Int && ts.peek().text == "0" &&
      ts.peek(1).kind == Token::End) {
    ts.next();
    return value;
  }
  bool first = true;
  while (true) {
    Scalar sign(1);
    if (ts.accept_sym("-"))
      sign = Scalar(-1);
    else if (ts.accept_sym("+")) {
    } else if (!first) {
      break;
    }
    first = false;
    Scalar coeff(1);
    if (ts.peek().kind == Token::Int || at_imag_unit(ts)) {
      coeff = parse_scalar(ts);
      ts.accept_sym("*");
    }
    std::size_t k = generator_index(ts.peek(), 'v');
    if (k == 0) ts.fail("expected a generator vK");
    if (k > n) ts.fail("generator index exceeds dimension");
    ts.next();
    value[k - 1] += sign * coeff;
  }
  ts.expect_end();
  return value;
}

std::vector<std::string> logical_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

bool blank_line(const std::string& raw, std::size_t line_no) {
  return tokenize_line(raw, line_no).front().kind == Token::End;
}

}  // namespace

LieAlgebra parse_algebra(const std::string& text) {
  auto lines = logical_lines(text);
  std::string name;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<BracketRelation> rels;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (blank_line(lines[ln], ln + 1)) continue;
    TokenStream ts(tokenize_line(lines[ln], ln + 1));
    if (!have_header) {
      if (ts.expect_ident("the keyword 'algebra'") != "algebra")
        ts.fail("expected 'algebra NAME dim N' header");
      name = ts.expect_ident("an algebra name");
      if (ts.expect_ident("the keyword 'dim'") != "dim")
        ts.fail("expected 'dim'");
      n = ts.expect_int();
      ts.expect_end();
      have_header = true;
      continue;
    }
    ts.expect_sym("[");
    std::size_t i = ts.expect_int();
    ts.expect_sym(",");
    std::size_t j = ts.expect_int();
    ts.expect_sym("]");
    ts.expect_sym("=");
    if (i < 1 || j <= i || j > n) ts.fail("bracket indices must satisfy 1 <= i < j <= dim");
    rels.push_back({i, j, parse_bracket_value(ts, n)});
  }
  if (!have_header) throw ParseError(1, 1, "missing 'algebra NAME dim N' header");
  return LieAlgebra::from_brackets(n, rels, name);
}

std::string serialize_algebra(const LieAlgebra& l) {
  // labels like "h(1)" are not identifiers; map them into the grammar
  std::string name;
  for (char c : l.label())
    name += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
  if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0])))
    name = "unnamed";
  std::ostringstream os;
  os << "algebra " << name << " dim " << l.dim() << "\n";
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      Vector v = l.basis_bracket(i, j);
      if (is_zero_vector(v)) continue;
      os << "[" << i + 1 << "," << j + 1 << "] =";
      bool first = true;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        // put the leading sign into the separator so the output stays
        // inside the grammar (terms never start with '-')
        Scalar c = v[k];
        bool neg = sgn(c.real()) < 0 || (sgn(c.real()) == 0 && sgn(c.imag()) < 0);
        if (neg) c = -c;
        os << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
        first = false;
        if (c != Scalar(1)) os << c.str() << " ";
        os << "v" << k + 1;
      }
      os << "\n";
    }
  return os.str();
}

namespace {

WeylElement parse_weyl_expr(TokenStream& ts, std::size_t modes);

WeylElement parse_weyl_factor(TokenStream& ts, std::size_t modes) {
  WeylElement base(modes);
  if (ts.accept_sym("(")) {
    base = parse_weyl_expr(ts, modes);
    ts.expect_sym(")");
  } else if (ts.peek().kind == Token::Ident && ts.peek().text == "I") {
    ts.next();
    base = WeylElement::identity(modes);
  } else if (std::size_t k = generator_index(ts.peek(), 'a'); k != 0) {
    if (k > modes) ts.fail("generator mode index exceeds declared modes");
    ts.next();
    base = WeylElement::a(modes, k);
  } else if (std::size_t k = generator_index(ts.peek(), 'b'); k != 0) {
    if (k > modes) ts.fail("generator mode index exceeds declared modes");
    ts.next();
    base = WeylElement::b(modes, k);
  } else if (ts.peek().kind == Token::Int || at_imag_unit(ts)) {
    base = WeylElement::identity(modes).scaled(parse_scalar(ts));
  } else {
    ts.fail("expected a scalar, generator, I, or parenthesised expression");
  }
  while (ts.accept_sym("^")) base = base.pow(static_cast<unsigned>(ts.expect_int()));
  return base;
}

WeylElement parse_weyl_term(TokenStream& ts, std::size_t modes) {
  WeylElement r = parse_weyl_factor(ts, modes);
  while (ts.accept_sym("*")) r = r * parse_weyl_factor(ts, modes);
  return r;
}

WeylElement parse_weyl_expr(TokenStream& ts, std::size_t modes) {
  bool neg = false;
  if (ts.accept_sym("-"))
    neg = true;
  else
    ts.accept_sym("+");
  WeylElement r = parse_weyl_term(ts, modes);
  if (neg) r = r.scaled(Scalar(-1));
  while (true) {
    if (ts.accept_sym("+"))
      r += parse_weyl_term(ts, modes);
    else if (ts.accept_sym("-"))
      r -= parse_weyl_term(ts, modes);
    else
      return r;
  }
}

}  // namespace

WeylElement parse_weyl_expression(const std::string& text, std::size_t modes) {
  TokenStream ts(tokenize_line(text, 1));
  WeylElement r = parse_weyl_expr(ts, modes);
  ts.expect_end();
  return r;
}

RealizationDocument parse_realization(const std::string& text) {
  auto lines = logical_lines(text);
  RealizationDocument doc;
  bool have_header = false, have_modes = false;
  std::size_t inline_dim = 0;
  std::vector<BracketRelation> inline_rels;
  std::string inline_name;
  bool inline_open = false;
  std::vector<std::pair<std::size_t, WeylElement>> assigns;

  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (blank_line(lines[ln], ln + 1)) continue;
    TokenStream ts(tokenize_line(lines[ln], ln + 1));
    const Token& head = ts.peek();
    if (!have_header) {
      if (head.kind != Token::Ident || head.text != "realization")
        ts.fail("expected 'realization NAME' header");
      ts.next();
      doc.name = ts.expect_ident("a realization name");
      ts.expect_end();
      have_header = true;
      continue;
    }
    if (head.kind == Token::Ident && head.text == "target") {
      ts.next();
      doc.target_name = ts.expect_ident("a catalog name");
      ts.expect_end();
      continue;
    }
    if (head.kind == Token::Ident && head.text == "algebra") {
      ts.next();
      inline_name = ts.expect_ident("an algebra name");
      if (ts.expect_ident("the keyword 'dim'") != "dim") ts.fail("expected 'dim'");
      inline_dim = ts.expect_int();
      ts.expect_end();
      inline_open = true;
      continue;
    }
    if (head.kind == Token::Sym && head.text == "[") {
      if (!inline_open) ts.fail("bracket line outside an inline algebra block");
      ts.next();
      std::size_t i = ts.expect_int();
      ts.expect_sym(",");
      std::size_t j = ts.expect_int();
      ts.expect_sym("]");
      ts.expect_sym("=");
      if (i < 1 || j <= i || j > inline_dim)
        ts.fail("bracket indices must satisfy 1 <= i < j <= dim");
      inline_rels.push_back({i, j, parse_bracket_value(ts, inline_dim)});
      continue;
    }
    if (head.kind == Token::Ident && head.text == "modes") {
      ts.next();
      doc.modes = ts.expect_int();
      if (doc.modes == 0) ts.fail("modes must be >= 1");
      ts.expect_end();
      have_modes = true;
      continue;
    }
    if (std::size_t k = generator_index(head, 'v'); k != 0) {
      if (!have_modes) ts.fail("'modes M' must precede assignments");
      ts.next();
      ts.expect_sym("=");
      WeylElement e = parse_weyl_expr(ts, doc.modes);
      ts.expect_end();
      assigns.push_back({k, e});
      continue;
    }
    ts.fail("unrecognized line");
  }
  if (!have_header) throw ParseError(1, 1, "missing 'realization NAME' header");

  if (inline_open)
    doc.inline_algebra = LieAlgebra::from_brackets(inline_dim, inline_rels, inline_name);
  if (doc.target_name.empty() && !doc.inline_algebra)
    throw ParseError(1, 1, "realization needs 'target NAME' or an inline algebra");
  if (!doc.target_name.empty() && doc.inline_algebra)
    throw ParseError(1, 1, "realization has both a target and an inline algebra");

  std::size_t dim = doc.inline_algebra
                        ? doc.inline_algebra->dim()
                        : catalog::get(doc.target_name).algebra.dim();
  doc.assignment.assign(dim, WeylElement::zero(doc.modes));
  std::vector<bool> seen(dim, false);
  for (const auto& [k, e] : assigns) {
    if (k > dim)
      throw ParseError(1, 1, "assignment index v" + std::to_string(k) +
                                 " exceeds dimension " + std::to_string(dim));
    if (seen[k - 1])
      throw ParseError(1, 1, "v" + std::to_string(k) + " assigned twice");
    seen[k - 1] = true;
    doc.assignment[k - 1] = e;
  }
  for (std::size_t k = 0; k < dim; ++k)
    if (!seen[k])
      throw ParseError(1, 1, "v" + std::to_string(k + 1) + " never assigned");
  return doc;
}

}  // namespace lienil
