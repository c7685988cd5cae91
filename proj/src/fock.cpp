#include "lienil/fock.hpp"

#include <stdexcept>

namespace lienil {

namespace {

Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix r(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (x.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < y.rows(); ++k)
        for (std::size_t l = 0; l < y.cols(); ++l)
          r.at(i * y.rows() + k, j * y.cols() + l) = x.at(i, j) * y.at(k, l);
    }
  return r;
}

Matrix matrix_pow(const Matrix& m, unsigned e) {
  Matrix r = Matrix::identity(m.rows());
  for (unsigned t = 0; t < e; ++t) r = r * m;
  return r;
}

}  // namespace

FockRep::FockRep(std::size_t modes, std::size_t levels,
                 std::vector<PairSpec> pair_specs)
    : modes_(modes), levels_(levels), specs_(std::move(pair_specs)) {
  if (levels < 2) throw std::domain_error("FockRep: levels must be >= 2");
  if (modes < 1) throw std::domain_error("FockRep: need at least one mode");
  if (specs_.empty()) specs_.resize(modes);
  if (specs_.size() != modes)
    throw std::invalid_argument("FockRep: one pair spec per mode expected");

  const std::size_t N = levels;
  for (std::size_t mode = 0; mode < modes; ++mode) {
    Matrix a(N, N), b(N, N);
    for (std::size_t n = 1; n < N; ++n) a.at(n - 1, n) = Scalar(static_cast<long>(n));
    for (std::size_t n = 0; n + 1 < N; ++n) b.at(n + 1, n) = Scalar(1);
    if (specs_[mode].is_shifted()) {
      a = a + Matrix::identity(N).scaled(specs_[mode].alpha);
      b = b + Matrix::identity(N).scaled(specs_[mode].beta);
    }
    a_.push_back(std::move(a));
    b_.push_back(std::move(b));
  }
}

std::size_t FockRep::dim() const {
  std::size_t d = 1;
  for (std::size_t t = 0; t < modes_; ++t) d *= levels_;
  return d;
}

bool FockRep::has_bosonic_shift_warning() const {
  for (const auto& s : specs_)
    if (s.is_shifted() && s.alpha == s.beta.conj()) return true;
  return false;
}

Matrix to_matrix(const FockRep& rep, const WeylElement& x) {
  if (x.modes() != rep.modes())
    throw std::invalid_argument("to_matrix: mode mismatch");
  Matrix out(rep.dim(), rep.dim());
  for (const auto& [mono, c] : x.terms()) {
    Matrix term(1, 1);
    term.at(0, 0) = Scalar(1);
    for (std::size_t mode = 0; mode < rep.modes(); ++mode) {
      Matrix block = matrix_pow(rep.b_matrix(mode), mono.b_exp[mode]) *
                     matrix_pow(rep.a_matrix(mode), mono.a_exp[mode]);
      term = kron(term, block);
    }
    out = out + term.scaled(c);
  }
  return out;
}

SafeCheckReport safe_commutator_check(const FockRep& rep, const WeylElement& x,
                                      const WeylElement& y,
                                      const WeylElement& expected) {
  SafeCheckReport rep_out;
  const int dx = x.degree(), dy = y.degree();
  // zero operands commute with everything; budget is then just the
  // expected element's own degree
  const int budget = std::max(0, (dx < 0 ? 0 : dx) + (dy < 0 ? 0 : dy));
  const long safe_top = static_cast<long>(rep.levels()) - 1 - budget;
  if (safe_top < 0) {
    rep_out.note = "no safe columns: degree budget " + std::to_string(budget) +
                   " exceeds level count " + std::to_string(rep.levels());
    return rep_out;
  }
  rep_out.checked = true;
  rep_out.safe_levels = static_cast<std::size_t>(safe_top) + 1;

  Matrix mx = to_matrix(rep, x), my = to_matrix(rep, y);
  Matrix comm = mx * my - my * mx;
  Matrix want = to_matrix(rep, expected);

  const std::size_t N = rep.levels(), m = rep.modes(), dim = rep.dim();
  for (std::size_t col = 0; col < dim; ++col) {
    // column index decodes to a per-mode occupation tuple
    bool safe = true;
    std::size_t rest = col;
    for (std::size_t t = 0; t < m; ++t) {
      std::size_t idx = rest % N;
      rest /= N;
      if (idx >= rep_out.safe_levels) {
        safe = false;
        break;
      }
    }
    if (!safe) continue;
    for (std::size_t row = 0; row < dim; ++row)
      if (comm.at(row, col) != want.at(row, col)) {
        rep_out.mismatch_columns.push_back(col);
        break;
      }
  }
  rep_out.agrees = rep_out.mismatch_columns.empty();
  return rep_out;
}

}  // namespace lienil
