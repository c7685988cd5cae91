#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace lienil {

/// Element of the Gaussian rationals Q(i): exact rational real and
/// imaginary parts with arbitrary-precision numerator/denominator.
/// All arithmetic is exact; equality is structural after reduction.
class Scalar {
public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long n) : re_(n), im_(0) {}
  Scalar(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }
  Scalar(mpq_class re, mpq_class im = mpq_class(0))
      : re_(std::move(re)), im_(std::move(im)) {
    // raw mpq values (e.g. mpq_class(2,4)) arrive unreduced
    re_.canonicalize();
    im_.canonicalize();
  }

  /// The imaginary unit.
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  /// Exact reciprocal; requires a nonzero value.
  Scalar inverse() const;
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used only for canonical map keys, not a field order.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return cmp(a.im_, b.im_) < 0;
  }

  /// Renders like "3/2", "i", "-2i", "1/2+3i", "0".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
  mpq_class re_, im_;
};

}  // namespace lienil
