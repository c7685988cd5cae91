#include "lienil/scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lienil {

Scalar Scalar::inverse() const {
  mpq_class norm = re_ * re_ + im_ * im_;
  if (norm == 0) throw std::domain_error("Scalar::inverse: division by zero");
  return Scalar(re_ / norm, -im_ / norm);
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (re_ != 0) {
    os << re_;
    if (im_ > 0) os << "+";
  }
  if (im_ != 0) {
    if (im_ == -1)
      os << "-";
    else if (im_ != 1)
      os << im_;
    os << "i";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace lienil
