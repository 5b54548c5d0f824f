#include "wickstar/scalar.hpp"

#include "wickstar/errors.hpp"

namespace wickstar {

QComplex& QComplex::operator/=(const QComplex& o) {
  const mpq_class den = o.norm();
  if (sgn(den) == 0) throw DomainError("QComplex: division by zero");
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / den;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string QComplex::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  std::string s = re_.get_str();
  if (sgn(im_) > 0) s += "+";
  return s + im_.get_str() + "i";
}

std::ostream& operator<<(std::ostream& os, const QComplex& z) { return os << z.str(); }

}  // namespace wickstar
