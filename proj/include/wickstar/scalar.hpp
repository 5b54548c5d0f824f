#ifndef WICKSTAR_SCALAR_HPP
#define WICKSTAR_SCALAR_HPP

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

namespace wickstar {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Exact element of Q(i), stored as a pair of GMP rationals.
class QComplex {
 public:
  QComplex() : re_(0), im_(0) {}
  QComplex(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  QComplex(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// Builds p/q + i·r/s from machine integers.
  static QComplex ratio(long p, long q, long r = 0, long s = 1) {
    return QComplex(mpq_class(p, q), mpq_class(r, s));
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  QComplex& operator+=(const QComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  QComplex& operator-=(const QComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  QComplex& operator*=(const QComplex& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  QComplex& operator/=(const QComplex& o);

  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
  friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
  friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
  QComplex operator-() const { return QComplex(-re_, -im_); }

  friend bool operator==(const QComplex& a, const QComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const QComplex& a, const QComplex& b) { return !(a == b); }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  QComplex conj() const { return QComplex(re_, -im_); }
  /// |z|², exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string str() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const QComplex& z);

/// Uniform access to the two coefficient fields (complex double and Q(i)).
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
  static Complex from_ratio(long p, long q) {
    return Complex(static_cast<double>(p) / static_cast<double>(q), 0.0);
  }
  static Complex conj(const Complex& z) { return std::conj(z); }
  static bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }
  static Complex to_complex(const Complex& z) { return z; }
  static Complex imag_unit() { return Complex(0.0, 1.0); }
};

template <>
struct ScalarTraits<QComplex> {
  static constexpr bool exact = true;
  static QComplex from_int(long v) { return QComplex(v); }
  static QComplex from_ratio(long p, long q) { return QComplex::ratio(p, q); }
  static QComplex conj(const QComplex& z) { return z.conj(); }
  static bool is_zero(const QComplex& z) { return z.is_zero(); }
  static Complex to_complex(const QComplex& z) { return z.to_complex(); }
  static QComplex imag_unit() { return QComplex(0, 1); }
};

template <class T>
T conj_of(const T& z) {
  return ScalarTraits<T>::conj(z);
}

template <class T>
bool is_zero(const T& z) {
  return ScalarTraits<T>::is_zero(z);
}

template <class T>
Complex to_complex(const T& z) {
  return ScalarTraits<T>::to_complex(z);
}

template <class T>
T pow_int(T base, unsigned exp) {
  T result = ScalarTraits<T>::from_int(1);
  while (exp > 0) {
    if (exp & 1U) result *= base;
    base *= base;
    exp >>= 1U;
  }
  return result;
}

/// Relative-or-absolute distance used by every tolerance check in the library.
inline double rel_residual(Complex a, Complex b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace wickstar

#endif  // WICKSTAR_SCALAR_HPP
