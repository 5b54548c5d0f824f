#ifndef WICKSTAR_JET_HPP
#define WICKSTAR_JET_HPP

#include <cstddef>
#include <vector>

#include "wickstar/scalar.hpp"

namespace wickstar {

/// Truncated Taylor series a_0 + a_1 u + ... + a_N u^N in one complex variable.
/// Arithmetic is closed at the fixed order N; both operands must share it.
class Jet {
 public:
  explicit Jet(std::size_t order, Complex constant = 0.0) : c_(order + 1, 0.0) { c_[0] = constant; }

  /// center + u
  static Jet variable(std::size_t order, Complex center) {
    Jet j(order, center);
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }

  std::size_t order() const { return c_.size() - 1; }
  const Complex& operator[](std::size_t k) const { return c_[k]; }
  Complex& operator[](std::size_t k) { return c_[k]; }
  const std::vector<Complex>& coeffs() const { return c_; }

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator+=(Complex s) {
    c_[0] += s;
    return *this;
  }
  Jet& operator*=(Complex s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, Complex s) { return a += s; }
  friend Jet operator+(Complex s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, Complex s) { return a += -s; }
  friend Jet operator-(Complex s, const Jet& a) { return (-a) + s; }
  friend Jet operator*(Jet a, Complex s) { return a *= s; }
  friend Jet operator*(Complex s, Jet a) { return a *= s; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  Jet operator-() const {
    Jet r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

 private:
  std::vector<Complex> c_;
};

Jet exp(const Jet& a);
/// a^n by repeated squaring.
Jet pow(const Jet& a, unsigned n);

}  // namespace wickstar

#endif  // WICKSTAR_JET_HPP
