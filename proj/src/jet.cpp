#include "wickstar/jet.hpp"

#include <stdexcept>

#include "wickstar/errors.hpp"

namespace wickstar {

namespace {
void require_same_order(const Jet& a, const Jet& b) {
  if (a.order() != b.order()) throw std::invalid_argument("Jet: order mismatch");
}
}  // namespace

Jet& Jet::operator+=(const Jet& o) {
  require_same_order(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  require_same_order(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  Jet r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.c_[i] == Complex(0.0, 0.0)) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  if (b.c_[0] == Complex(0.0, 0.0)) throw DomainError("Jet: division by a series with zero constant term");
  const std::size_t n = a.order();
  Jet q(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Complex s = a.c_[k];
    for (std::size_t j = 1; j <= k; ++j) s -= b.c_[j] * q.c_[k - j];
    q.c_[k] = s / b.c_[0];
  }
  return q;
}

Jet exp(const Jet& a) {
  // e' = a' e, coefficientwise: k e_k = sum_{j=1}^{k} j a_j e_{k-j}.
  const std::size_t n = a.order();
  Jet e(n, std::exp(a[0]));
  for (std::size_t k = 1; k <= n; ++k) {
    Complex s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * e[k - j];
    e[k] = s / static_cast<double>(k);
  }
  return e;
}

Jet pow(const Jet& a, unsigned n) {
  Jet result(a.order(), 1.0);
  Jet base = a;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace wickstar
