#ifndef WICKSTAR_PESCHL_MINDA_IMPL_HPP
#define WICKSTAR_PESCHL_MINDA_IMPL_HPP

// Template bodies for the exact polynomial Peschl-Minda operators.

#include <algorithm>

namespace wickstar {

namespace detail {

inline long binom_long(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

inline long factorial_long(long n) {
  long r = 1;
  for (long j = 2; j <= n; ++j) r *= j;
  return r;
}

template <class T>
BiPoly<T> delta_slot(const BiPoly<T>& F, unsigned n, Slot slot) {
  using Tr = ScalarTraits<T>;
  if (n == 0) return F;
  const int deg = F.degree(slot);
  const unsigned top = std::min<unsigned>(n, deg < 0 ? 0U : static_cast<unsigned>(deg));
  // (-w)^{n-m} for the z slot, (-z)^{n-m} for the w slot.
  const BiPoly<T> other = slot == Slot::z ? BiPoly<T>::monomial(0, 1, Tr::from_int(-1))
                                          : BiPoly<T>::monomial(1, 0, Tr::from_int(-1));
  const BiPoly<T> s = one_minus_zw<T>();
  BiPoly<T> out;
  BiPoly<T> dF = F;
  BiPoly<T> s_pow = BiPoly<T>::constant(Tr::from_int(1));
  for (unsigned m = 1; m <= top; ++m) {
    dF = dF.wirtinger(slot);
    s_pow = s_pow * s;
    if (dF.is_zero()) break;
    const long num = binom_long(static_cast<long>(n) - 1, static_cast<long>(m) - 1);
    const long den = factorial_long(static_cast<long>(m));
    const T coef = Tr::from_ratio(num, den);
    out += coef * (s_pow * other.pow(n - m) * dF);
  }
  return out;
}

}  // namespace detail

template <class T>
BiPoly<T> pm_delta_poly(const BiPoly<T>& F, unsigned n) {
  return detail::delta_slot(F, n, Slot::z);
}

template <class T>
BiPoly<T> pm_bar_delta_poly(const BiPoly<T>& F, unsigned n) {
  return detail::delta_slot(F, n, Slot::w);
}

template <class T>
BiPoly<T> pm_derivative_poly_recursive(const BiPoly<T>& F, unsigned n) {
  if (n == 0) return F;
  const BiPoly<T> s = one_minus_zw<T>();
  return s * (s.pow(n - 1) * F).wirtinger(Slot::z, static_cast<int>(n));
}

}  // namespace wickstar

#endif  // WICKSTAR_PESCHL_MINDA_IMPL_HPP
