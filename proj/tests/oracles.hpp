#pragma once

// Independent reference implementations used by the tests.  None of these
// share code with the library paths they check.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "oracle_values.hpp"
#include "wickstar/scalar.hpp"

namespace oracle {

using C = std::complex<double>;
constexpr double pi = 3.14159265358979323846;

inline wickstar::QComplex q(const char* const (&pair)[2]) {
  return wickstar::QComplex(mpq_class(pair[0]), mpq_class(pair[1]));
}

inline double rel(C a, C b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

inline C mobius(C a, C b, C c, C d, C z) { return (a * z + b) / (c * z + d); }

inline C disk_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * pi * u(rng));
}

/// [u^n] of an analytic function near 0, by a DFT on |u| = rho.
inline C taylor_coeff(const std::function<C(C)>& f, unsigned n, double rho = 0.5, unsigned M = 128) {
  C acc = 0.0;
  for (unsigned m = 0; m < M; ++m) {
    const double th = 2.0 * pi * m / M;
    acc += f(std::polar(rho, th)) * std::polar(1.0, -static_cast<double>(n) * th);
  }
  return acc / (static_cast<double>(M) * std::pow(rho, n));
}

/// D^n f(z) / n! = [u^n] F(T_z(u), conj z), from the extension F.
inline C delta(const std::function<C(C, C)>& F, unsigned n, C z) {
  const C zb = std::conj(z);
  return taylor_coeff([&](C u) { return F((z + u) / (1.0 + zb * u), zb); }, n);
}

/// conj-D^n f(z) / n! = [u^n] F(z, T_conj z(u)).
inline C bar_delta(const std::function<C(C, C)>& F, unsigned n, C z) {
  const C zb = std::conj(z);
  return taylor_coeff([&](C u) { return F(z, (zb + u) / (1.0 + z * u)); }, n);
}

/// n! c_n(h) by its defining product.
inline C scaled_c(C h, unsigned n) {
  C v = 1.0;
  for (unsigned j = 1; j <= n; ++j) v *= h * static_cast<double>(j) / (1.0 + static_cast<double>(j - 1) * h);
  return v;
}

/// sum_n n! c_n(h) delta_n g conj-delta_n f, straight from the definitions, n < N.
inline C disk_product(const std::function<C(C, C)>& F, const std::function<C(C, C)>& G, C h, C z, unsigned N) {
  C acc = 0.0;
  for (unsigned n = 0; n < N; ++n) acc += scaled_c(h, n) * delta(G, n, z) * bar_delta(F, n, z);
  return acc;
}

}  // namespace oracle
