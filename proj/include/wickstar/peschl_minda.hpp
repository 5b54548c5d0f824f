#ifndef WICKSTAR_PESCHL_MINDA_HPP
#define WICKSTAR_PESCHL_MINDA_HPP

// Peschl-Minda derivatives D^n, conj-D^n of functions on the unit disk.
//
// A disk function f is carried by a holomorphic extension F(z, w) with
// f(z) = F(z, conj z).  Throughout, delta_n f := D^n f / n! is the quantity
// actually computed; it is the u^n coefficient of F(T_z(u), conj z) where
// T_z(u) = (z + u)/(1 + conj(z) u).

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "wickstar/function_core.hpp"
#include "wickstar/jet.hpp"
#include "wickstar/polynomial.hpp"
#include "wickstar/sphere.hpp"

namespace wickstar {

class DiskFunction;

namespace disk {
struct Poly {
  BiPoly<Complex> F;
};
/// g(p(z)), p(z) = (z - conj z)/(1 - |z|^2)
struct ComposedP {
  EntireFn g;
};
/// g(q(z)), q(z) = |1 - z|^2/(1 - |z|^2)
struct ComposedQ {
  EntireFn g;
};
/// inner(phi(z)), phi in Aut(D)
struct Pullback {
  std::shared_ptr<const DiskFunction> inner;
  MoebiusMap phi;
};
}  // namespace disk

enum class DiskKind { poly, composed_p, composed_q, pullback };

class DiskFunction {
 public:
  using Variant = std::variant<disk::Poly, disk::ComposedP, disk::ComposedQ, disk::Pullback>;

  static DiskFunction poly(BiPoly<Complex> F) { return DiskFunction(disk::Poly{std::move(F)}); }
  static DiskFunction poly(const BiPoly<QComplex>& F) { return poly(F.to_float()); }
  static DiskFunction composed_p(EntireFn g) { return DiskFunction(disk::ComposedP{std::move(g)}); }
  static DiskFunction composed_q(EntireFn g) { return DiskFunction(disk::ComposedQ{std::move(g)}); }
  /// f o phi.  A polynomial pulled back by a rotation stays a polynomial;
  /// everything else is kept as a pullback node.
  static DiskFunction pullback(const DiskFunction& inner, const MoebiusMap& phi);

  DiskKind kind() const { return static_cast<DiskKind>(v_.index()); }
  const Variant& variant() const { return v_; }
  /// Throws unless the function is a polynomial.
  const BiPoly<Complex>& as_poly() const;

  /// f(z); |z| < 1 required.
  Complex value(Complex z) const;
  /// F(z, w).
  Complex extension(Complex z, Complex w) const;
  /// F(z(u), w(u)) as a truncated series.
  Jet extension_jet(const Jet& z, const Jet& w) const;

 private:
  explicit DiskFunction(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

// ---- closed-form auxiliaries ----------------------------------------------

Complex aux_p(Complex z);
Complex aux_q(Complex z);
/// P(z, w) = (z - w)/(1 - zw), the extension of p.
Complex aux_p_ext(Complex z, Complex w);
/// Q(z, w) = (1 - z)(1 - w)/(1 - zw), the extension of q.
Complex aux_q_ext(Complex z, Complex w);

// ---- exact polynomial path ------------------------------------------------

/// delta_n F as a polynomial in (z, w): the Leibniz form of the recursion
///   D^{n+1} f = (1 - |z|^2) d^{n+1} [(1 - |z|^2)^n f],
///   delta_n F = sum_{m=1}^{n} binom(n-1, m-1)/m! (1-zw)^m (-w)^{n-m} d_z^m F.
template <class T>
BiPoly<T> pm_delta_poly(const BiPoly<T>& F, unsigned n);
/// The same operator acting on the w slot (the conj-D family).
template <class T>
BiPoly<T> pm_bar_delta_poly(const BiPoly<T>& F, unsigned n);
/// D^n F by literally iterating the recursion; used only to cross-check pm_delta_poly.
template <class T>
BiPoly<T> pm_derivative_poly_recursive(const BiPoly<T>& F, unsigned n);

// ---- pointwise operators -----------------------------------------------------

/// D^n f(z).  Polynomials use the exact recursion, composites the closed forms,
/// pullbacks the definition through T_z.
Complex pm_derivative(const DiskFunction& f, unsigned n, Complex z);
/// conj-D^n f(z) = conj(D^n conj f)(z).
Complex pm_bar_derivative(const DiskFunction& f, unsigned n, Complex z);

/// (D^n (g o p)(z), conj-D^n (g o p)(z)).
std::pair<Complex, Complex> pm_closed_form_p(const EntireFn& g, unsigned n, Complex z);
/// (D^n (g o q)(z), conj-D^n (g o q)(z)).
std::pair<Complex, Complex> pm_closed_form_q(const EntireFn& g, unsigned n, Complex z);

/// D^n f(z) from the definition, with a Taylor jet of the given order (0 means n + 2).
Complex pm_derivative_definitional(const DiskFunction& f, unsigned n, Complex z, unsigned jet_order = 0);
Complex pm_bar_derivative_definitional(const DiskFunction& f, unsigned n, Complex z, unsigned jet_order = 0);

enum class PmSide { holomorphic, antiholomorphic };

/// delta_0 .. delta_N of f at z (D^n f / n!, or the conj-D analogue).
/// definitional = true forces the jet route for every variant.
std::vector<Complex> pm_scaled_sequence(const DiskFunction& f, PmSide side, Complex z, unsigned N,
                                        bool definitional = false);

void require_disk_point(Complex z, const char* where);

}  // namespace wickstar

#include "wickstar/peschl_minda_impl.hpp"

#endif  // WICKSTAR_PESCHL_MINDA_HPP
