#ifndef WICKSTAR_SURFACE_HPP
#define WICKSTAR_SURFACE_HPP

// Radial function algebras on the annulus A_R and the punctured disk D*,
// their transports, lifts to the disk, and invariance predicates on G.

#include <functional>
#include <string>
#include <vector>

#include "wickstar/function_core.hpp"
#include "wickstar/peschl_minda.hpp"
#include "wickstar/sphere.hpp"
#include "wickstar/star.hpp"

namespace wickstar {

/// f_R(z) = -i tan(pi/(2 log R) log|z|), 1/R < |z| < R.
Complex chart_f_R(double R, Complex z);
/// f_0(z) = -1/log|z|, 0 < |z| < 1.
Complex chart_f_0(Complex z);

/// g o f_R on A_R.
class AnnulusElement {
 public:
  AnnulusElement(double R, EntireFn g);
  double R() const { return R_; }
  const EntireFn& g() const { return g_; }
  Complex operator()(Complex z) const { return value(z); }
  Complex value(Complex z) const { return g_.eval(chart_f_R(R_, z)).value; }

 private:
  double R_;
  EntireFn g_;
};

/// g o f_0 on D*.
class PuncturedElement {
 public:
  explicit PuncturedElement(EntireFn g) : g_(std::move(g)) {}
  const EntireFn& g() const { return g_; }
  Complex operator()(Complex z) const { return value(z); }
  Complex value(Complex z) const { return g_.eval(chart_f_0(z)).value; }

 private:
  EntireFn g_;
};

AnnulusElement transport_annulus(const EntireFn& g, double R);
PuncturedElement transport_punctured(const EntireFn& g);

/// Psi_{R',R}: h o f_{R'} -> h o f_R.
AnnulusElement iso_psi(const AnnulusElement& e, double R);

DiskFunction lift_to_disk(const AnnulusElement& e);
DiskFunction lift_to_disk(const PuncturedElement& e);

/// Element-level products of polynomial parameters at a fixed hbar.
AnnulusElement star(const AnnulusElement& a, const AnnulusElement& b, const Hbar& h);
PuncturedElement star(const PuncturedElement& a, const PuncturedElement& b, const Hbar& h,
                      PuncturedWeight weight = PuncturedWeight::derived);

/// (z, w) -> F(1/z, 1/w) on a finite f_{p,q} combination:
/// f_{p,q}(1/z, 1/w) = (-1)^m sum_k binom(r, k) f_{m-p+k, m-q+k}, m = max, r = min.
template <class T>
FpqSpan<T> z2_involution(const FpqSpan<T>& F) {
  using Tr = ScalarTraits<T>;
  FpqSpan<T> out;
  for (const auto& [pq, c] : F.terms()) {
    const int p = pq.first, q = pq.second;
    const int m = std::max(p, q), r = std::min(p, q);
    long b = 1;
    for (int k = 0; k <= r; ++k) {
      if (k > 0) b = b * (r - k + 1) / k;
      const T coef = Tr::from_int((m % 2 == 0) ? b : -b) * c;
      out.add(m - p + k, m - q + k, coef);
    }
  }
  return out;
}

/// f_{p,q} at a projective point of Omega: u1^p u2^q v1^{m-p} v2^{m-q} / (v1 v2 - u1 u2)^m.
Complex fpq_eval_projective(const BasisFpq& b, const OmegaPoint& p);

/// A function on G with a printable label.
struct GFunction {
  std::string label;
  std::function<Complex(const GPoint&)> eval;
};

/// g(w/(z-w)), invariant under z -> cz.
GFunction scaling_kernel(const EntireFn& g);
/// g(1/(z-w)), invariant under z -> z + 1.
GFunction translation_kernel(const EntireFn& g);
/// f_{p,q} o Psi^{-1}.
GFunction fpq_on_g(int p, int q);

struct InvarianceReport {
  double max_residual = 0.0;
  bool pass = false;
  std::size_t samples = 0;
  std::vector<std::string> failures;  // per-sample evaluation errors
};

/// max |F(gamma-hat P) - F(P)| over the samples, relative to max(1, |F(P)|).
InvarianceReport gamma_hat_invariant(const GFunction& F, const MoebiusMap& gamma, const std::vector<GPoint>& samples,
                                     double tol);

}  // namespace wickstar

#endif  // WICKSTAR_SURFACE_HPP
