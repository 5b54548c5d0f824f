#ifndef WICKSTAR_STAR_HPP
#define WICKSTAR_STAR_HPP

// The coefficient family c_n(hbar) and the Wick-type star products on the
// disk, the annulus and the punctured disk.

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wickstar/errors.hpp"
#include "wickstar/function_core.hpp"
#include "wickstar/peschl_minda.hpp"
#include "wickstar/polynomial.hpp"
#include "wickstar/scalar.hpp"

namespace wickstar {

/// Float-mode distance below which hbar counts as sitting on a pole.
inline constexpr double kHbarPoleTol = 1e-12;

/// Deformation parameter, guarded against 0 and -1/n.
template <class T>
class BasicHbar {
 public:
  // NOLINTNEXTLINE(google-explicit-constructor)
  BasicHbar(T value) : value_(std::move(value)) { check(); }
  const T& value() const { return value_; }

 private:
  void check() const;
  T value_;
};

using Hbar = BasicHbar<Complex>;
using QHbar = BasicHbar<QComplex>;

template <>
inline void BasicHbar<Complex>::check() const {
  if (!std::isfinite(value_.real()) || !std::isfinite(value_.imag())) throw DomainError("hbar must be finite");
  if (std::abs(value_) <= kHbarPoleTol) throw DomainError("hbar = 0 is excluded from the deformation domain");
  // -1/n is within tolerance only for n near -1/Re(hbar).
  if (std::abs(value_.imag()) <= kHbarPoleTol && value_.real() < 0.0) {
    const double nf = -1.0 / value_.real();
    for (long n = std::max(1L, static_cast<long>(std::floor(nf)) - 1); n <= static_cast<long>(std::ceil(nf)) + 1; ++n) {
      if (std::abs(value_ + 1.0 / static_cast<double>(n)) <= kHbarPoleTol) {
        std::ostringstream msg;
        msg << "hbar at the pole -1/" << n << " of the coefficient family";
        throw DomainError(msg.str());
      }
    }
  }
}

template <>
inline void BasicHbar<QComplex>::check() const {
  if (value_.is_zero()) throw DomainError("hbar = 0 is excluded from the deformation domain");
  if (sgn(value_.im()) == 0 && sgn(value_.re()) < 0) {
    const mpq_class inv = -1 / value_.re();
    if (inv.get_den() == 1) {
      throw DomainError("hbar at the pole -1/" + inv.get_num().get_str() + " of the coefficient family");
    }
  }
}

/// c_n(hbar) = hbar^n / prod_{j<n} (1 + j hbar), by the recurrence c_{n+1} = c_n hbar / (1 + n hbar).
template <class T>
T c_n(const BasicHbar<T>& h, unsigned n) {
  T c = ScalarTraits<T>::from_int(1);
  for (unsigned k = 0; k < n; ++k) c = c * h.value() / (ScalarTraits<T>::from_int(1) + ScalarTraits<T>::from_int(k) * h.value());
  return c;
}

/// c_n(hbar) straight from the product formula (test oracle for the recurrence).
template <class T>
T c_n_product(const BasicHbar<T>& h, unsigned n) {
  T num = ScalarTraits<T>::from_int(1);
  T den = ScalarTraits<T>::from_int(1);
  for (unsigned j = 0; j < n; ++j) {
    num = num * h.value();
    den = den * (ScalarTraits<T>::from_int(1) + ScalarTraits<T>::from_int(j) * h.value());
  }
  return num / den;
}

/// e_n = n! c_n(hbar), the weight that multiplies delta_n products; e_0 .. e_N.
template <class T>
std::vector<T> scaled_coefficients(const BasicHbar<T>& h, unsigned N) {
  std::vector<T> e;
  e.reserve(N + 1);
  e.push_back(ScalarTraits<T>::from_int(1));
  for (unsigned n = 0; n < N; ++n) {
    e.push_back(e.back() * h.value() * ScalarTraits<T>::from_int(n + 1) /
                (ScalarTraits<T>::from_int(1) + ScalarTraits<T>::from_int(n) * h.value()));
  }
  return e;
}

enum class StarMode { exact_finite, truncated };

struct StarConfig {
  unsigned max_terms = 64;
  double tol = 1e-12;
  StarMode mode = StarMode::truncated;
  /// Disk product: take every Peschl-Minda derivative from the T_z definition.
  bool use_definitional_derivatives = false;
};

struct StarResult {
  Complex value;
  unsigned terms_used = 0;
  double tail_estimate = 0.0;
  bool converged = false;
};

/// Sums sum_n terms[n] with the three-consecutive-small-terms rule.
StarResult sum_series(const std::vector<Complex>& terms, const StarConfig& cfg, bool exhausted_is_exact);

/// (f * g)(z) = sum_n c_n/n! D^n g(z) conj-D^n f(z).
StarResult star_disk(const DiskFunction& f, const DiskFunction& g, const Hbar& h, Complex z,
                     const StarConfig& cfg = {});

/// sum_n c_n/n! (w^2 - 1)^n g^(n)(w) gt^(n)(w).
StarResult star_annulus(const EntireFn& g, const EntireFn& gt, const Hbar& h, Complex w, const StarConfig& cfg = {});

/// Weight of the n-th punctured-disk term: w^{2n} as derived, or the constant w^2 variant.
enum class PuncturedWeight { derived, printed };

/// sum_n c_n/n! w^{2n} g^(n)(w) gt^(n)(w).
StarResult star_punctured(const EntireFn& g, const EntireFn& gt, const Hbar& h, Complex w, const StarConfig& cfg = {},
                          PuncturedWeight weight = PuncturedWeight::derived);

// ---- exact symbolic products -------------------------------------------------

/// sum_n c_n(hbar) P_n(w): a factorial series with polynomial coefficients.
template <class T>
struct FactorialSeries {
  std::map<unsigned, UniPoly<T>> terms;

  /// Polynomial in w at a fixed hbar.
  UniPoly<T> at(const BasicHbar<T>& h) const {
    UniPoly<T> out;
    for (const auto& [n, p] : terms) out += c_n(h, n) * p;
    return out;
  }
  friend bool operator==(const FactorialSeries& a, const FactorialSeries& b) { return a.terms == b.terms; }
};

enum class SurfaceKind { annulus, punctured };

/// Product of polynomial parameters as an exact factorial series:
/// P_n = weight_n(w) g^(n) gt^(n) / n!.
template <class T>
FactorialSeries<T> surface_star_exact(const UniPoly<T>& g, const UniPoly<T>& gt, SurfaceKind surface,
                                      PuncturedWeight weight = PuncturedWeight::derived) {
  using Tr = ScalarTraits<T>;
  FactorialSeries<T> out;
  const int top = std::min(g.degree(), gt.degree());
  const UniPoly<T> w2 = UniPoly<T>::monomial(2);
  const UniPoly<T> annulus_base = w2 - UniPoly<T>::constant(Tr::from_int(1));
  UniPoly<T> weight_pow = UniPoly<T>::constant(Tr::from_int(1));
  long fact = 1;
  for (int n = 0; n <= top; ++n) {
    if (n > 0) {
      fact *= n;
      if (surface == SurfaceKind::annulus)
        weight_pow = weight_pow * annulus_base;
      else if (weight == PuncturedWeight::derived || n == 1)
        weight_pow = weight_pow * w2;
    }
    UniPoly<T> p = Tr::from_ratio(1, fact) * (weight_pow * g.derivative(n) * gt.derivative(n));
    if (!p.is_zero()) out.terms.emplace(static_cast<unsigned>(n), std::move(p));
  }
  return out;
}

/// Exact Taylor coefficients at (0, 0), up to total degree K, of the disk
/// product f * g of two polynomials in (z, w).  Only the finitely many series
/// terms that can reach degree <= K are summed.
template <class T>
BiPoly<T> star_disk_taylor(const BiPoly<T>& f, const BiPoly<T>& g, const BasicHbar<T>& h, int K);

/// Lower bound on the total degree of delta_n applied to a polynomial, per monomial:
/// delta_n(z^a w^b) starts at degree b + |n - a| (slot z); the w slot is symmetric.
template <class T>
int pm_min_degree(const BiPoly<T>& F, unsigned n, Slot slot) {
  int best = -1;
  for (const auto& [k, c] : F.terms()) {
    const int a = slot == Slot::z ? k.first : k.second;
    const int b = slot == Slot::z ? k.second : k.first;
    const int d = b + std::abs(static_cast<int>(n) - a);
    best = best < 0 ? d : std::min(best, d);
  }
  return best;
}

template <class T>
BiPoly<T> star_disk_taylor(const BiPoly<T>& f, const BiPoly<T>& g, const BasicHbar<T>& h, int K) {
  BiPoly<T> out;
  if (f.is_zero() || g.is_zero()) return out;
  const unsigned N = static_cast<unsigned>(std::max(0, g.degree(Slot::z)) + std::max(0, f.degree(Slot::w)) + K + 1);
  const auto e = scaled_coefficients(h, N);
  for (unsigned n = 0; n <= N; ++n) {
    if (pm_min_degree(g, n, Slot::z) + pm_min_degree(f, n, Slot::w) > K) continue;
    const BiPoly<T> dg = pm_delta_poly(g, n);
    if (dg.is_zero()) continue;
    const BiPoly<T> df = pm_bar_delta_poly(f, n);
    if (df.is_zero()) continue;
    out += e[n] * BiPoly<T>::multiply_truncated(dg, df, K);
  }
  return out;
}

/// Which slot degree of a factor governs the truncation depth of a nested product.
/// ((f*g)*h needs f*g to degree K + deg_z h; f*(g*h) needs g*h to degree K + deg_w f.)
template <class T>
BiPoly<T> star_disk_taylor_left_nested(const BiPoly<T>& f, const BiPoly<T>& g, const BiPoly<T>& h,
                                       const BasicHbar<T>& hb, int K) {
  const BiPoly<T> fg = star_disk_taylor(f, g, hb, K + std::max(0, h.degree(Slot::z)));
  return star_disk_taylor(fg, h, hb, K);
}

template <class T>
BiPoly<T> star_disk_taylor_right_nested(const BiPoly<T>& f, const BiPoly<T>& g, const BiPoly<T>& h,
                                        const BasicHbar<T>& hb, int K) {
  const BiPoly<T> gh = star_disk_taylor(g, h, hb, K + std::max(0, f.degree(Slot::w)));
  return star_disk_taylor(f, gh, hb, K);
}

// ---- hbar profiles ---------------------------------------------------------------

struct ProfileSample {
  Complex hbar;
  std::optional<StarResult> result;
  std::string error;
};

enum class ProductKind { disk, annulus, punctured };

struct ProfileInputs {
  ProductKind kind = ProductKind::annulus;
  std::optional<DiskFunction> f, g;  // disk
  std::optional<EntireFn> gs, gts;   // surfaces
  Complex point;                     // z for the disk, w for surfaces
  StarConfig cfg;
};

/// Evaluates the chosen product at each hbar; domain errors are recorded per sample.
std::vector<ProfileSample> star_hbar_profile(const ProfileInputs& in, const std::vector<Complex>& hs);

/// Max |discrete Cauchy-Riemann residual| of a profile evaluated on the
/// 5-point stencil {h0, h0 +- s, h0 +- i s}.
double cauchy_riemann_residual(const ProfileInputs& in, Complex h0, double step);

}  // namespace wickstar

#endif  // WICKSTAR_STAR_HPP
