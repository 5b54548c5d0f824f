#ifndef WICKSTAR_SPHERE_HPP
#define WICKSTAR_SPHERE_HPP

// Riemann-sphere arithmetic, Moebius maps, deck groups, covering maps and the
// model changes between Omega, G = Conf2(sphere) and the Danielewski surface.

#include <array>
#include <cmath>
#include <string>

#include "wickstar/errors.hpp"
#include "wickstar/scalar.hpp"

namespace wickstar {

/// Tolerance for projective comparisons in floating-point mode.
inline constexpr double kProjectiveTol = 1e-12;

/// Point of the Riemann sphere as a projective pair (u : v); v = 0 is infinity.
template <class T>
class BasicSpherePoint {
 public:
  using Traits = ScalarTraits<T>;

  BasicSpherePoint(T u, T v) : u_(std::move(u)), v_(std::move(v)) {
    if (is_zero(u_) && is_zero(v_)) throw DomainError("SpherePoint: (0, 0) is not a projective point");
  }
  // NOLINTNEXTLINE(google-explicit-constructor)
  BasicSpherePoint(T z) : BasicSpherePoint(std::move(z), Traits::from_int(1)) {}

  static BasicSpherePoint infinity() { return {Traits::from_int(1), Traits::from_int(0)}; }

  const T& u() const { return u_; }
  const T& v() const { return v_; }
  bool is_infinity() const { return is_zero(v_); }

  /// Affine value u/v; throws at infinity.
  T value() const {
    if (is_infinity()) throw DomainError("SpherePoint: infinity has no finite value");
    return u_ / v_;
  }
  BasicSpherePoint reciprocal() const { return {v_, u_}; }
  BasicSpherePoint conj() const { return {conj_of(u_), conj_of(v_)}; }
  Complex to_complex() const { return wickstar::to_complex(value()); }

 private:
  T u_;
  T v_;
};

template <class T>
bool projectively_equal(const BasicSpherePoint<T>& a, const BasicSpherePoint<T>& b) {
  const T cross = a.u() * b.v() - b.u() * a.v();
  if constexpr (ScalarTraits<T>::exact) {
    return is_zero(cross);
  } else {
    const double na = std::hypot(std::abs(a.u()), std::abs(a.v()));
    const double nb = std::hypot(std::abs(b.u()), std::abs(b.v()));
    return std::abs(cross) <= kProjectiveTol * na * nb;
  }
}

enum class MoebiusKind { general, aut_disk, aut_half_plane };

/// z -> (az+b)/(cz+d) with a designation that is validated on construction.
template <class T>
class BasicMoebius {
 public:
  using Traits = ScalarTraits<T>;
  using Point = BasicSpherePoint<T>;

  BasicMoebius(T a, T b, T c, T d, MoebiusKind kind = MoebiusKind::general)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), kind_(kind) {
    validate();
  }

  static BasicMoebius identity(MoebiusKind kind = MoebiusKind::general) {
    return {Traits::from_int(1), Traits::from_int(0), Traits::from_int(0), Traits::from_int(1), kind};
  }
  /// z -> k z.
  static BasicMoebius scaling(T k, MoebiusKind kind = MoebiusKind::general) {
    return {std::move(k), Traits::from_int(0), Traits::from_int(0), Traits::from_int(1), kind};
  }
  /// z -> z + t.
  static BasicMoebius translation(T t, MoebiusKind kind = MoebiusKind::general) {
    return {Traits::from_int(1), std::move(t), Traits::from_int(0), Traits::from_int(1), kind};
  }
  /// The fixed Cayley map D -> H, z -> i(1+z)/(1-z).
  static BasicMoebius cayley() {
    const T i = Traits::imag_unit();
    return {i, i, Traits::from_int(-1), Traits::from_int(1)};
  }
  /// Rotation z -> unit * z of the disk; |unit| = 1 is checked.
  static BasicMoebius disk_rotation(T unit) { return scaling(std::move(unit), MoebiusKind::aut_disk); }

  const T& a() const { return a_; }
  const T& b() const { return b_; }
  const T& c() const { return c_; }
  const T& d() const { return d_; }
  MoebiusKind kind() const { return kind_; }
  T determinant() const { return a_ * d_ - b_ * c_; }

  Point apply(const Point& p) const { return {a_ * p.u() + b_ * p.v(), c_ * p.u() + d_ * p.v()}; }
  Point operator()(const Point& p) const { return apply(p); }

  /// this ∘ other.
  BasicMoebius compose(const BasicMoebius& o) const {
    const MoebiusKind k = (kind_ == o.kind_) ? kind_ : MoebiusKind::general;
    return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_, k};
  }
  BasicMoebius inverse() const { return {d_, -b_, -c_, a_, kind_}; }
  /// The map with conjugated coefficients, z -> conj(m(conj z)).
  BasicMoebius conjugate_coefficients() const {
    return {conj_of(a_), conj_of(b_), conj_of(c_), conj_of(d_), kind_};
  }
  /// Designation dropped, coefficients kept.
  BasicMoebius as_general() const { return {a_, b_, c_, d_, MoebiusKind::general}; }

 private:
  void validate() const;

  T a_, b_, c_, d_;
  MoebiusKind kind_;
};

namespace detail {

inline bool is_real(const Complex& z, double scale) { return std::abs(z.imag()) <= 1e-12 * std::max(1.0, scale); }
inline bool is_real(const QComplex& z, double) { return sgn(z.im()) == 0; }
inline bool is_positive_real(const Complex& z, double scale) { return is_real(z, scale) && z.real() > 0.0; }
inline bool is_positive_real(const QComplex& z, double) { return sgn(z.im()) == 0 && sgn(z.re()) > 0; }

inline double magnitude(const Complex& z) { return std::abs(z); }
inline double magnitude(const QComplex& z) { return std::abs(z.to_complex()); }

}  // namespace detail

template <class T>
void BasicMoebius<T>::validate() const {
  const T det = determinant();
  const double scale = std::max({detail::magnitude(a_), detail::magnitude(b_), detail::magnitude(c_),
                                 detail::magnitude(d_)});
  if constexpr (ScalarTraits<T>::exact) {
    if (is_zero(det)) throw DomainError("MoebiusMap: ad - bc = 0");
  } else {
    if (std::abs(det) <= 1e-14 * scale * scale) throw DomainError("MoebiusMap: ad - bc = 0");
  }
  if (kind_ == MoebiusKind::aut_half_plane) {
    if (!detail::is_real(a_, scale) || !detail::is_real(b_, scale) || !detail::is_real(c_, scale) ||
        !detail::is_real(d_, scale) || !detail::is_positive_real(det, scale * scale)) {
      throw DomainError("MoebiusMap: Aut(H) requires real coefficients with ad - bc > 0");
    }
  } else if (kind_ == MoebiusKind::aut_disk) {
    // M^* J M = k J with J = diag(1, -1) and k > 0.
    const T off = conj_of(a_) * b_ - conj_of(c_) * d_;
    const T k1 = a_ * conj_of(a_) - c_ * conj_of(c_);
    const T k2 = d_ * conj_of(d_) - b_ * conj_of(b_);
    bool ok;
    if constexpr (ScalarTraits<T>::exact) {
      ok = is_zero(off) && k1 == k2 && detail::is_positive_real(k1, 1.0);
    } else {
      const double tol = 1e-12 * scale * scale;
      ok = std::abs(off) <= tol && std::abs(k1 - k2) <= tol && k1.real() > tol && std::abs(k1.imag()) <= tol;
    }
    if (!ok) throw DomainError("MoebiusMap: coefficients do not define an automorphism of the unit disk");
  }
}

using SpherePoint = BasicSpherePoint<Complex>;
using QSpherePoint = BasicSpherePoint<QComplex>;
using MoebiusMap = BasicMoebius<Complex>;
using QMoebiusMap = BasicMoebius<QComplex>;

/// e^{i theta} (z - a)/(1 - conj(a) z), |a| < 1.
MoebiusMap disk_automorphism(double theta, Complex a);
/// z -> e^{i theta} z.
MoebiusMap disk_rotation(double theta);
/// Real-coefficient map of H; throws unless ad - bc > 0.
MoebiusMap half_plane_automorphism(double a, double b, double c, double d);

enum class FixedPointType { elliptic, parabolic, hyperbolic, identity };
FixedPointType classify(const MoebiusMap& m);
/// Fixed points of a non-identity map (one entry repeated when parabolic).
std::array<SpherePoint, 2> fixed_points(const MoebiusMap& m);

/// Point (z, w) of G: pairs of distinct points of the sphere.
template <class T>
class BasicGPoint {
 public:
  BasicGPoint(BasicSpherePoint<T> z, BasicSpherePoint<T> w) : z_(std::move(z)), w_(std::move(w)) {
    if (projectively_equal(z_, w_)) throw DomainError("GPoint: z = w lies on the removed diagonal");
  }
  const BasicSpherePoint<T>& z() const { return z_; }
  const BasicSpherePoint<T>& w() const { return w_; }

 private:
  BasicSpherePoint<T> z_;
  BasicSpherePoint<T> w_;
};

/// Point (z, w) of Omega: the closure of {zw = 1} (which contains (0, inf) and (inf, 0)) removed.
template <class T>
class BasicOmegaPoint {
 public:
  BasicOmegaPoint(BasicSpherePoint<T> z, BasicSpherePoint<T> w) : z_(std::move(z)), w_(std::move(w)) {
    // zw = 1 projectively: u1 u2 = v1 v2.
    bool on_curve;
    const T diff = z_.u() * w_.u() - z_.v() * w_.v();
    if constexpr (ScalarTraits<T>::exact) {
      on_curve = is_zero(diff);
    } else {
      const double nz = std::hypot(std::abs(z_.u()), std::abs(z_.v()));
      const double nw = std::hypot(std::abs(w_.u()), std::abs(w_.v()));
      on_curve = std::abs(diff) <= kProjectiveTol * nz * nw;
    }
    if (on_curve) throw DomainError("OmegaPoint: zw = 1 (or (0,inf)/(inf,0)) is excluded");
  }
  const BasicSpherePoint<T>& z() const { return z_; }
  const BasicSpherePoint<T>& w() const { return w_; }

 private:
  BasicSpherePoint<T> z_;
  BasicSpherePoint<T> w_;
};

using GPoint = BasicGPoint<Complex>;
using QGPoint = BasicGPoint<QComplex>;
using OmegaPoint = BasicOmegaPoint<Complex>;
using QOmegaPoint = BasicOmegaPoint<QComplex>;

template <class T>
BasicSpherePoint<T> moebius_apply(const BasicMoebius<T>& m, const BasicSpherePoint<T>& p) {
  return m.apply(p);
}

/// (z, w) -> (gamma(z), gamma(w)).
template <class T>
BasicGPoint<T> gamma_hat(const BasicMoebius<T>& m, const BasicGPoint<T>& p) {
  return {m.apply(p.z()), m.apply(p.w())};
}

/// T_phi(z, w) = (phi(z), 1/phi(1/w)) for phi in Aut(D).
template <class T>
BasicOmegaPoint<T> t_gamma_omega(const BasicMoebius<T>& phi, const BasicOmegaPoint<T>& p) {
  if (phi.kind() != MoebiusKind::aut_disk) throw DomainError("t_gamma_omega: map is not designated Aut(D)");
  return {phi.apply(p.z()), phi.apply(p.w().reciprocal()).reciprocal()};
}

/// Psi(z, w) = (T(z), T(1/w)) with the Cayley map T(z) = i(1+z)/(1-z).
template <class T>
BasicGPoint<T> psi_omega_to_g(const BasicOmegaPoint<T>& p) {
  const auto cayley = BasicMoebius<T>::cayley();
  return {cayley.apply(p.z()), cayley.apply(p.w().reciprocal())};
}

template <class T>
BasicOmegaPoint<T> psi_g_to_omega(const BasicGPoint<T>& p) {
  const auto inv = BasicMoebius<T>::cayley().inverse();
  return {inv.apply(p.z()), inv.apply(p.w()).reciprocal()};
}

/// (z, w) -> (1/(z-w), (z+w)/(z-w), zw/(z-w)); finite points only.
template <class T>
std::array<T, 3> danielewski_chart(const BasicGPoint<T>& p) {
  if (p.z().is_infinity() || p.w().is_infinity()) {
    throw DomainError("danielewski_chart: points at infinity are not supported");
  }
  const T z = p.z().value();
  const T w = p.w().value();
  const T diff = z - w;
  return {ScalarTraits<T>::from_int(1) / diff, (z + w) / diff, (z * w) / diff};
}

// ---- covering maps (floating point; principal logarithm) -------------------

/// log c = pi^2 / log R for the deck generator z -> c z of H -> A_R.
double annulus_deck_scale(double R);
/// pi_R(z) = exp((2i log R / pi) log((1+z)/(1-z))), D -> A_R.
Complex covering_disk_to_annulus(double R, Complex z);
/// pi_0(z) = exp(-(1+z)/(1-z)), D -> D*.
Complex covering_disk_to_punctured(Complex z);
/// exp((2i log R / pi) log(z/i)), H -> A_R.
Complex covering_half_to_annulus(double R, Complex z);
/// exp(2 pi i z), H -> D*.
Complex covering_half_to_punctured(Complex z);

enum class DeckKind { hyperbolic_scaling, parabolic_translation, elliptic_rotation };

/// Cyclic deck/Fuchsian group given by its generator.
class DeckGroup {
 public:
  /// z -> c z on H, c > 1.
  static DeckGroup hyperbolic_scaling(double c);
  /// z -> z + 1 on H.
  static DeckGroup parabolic_translation();
  /// z -> e^{2 pi i / N} z on D, N >= 2.
  static DeckGroup elliptic_rotation(int N);

  DeckKind kind() const { return kind_; }
  const MoebiusMap& generator() const { return generator_; }
  double scale() const { return scale_; }
  int order() const { return order_; }
  /// generator^k, k may be negative.
  MoebiusMap element(int k) const;

 private:
  DeckGroup(DeckKind kind, MoebiusMap gen, double scale, int order)
      : kind_(kind), generator_(std::move(gen)), scale_(scale), order_(order) {}

  DeckKind kind_;
  MoebiusMap generator_;
  double scale_;
  int order_;
};

std::string to_string(DeckKind kind);

}  // namespace wickstar

#endif  // WICKSTAR_SPHERE_HPP
