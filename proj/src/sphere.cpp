#include "wickstar/sphere.hpp"

#include <cmath>

namespace wickstar {

namespace {

void require_in_disk(Complex z, const char* where) {
  if (!(std::abs(z) < 1.0)) throw DomainError(std::string(where) + ": point must satisfy |z| < 1");
}

void require_upper_half_plane(Complex z, const char* where) {
  if (!(z.imag() > 0.0)) throw DomainError(std::string(where) + ": point must satisfy Im z > 0");
}

void require_modulus(double R, const char* where) {
  if (!(R > 1.0) || !std::isfinite(R)) throw DomainError(std::string(where) + ": modulus R must be > 1");
}

// Principal log with the branch cut rejected rather than continued.
Complex principal_log(Complex x, const char* where) {
  if (x.imag() == 0.0 && x.real() <= 0.0) {
    throw DomainError(std::string(where) + ": logarithm argument on the branch cut");
  }
  return std::log(x);
}

}  // namespace

MoebiusMap disk_automorphism(double theta, Complex a) {
  require_in_disk(a, "disk_automorphism");
  const Complex rot = std::polar(1.0, theta);
  return MoebiusMap(rot, -rot * a, -std::conj(a), Complex(1.0, 0.0), MoebiusKind::aut_disk);
}

MoebiusMap disk_rotation(double theta) { return MoebiusMap::disk_rotation(std::polar(1.0, theta)); }

MoebiusMap half_plane_automorphism(double a, double b, double c, double d) {
  return MoebiusMap(a, b, c, d, MoebiusKind::aut_half_plane);
}

FixedPointType classify(const MoebiusMap& m) {
  const Complex det = m.determinant();
  const Complex s = std::sqrt(det);
  const Complex a = m.a() / s;
  const Complex b = m.b() / s;
  const Complex c = m.c() / s;
  const Complex d = m.d() / s;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  const double eps = 1e-12 * std::max(1.0, scale);
  if (std::abs(b) <= eps && std::abs(c) <= eps && std::abs(a - d) <= eps) return FixedPointType::identity;
  const Complex tr = a + d;
  if (std::abs(tr.imag()) > eps) return FixedPointType::hyperbolic;  // loxodromic, treated as hyperbolic
  const double t = std::abs(tr.real());
  if (std::abs(t - 2.0) <= 1e-10) return FixedPointType::parabolic;
  return t > 2.0 ? FixedPointType::hyperbolic : FixedPointType::elliptic;
}

std::array<SpherePoint, 2> fixed_points(const MoebiusMap& m) {
  // c z^2 + (d - a) z - b = 0
  const Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (std::abs(c) <= 1e-14 * scale) {
    const SpherePoint inf = SpherePoint::infinity();
    if (std::abs(d - a) <= 1e-14 * scale) return {inf, inf};
    return {SpherePoint(b / (d - a)), inf};
  }
  const Complex disc = std::sqrt((d - a) * (d - a) + 4.0 * b * c);
  const Complex p = (a - d);
  // Stable root pairing.
  const Complex q = (std::real(std::conj(p) * disc) >= 0.0) ? p + disc : p - disc;
  const Complex r1 = q / (2.0 * c);
  const Complex r2 = (std::abs(q) > 0.0) ? (-2.0 * b) / q : r1;
  return {SpherePoint(r1), SpherePoint(r2)};
}

double annulus_deck_scale(double R) {
  require_modulus(R, "annulus_deck_scale");
  return std::exp(kPi * kPi / std::log(R));
}

Complex covering_disk_to_annulus(double R, Complex z) {
  require_modulus(R, "covering_disk_to_annulus");
  require_in_disk(z, "covering_disk_to_annulus");
  const Complex L = principal_log((1.0 + z) / (1.0 - z), "covering_disk_to_annulus");
  return std::exp(Complex(0.0, 2.0 * std::log(R) / kPi) * L);
}

Complex covering_disk_to_punctured(Complex z) {
  require_in_disk(z, "covering_disk_to_punctured");
  return std::exp(-(1.0 + z) / (1.0 - z));
}

Complex covering_half_to_annulus(double R, Complex z) {
  require_modulus(R, "covering_half_to_annulus");
  require_upper_half_plane(z, "covering_half_to_annulus");
  const Complex L = principal_log(z / Complex(0.0, 1.0), "covering_half_to_annulus");
  return std::exp(Complex(0.0, 2.0 * std::log(R) / kPi) * L);
}

Complex covering_half_to_punctured(Complex z) {
  require_upper_half_plane(z, "covering_half_to_punctured");
  return std::exp(Complex(0.0, 2.0 * kPi) * z);
}

DeckGroup DeckGroup::hyperbolic_scaling(double c) {
  if (!(c > 1.0) || !std::isfinite(c)) throw DomainError("DeckGroup: hyperbolic scaling needs c > 1");
  return {DeckKind::hyperbolic_scaling, half_plane_automorphism(c, 0.0, 0.0, 1.0), c, 0};
}

DeckGroup DeckGroup::parabolic_translation() {
  return {DeckKind::parabolic_translation, half_plane_automorphism(1.0, 1.0, 0.0, 1.0), 1.0, 0};
}

DeckGroup DeckGroup::elliptic_rotation(int N) {
  if (N < 2) throw DomainError("DeckGroup: elliptic rotation needs N >= 2");
  return {DeckKind::elliptic_rotation, disk_rotation(2.0 * kPi / N), 1.0, N};
}

MoebiusMap DeckGroup::element(int k) const {
  switch (kind_) {
    case DeckKind::hyperbolic_scaling:
      return half_plane_automorphism(std::pow(scale_, k), 0.0, 0.0, 1.0);
    case DeckKind::parabolic_translation:
      return half_plane_automorphism(1.0, static_cast<double>(k), 0.0, 1.0);
    case DeckKind::elliptic_rotation:
      return disk_rotation(2.0 * kPi * k / order_);
  }
  return generator_;
}

std::string to_string(DeckKind kind) {
  switch (kind) {
    case DeckKind::hyperbolic_scaling:
      return "hyperbolic-scaling";
    case DeckKind::parabolic_translation:
      return "parabolic-translation";
    case DeckKind::elliptic_rotation:
      return "elliptic-rotation";
  }
  return "unknown";
}

}  // namespace wickstar
