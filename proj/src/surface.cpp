#include "wickstar/surface.hpp"

#include <cmath>

namespace wickstar {

Complex chart_f_R(double R, Complex z) {
  if (!(R > 1.0) || !std::isfinite(R)) throw DomainError("f_R: modulus R must be > 1");
  const double r = std::abs(z);
  if (!(r > 1.0 / R && r < R)) throw DomainError("f_R: point outside the open annulus 1/R < |z| < R");
  return Complex(0.0, -std::tan(kPi / (2.0 * std::log(R)) * std::log(r)));
}

Complex chart_f_0(Complex z) {
  const double r = std::abs(z);
  if (!(r > 0.0 && r < 1.0)) throw DomainError("f_0: point outside the punctured disk 0 < |z| < 1");
  return Complex(-1.0 / std::log(r), 0.0);
}

AnnulusElement::AnnulusElement(double R, EntireFn g) : R_(R), g_(std::move(g)) {
  if (!(R > 1.0) || !std::isfinite(R)) throw DomainError("AnnulusElement: modulus R must be > 1");
}

AnnulusElement transport_annulus(const EntireFn& g, double R) { return {R, g}; }
PuncturedElement transport_punctured(const EntireFn& g) { return PuncturedElement(g); }

AnnulusElement iso_psi(const AnnulusElement& e, double R) { return {R, e.g()}; }

DiskFunction lift_to_disk(const AnnulusElement& e) { return DiskFunction::composed_p(e.g()); }
DiskFunction lift_to_disk(const PuncturedElement& e) { return DiskFunction::composed_q(e.g()); }

AnnulusElement star(const AnnulusElement& a, const AnnulusElement& b, const Hbar& h) {
  if (a.R() != b.R()) throw DomainError("annulus product: factors live on different annuli");
  const auto s = surface_star_exact(a.g().as_polynomial(), b.g().as_polynomial(), SurfaceKind::annulus);
  return {a.R(), EntireFn::polynomial(s.at(h))};
}

PuncturedElement star(const PuncturedElement& a, const PuncturedElement& b, const Hbar& h, PuncturedWeight weight) {
  const auto s =
      surface_star_exact(a.g().as_polynomial(), b.g().as_polynomial(), SurfaceKind::punctured, weight);
  return PuncturedElement(EntireFn::polynomial(s.at(h)));
}

Complex fpq_eval_projective(const BasisFpq& b, const OmegaPoint& P) {
  if (b.p < 0 || b.q < 0) throw std::invalid_argument("f_{p,q}: negative index");
  const int m = std::max(b.p, b.q);
  const Complex u1 = P.z().u(), v1 = P.z().v(), u2 = P.w().u(), v2 = P.w().v();
  const Complex den = v1 * v2 - u1 * u2;
  return pow_int(u1, b.p) * pow_int(u2, b.q) * pow_int(v1, m - b.p) * pow_int(v2, m - b.q) / pow_int(den, m);
}

namespace {

// u1 v2 - u2 v1: the projective z - w.
Complex cross(const GPoint& P) { return P.z().u() * P.w().v() - P.w().u() * P.z().v(); }

}  // namespace

GFunction scaling_kernel(const EntireFn& g) {
  return {"g(w/(z-w)), g = " + g.describe(), [g](const GPoint& P) {
            return g.eval(P.w().u() * P.z().v() / cross(P)).value;
          }};
}

GFunction translation_kernel(const EntireFn& g) {
  return {"g(1/(z-w)), g = " + g.describe(), [g](const GPoint& P) {
            return g.eval(P.z().v() * P.w().v() / cross(P)).value;
          }};
}

GFunction fpq_on_g(int p, int q) {
  return {"f_{" + std::to_string(p) + "," + std::to_string(q) + "}", [p, q](const GPoint& P) {
            return fpq_eval_projective(BasisFpq{p, q}, psi_g_to_omega(P));
          }};
}

InvarianceReport gamma_hat_invariant(const GFunction& F, const MoebiusMap& gamma, const std::vector<GPoint>& samples,
                                     double tol) {
  InvarianceReport rep;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    try {
      const Complex a = F.eval(samples[k]);
      const Complex b = F.eval(gamma_hat(gamma, samples[k]));
      rep.max_residual = std::max(rep.max_residual, rel_residual(b, a));
      ++rep.samples;
    } catch (const std::exception& e) {
      rep.failures.push_back("sample " + std::to_string(k) + ": " + e.what());
    }
  }
  rep.pass = rep.failures.empty() && rep.samples > 0 && rep.max_residual < tol;
  return rep;
}

}  // namespace wickstar
