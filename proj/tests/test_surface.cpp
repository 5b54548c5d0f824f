#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wickstar/rigidity.hpp"
#include "wickstar/surface.hpp"

using namespace wickstar;
using oracle::C;

namespace {

C annulus_point(std::mt19937_64& rng, double R, double frac = 0.95) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), th(0.0, 2.0 * oracle::pi);
  return std::polar(std::exp(frac * u(rng) * std::log(R)), th(rng));
}

}  // namespace

TEST_CASE("chart f_R") {
  CHECK(chart_f_R(2.0, C(0.0, 1.0)) == C(0.0));
  CHECK(std::abs(chart_f_R(std::exp(1.0), std::polar(std::exp(0.5), 1.1)) - C(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(chart_f_R(2.0, 2.0 * (1.0 - 1e-9))) > 1e3);
  CHECK_THROWS_AS(chart_f_R(2.0, 2.0), DomainError);
  CHECK_THROWS_AS(chart_f_R(2.0, 0.5), DomainError);
  CHECK_THROWS_AS(chart_f_R(1.0, 1.0), DomainError);
  // values are purely imaginary
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) CHECK(chart_f_R(3.0, annulus_point(rng, 3.0)).real() == 0.0);
}

TEST_CASE("chart f_0") {
  CHECK(std::abs(chart_f_0(std::polar(std::exp(-1.0), 0.3)) - 1.0) < 1e-15);
  const C tiny = chart_f_0(std::exp(-100.0));
  CHECK(tiny.real() > 0.0);
  // exactly 1/100 at e^{-100}
  CHECK(tiny.real() == doctest::Approx(1e-2).epsilon(1e-15));
  CHECK(chart_f_0(std::exp(-200.0)).real() < 1e-2);
  CHECK_THROWS_AS(chart_f_0(0.0), DomainError);
  CHECK_THROWS_AS(chart_f_0(C(0.0, 1.0)), DomainError);
  CHECK(chart_f_0(C(0.0, -0.4)) == chart_f_0(0.4));
}

TEST_CASE("elements are radially symmetric") {
  std::mt19937_64 rng(2);
  const EntireFn g = EntireFn::polynomial({1.0, C(0.3, 0.2), 0.5, -0.1});
  const AnnulusElement a(2.0, g);
  const PuncturedElement p(EntireFn::exp(C(0.2, 0.4)));
  for (int k = 0; k < 50; ++k) {
    const C z = annulus_point(rng, 2.0);
    const C turned = z * std::polar(1.0, 0.37 * k);
    CHECK(oracle::rel(a(turned), a(z)) < 1e-13);
    const C y = oracle::disk_point(rng, 0.95);
    if (std::abs(y) < 1e-3) continue;
    CHECK(oracle::rel(p(y * std::polar(1.0, 1.3 * k)), p(y)) < 1e-13);
  }
}

TEST_CASE("transports") {
  std::mt19937_64 rng(3);
  const C kappa(2.0, -1.0);
  const EntireFn g1 = EntireFn::polynomial({0.0, 1.0, 1.0}), g2 = EntireFn::polynomial({1.0, 0.0, 0.0, 2.0});
  const C al(0.5, 0.5), be(-2.0);
  const EntireFn comb = EntireFn::polynomial({be * 1.0, al * 1.0, al * 1.0, be * 2.0});
  for (int k = 0; k < 20; ++k) {
    const C z = annulus_point(rng, 3.0);
    CHECK(transport_annulus(EntireFn::constant(kappa), 3.0)(z) == kappa);
    CHECK(transport_annulus(EntireFn::identity(), 3.0)(z) == chart_f_R(3.0, z));
    CHECK(oracle::rel(transport_annulus(comb, 3.0)(z),
                      al * transport_annulus(g1, 3.0)(z) + be * transport_annulus(g2, 3.0)(z)) < 1e-13);
    const C y = 0.05 + 0.9 * std::abs(oracle::disk_point(rng, 1.0));
    CHECK(transport_punctured(EntireFn::identity())(y) == chart_f_0(y));
    CHECK(oracle::rel(transport_punctured(comb)(y),
                      al * transport_punctured(g1)(y) + be * transport_punctured(g2)(y)) < 1e-13);
  }
  // injectivity: different g differ at some sample
  bool differs = false;
  for (double r : {0.6, 0.9, 1.2, 1.7})
    differs = differs || transport_annulus(g1, 2.0)(r) != transport_annulus(g2, 2.0)(r);
  CHECK(differs);
  CHECK_THROWS_AS(AnnulusElement(0.8, g1), DomainError);
}

TEST_CASE("Psi between annuli") {
  std::mt19937_64 rng(4);
  const AnnulusElement a(2.0, EntireFn::polynomial({0.3, 1.0, C(0.0, 0.5)}));
  const AnnulusElement id2(2.0, EntireFn::identity());
  for (int k = 0; k < 30; ++k) {
    const C z = annulus_point(rng, 2.0);
    CHECK(iso_psi(a, 2.0)(z) == a(z));
    const C y = annulus_point(rng, 5.0);
    CHECK(iso_psi(id2, 5.0)(y) == chart_f_R(5.0, y));
    CHECK(iso_psi(iso_psi(a, 3.5), 5.0)(y) == iso_psi(a, 5.0)(y));
  }
  CHECK(iso_psi(a, 5.0).R() == 5.0);
  // unital and linear through the stored parameter
  CHECK(iso_psi(AnnulusElement(2.0, EntireFn::constant(1.0)), 3.0)(1.3) == C(1.0));
}

TEST_CASE("Psi is a morphism of the products") {
  std::mt19937_64 rng(5);
  const AnnulusElement a(2.0, EntireFn::polynomial({0.2, 1.0, -0.3, 0.1}));
  const AnnulusElement b(2.0, EntireFn::polynomial({C(0.0, 1.0), 0.5, 0.4}));
  for (const C hv : {C(0.5), C(1.0, 1.0), C(-0.3, 0.2)}) {
    const Hbar h(hv);
    for (int k = 0; k < 20; ++k) {
      const C z = annulus_point(rng, 3.0);
      CHECK(oracle::rel(iso_psi(star(a, b, h), 3.0)(z), star(iso_psi(a, 3.0), iso_psi(b, 3.0), h)(z)) < 1e-9);
    }
  }
  const AnnulusElement other(3.0, EntireFn::identity());
  CHECK_THROWS_AS(star(a, other, Hbar(0.5)), DomainError);
}

TEST_CASE("lifts and covering coherence") {
  std::mt19937_64 rng(6);
  const double R = 2.5;
  const AnnulusElement id(R, EntireFn::identity());
  const PuncturedElement pid(EntireFn::identity());
  const AnnulusElement a(R, EntireFn::polynomial({1.0, C(0.5, -0.5), 0.25}));
  const PuncturedElement p(EntireFn::polynomial({C(0.0, 1.0), 0.3, 0.7}));
  for (int k = 0; k < 100; ++k) {
    const C z = oracle::disk_point(rng, 0.8);
    CHECK(oracle::rel(lift_to_disk(id).value(z), aux_p(z)) < 1e-15);
    CHECK(oracle::rel(id(covering_disk_to_annulus(R, z)), aux_p(z)) < 1e-10);
    CHECK(oracle::rel(pid(covering_disk_to_punctured(z)), aux_q(z)) < 1e-10);
    CHECK(oracle::rel(lift_to_disk(a).value(z), a(covering_disk_to_annulus(R, z))) < 1e-10);
    CHECK(oracle::rel(lift_to_disk(p).value(z), p(covering_disk_to_punctured(z))) < 1e-10);
  }
  CHECK(lift_to_disk(PuncturedElement(EntireFn::constant(3.0))).value(C(0.2, 0.1)) == C(3.0));
  CHECK(lift_to_disk(a).kind() == DiskKind::composed_p);
  CHECK(lift_to_disk(p).kind() == DiskKind::composed_q);
}

TEST_CASE("deck invariance through the half-plane model") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> x(-2.0, 2.0), y(0.2, 3.0);
  const double R = 2.0, c = annulus_deck_scale(R);
  CHECK(std::abs(std::log(c) - oracle::pi * oracle::pi / std::log(R)) < 1e-12);
  const AnnulusElement a(R, EntireFn::polynomial({0.5, 1.0, 0.3}));
  const PuncturedElement p(EntireFn::polynomial({0.0, 1.0, 1.0}));
  for (int k = 0; k < 50; ++k) {
    const C zeta(x(rng), y(rng));
    CHECK(oracle::rel(a(covering_half_to_annulus(R, c * zeta)), a(covering_half_to_annulus(R, zeta))) < 1e-9);
    CHECK(oracle::rel(p(covering_half_to_punctured(zeta + 1.0)), p(covering_half_to_punctured(zeta))) < 1e-9);
  }
}

TEST_CASE("element products") {
  const Hbar h(0.25);
  const AnnulusElement f(2.0, EntireFn::identity());
  const C z(1.3, 0.4);
  const C v = chart_f_R(2.0, z);
  CHECK(oracle::rel(star(f, f, h)(z), v * v + 0.25 * (v * v - 1.0)) < 1e-13);
  const PuncturedElement q(EntireFn::identity());
  const C y(0.3, -0.2);
  const C u = chart_f_0(y);
  CHECK(oracle::rel(star(q, q, h)(y), 1.25 * u * u) < 1e-13);
  const PuncturedElement sq(EntireFn::polynomial({0.0, 0.0, 1.0}));
  const C d = star(sq, sq, h)(y), pr = star(sq, sq, h, PuncturedWeight::printed)(y);
  CHECK(std::abs(d - pr) > 1e-6);
  CHECK_THROWS_AS(star(AnnulusElement(2.0, EntireFn::exp(1.0)), f, h), RepresentationError);
}

TEST_CASE("Z2 involution") {
  using S = FpqSpan<QComplex>;
  CHECK(z2_involution(S::single(0, 0, QComplex(1))) == S::single(0, 0, QComplex(1)));
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> idx(0, 4), num(-4, 4);
  for (int k = 0; k < 50; ++k) {
    S F;
    for (int j = 0; j < 4; ++j) F.add(idx(rng), idx(rng), QComplex(num(rng), num(rng)));
    CHECK(z2_involution(z2_involution(F)) == F);
  }
  const auto f11 = z2_involution(FpqSpan<Complex>::single(1, 1, 1.0));
  for (int k = 0; k < 50; ++k) {
    C z = oracle::disk_point(rng, 3.0), w = oracle::disk_point(rng, 3.0);
    if (std::abs(1.0 - z * w) < 0.1 || std::abs(z) < 0.1 || std::abs(w) < 0.1) continue;
    const C direct = (1.0 / (z * w)) / (1.0 - 1.0 / (z * w));
    CHECK(oracle::rel(f11.eval(z, w), direct) < 1e-12);
  }
}

TEST_CASE("f_{p,q} on G and in projective form") {
  std::mt19937_64 rng(9);
  const auto pts = sample_g_points(rng, 40);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      const GFunction F = fpq_on_g(p, q);
      for (const auto& P : pts) {
        const OmegaPoint o = psi_g_to_omega(P);
        if (o.z().is_infinity() || o.w().is_infinity()) continue;
        CHECK(oracle::rel(F.eval(P), fpq_eval(BasisFpq{p, q}, o.z().value(), o.w().value())) < 1e-10);
        CHECK(oracle::rel(fpq_eval_projective(BasisFpq{p, q}, o), F.eval(P)) < 1e-10);
      }
    }
  // (0, inf) is removed but (inf, inf) is a point of Omega: f_{1,1} = zw/(1-zw) -> -1
  const OmegaPoint inf(SpherePoint::infinity(), SpherePoint::infinity());
  CHECK(std::abs(fpq_eval_projective(BasisFpq{1, 1}, inf) + 1.0) < 1e-15);
}

TEST_CASE("invariance predicates") {
  std::mt19937_64 rng(10);
  const auto pts = sample_g_points(rng, 100);
  const EntireFn g = EntireFn::polynomial({0.2, 1.0, C(0.5, 0.1)});
  const MoebiusMap scale = half_plane_automorphism(2.0, 0.0, 0.0, 1.0);
  const MoebiusMap translate = half_plane_automorphism(1.0, 1.0, 0.0, 1.0);
  CHECK(gamma_hat_invariant(scaling_kernel(g), scale, pts, 1e-12).pass);
  CHECK(gamma_hat_invariant(translation_kernel(g), translate, pts, 1e-12).pass);
  CHECK_FALSE(gamma_hat_invariant(scaling_kernel(g), translate, pts, 1e-12).pass);
  CHECK_FALSE(gamma_hat_invariant(translation_kernel(g), scale, pts, 1e-12).pass);

  const GFunction zf{"z", [](const GPoint& P) { return P.z().value(); }};
  const auto rep = gamma_hat_invariant(zf, scale, pts, 1e-12);
  CHECK_FALSE(rep.pass);
  CHECK(rep.samples == pts.size());
  CHECK(rep.max_residual > 0.1);

  // samples landing on a pole are reported, not fatal
  const GFunction bad{"pole", [](const GPoint& P) -> C {
                        if (std::abs(P.z().value()) < 0.5) throw DomainError("pole");
                        return 1.0;
                      }};
  const auto br = gamma_hat_invariant(bad, scale, pts, 1e-12);
  CHECK_FALSE(br.failures.empty());
}
