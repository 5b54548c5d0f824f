#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wickstar/peschl_minda.hpp"

using namespace wickstar;
using oracle::C;
using QB = BiPoly<QComplex>;
using CB = BiPoly<Complex>;

namespace {

QComplex eval_q(const QB& F, const QComplex& z) { return F(z, z.conj()); }

std::function<C(C, C)> ext(const DiskFunction& f) {
  return [f](C z, C w) { return f.extension(z, w); };
}

}  // namespace

TEST_CASE("first derivative examples") {
  // f = z conj z at z = 1/2: (1 - 1/4) * 1/2 = 3/8.
  const DiskFunction zz = DiskFunction::poly(CB::monomial(1, 1));
  CHECK(std::abs(pm_derivative(zz, 1, 0.5) - 0.375) < 1e-15);
  CHECK(eval_q(pm_delta_poly(QB::monomial(1, 1), 1), QComplex::ratio(1, 2)) == QComplex::ratio(3, 8));

  // D^2 z = -2 conj z (1 - |z|^2).
  const QComplex z0 = QComplex::ratio(1, 3, -1, 4);
  const QComplex one(1);
  CHECK(eval_q(pm_delta_poly(QB::z(), 2), z0) * QComplex(2) == QComplex(-2) * z0.conj() * (one - z0 * z0.conj()));

  // Constants are annihilated.
  for (unsigned n = 1; n <= 5; ++n) CHECK(pm_delta_poly(QB::constant(QComplex(7)), n).is_zero());

  // conj-D^1 conj z = 1 - |z|^2.
  const DiskFunction zb = DiskFunction::poly(CB::w());
  const C z(0.2, -0.6);
  CHECK(std::abs(pm_bar_derivative(zb, 1, z) - (1.0 - std::norm(z))) < 1e-15);
}

TEST_CASE("antiholomorphic polynomials are killed by D") {
  for (int k = 0; k <= 4; ++k)
    for (unsigned n = 1; n <= 4; ++n) CHECK(pm_delta_poly(QB::monomial(0, k), n).is_zero());
}

TEST_CASE("Leibniz form agrees with the iterated recursion exactly") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> deg(0, 3), num(-3, 3);
  for (int k = 0; k < 20; ++k) {
    QB F;
    for (int j = 0; j < 4; ++j) F.add_term(deg(rng), deg(rng), QComplex(num(rng), num(rng)));
    long fact = 1;
    for (unsigned n = 1; n <= 5; ++n) {
      fact *= n;
      CHECK(pm_derivative_poly_recursive(F, n) == QComplex(fact) * pm_delta_poly(F, n));
    }
  }
}

TEST_CASE("D^{n+1} differs from D^n D^1") {
  const QB F = QB::monomial(2, 0);
  const QB lhs = QComplex(2) * pm_delta_poly(F, 2);
  const QB rhs = pm_delta_poly(pm_delta_poly(F, 1), 1);
  const QComplex z = QComplex::ratio(1, 2, 1, 3);
  CHECK(eval_q(lhs, z) != eval_q(rhs, z));
}

TEST_CASE("exact values against the sympy oracle") {
  // delta_n and conj-delta_n of z^2 conj z at 3/10 + i/5.
  const QB F = QB::monomial(2, 1);
  const QComplex z = QComplex::ratio(3, 10, 1, 5);
  CHECK(eval_q(pm_delta_poly(F, 1), z) == oracle::q(oracle::delta1_z2w));
  CHECK(eval_q(pm_delta_poly(F, 2), z) == oracle::q(oracle::delta2_z2w));
  CHECK(eval_q(pm_delta_poly(F, 3), z) == oracle::q(oracle::delta3_z2w));
  CHECK(eval_q(pm_bar_delta_poly(F, 1), z) == oracle::q(oracle::bardelta1_z2w));
  CHECK(eval_q(pm_bar_delta_poly(F, 2), z) == oracle::q(oracle::bardelta2_z2w));
  CHECK(eval_q(pm_bar_delta_poly(F, 3), z) == oracle::q(oracle::bardelta3_z2w));
}

TEST_CASE("real-valued polynomials: conj-D^n f = conj(D^n f)") {
  // a_ij = conj(a_ji)
  CB F;
  F.add_term(1, 1, 2.0);
  F.add_term(2, 0, C(0.5, 1.0));
  F.add_term(0, 2, C(0.5, -1.0));
  F.add_term(2, 1, C(0.0, 0.3));
  F.add_term(1, 2, C(0.0, -0.3));
  const DiskFunction f = DiskFunction::poly(F);
  const C z(0.35, 0.15);
  for (unsigned n = 1; n <= 4; ++n) CHECK(std::abs(pm_bar_derivative(f, n, z) - std::conj(pm_derivative(f, n, z))) < 1e-14);
}

TEST_CASE("closed forms for g o p and g o q") {
  const EntireFn id = EntireFn::identity();
  const C z(0.2, 0.3);
  const auto p0 = pm_closed_form_p(id, 0, z);
  CHECK(std::abs(p0.first - aux_p(z)) < 1e-15);
  CHECK(std::abs(p0.second - aux_p(z)) < 1e-15);

  // conj-D^1 (p) = -(1 - z^2)/(1 - |z|^2).
  CHECK(std::abs(pm_closed_form_p(id, 1, z).second + (1.0 - z * z) / (1.0 - std::norm(z))) < 1e-14);

  // q(0) = 1; g = t^2 at z = 0: D^1 = conj-D^1 = -2.
  const EntireFn sq = EntireFn::polynomial({0.0, 0.0, 1.0});
  const auto q1 = pm_closed_form_q(sq, 1, 0.0);
  CHECK(std::abs(q1.first + 2.0) < 1e-15);
  CHECK(std::abs(q1.second + 2.0) < 1e-15);
  CHECK(std::abs(q1.first * q1.second - 4.0) < 1e-15);

  // g = t at z = i/2: closed form against the definition.
  const C zi(0.0, 0.5);
  CHECK(std::abs(aux_p(zi) - C(0.0, 4.0 / 3.0)) < 1e-15);
  const DiskFunction lp = DiskFunction::composed_p(id);
  CHECK(oracle::rel(pm_closed_form_p(id, 1, zi).first, pm_derivative_definitional(lp, 1, zi)) < 1e-10);
}

TEST_CASE("closed-form products reproduce the surface weights") {
  std::mt19937_64 rng(9);
  const EntireFn g = EntireFn::polynomial({0.3, C(1.0, -0.5), 0.7, C(0.0, 0.2), 0.1});
  const EntireFn gt = EntireFn::exp(C(0.4, 0.1));
  for (int k = 0; k < 100; ++k) {
    const C z = oracle::disk_point(rng, 0.8);
    const unsigned n = static_cast<unsigned>(k % 5);
    double fact = 1.0;
    for (unsigned j = 2; j <= n; ++j) fact *= j;
    const C p = aux_p(z), q = aux_q(z);
    // D^n gt(p) conj-D^n g(p) = (p^2 - 1)^n g^(n)(p) gt^(n)(p)
    const C lp = pm_closed_form_p(gt, n, z).first * pm_closed_form_p(g, n, z).second;
    const C rp = std::pow(p * p - 1.0, static_cast<double>(n)) * g.derivative(n).eval(p).value *
                 gt.derivative(n).eval(p).value;
    CHECK(oracle::rel(lp, rp) < 1e-10);
    const C lq = pm_closed_form_q(gt, n, z).first * pm_closed_form_q(g, n, z).second;
    const C rq = std::pow(q, 2.0 * n) * g.derivative(n).eval(q).value * gt.derivative(n).eval(q).value;
    CHECK(oracle::rel(lq, rq) < 1e-10);
  }
}

TEST_CASE("all routes agree with the DFT definition") {
  std::mt19937_64 rng(12);
  CB F;
  F.add_term(2, 1, C(1.0, -0.5));
  F.add_term(0, 3, 0.25);
  F.add_term(1, 0, C(0.0, 2.0));
  const std::vector<DiskFunction> fs = {
      DiskFunction::poly(F),
      DiskFunction::composed_p(EntireFn::polynomial({0.1, 0.5, C(0.3, 0.2), -0.4, 0.2, 0.05})),
      DiskFunction::composed_q(EntireFn::polynomial({1.0, -0.5, 0.25, C(0.1, 0.1)})),
      DiskFunction::composed_p(EntireFn::exp(C(0.3, -0.2))),
      DiskFunction::pullback(DiskFunction::composed_q(EntireFn::identity()), disk_automorphism(0.5, C(0.2, 0.1))),
  };
  for (const auto& f : fs) {
    for (int k = 0; k < 20; ++k) {
      const C z = oracle::disk_point(rng, 0.6);
      double fact = 1.0;
      for (unsigned n = 1; n <= 5; ++n) {
        fact *= n;
        const C d = fact * oracle::delta(ext(f), n, z);
        const C db = fact * oracle::bar_delta(ext(f), n, z);
        CHECK(oracle::rel(pm_derivative(f, n, z), d) < 1e-8);
        CHECK(oracle::rel(pm_bar_derivative(f, n, z), db) < 1e-8);
        CHECK(oracle::rel(pm_derivative_definitional(f, n, z), d) < 1e-8);
        CHECK(oracle::rel(pm_bar_derivative_definitional(f, n, z), db) < 1e-8);
      }
    }
  }
}

TEST_CASE("scaled sequences and first-order base case") {
  const DiskFunction f = DiskFunction::composed_q(EntireFn::polynomial({0.0, 1.0, 1.0}));
  const C z(-0.3, 0.4);
  const auto a = pm_scaled_sequence(f, PmSide::holomorphic, z, 6);
  const auto b = pm_scaled_sequence(f, PmSide::holomorphic, z, 6, true);
  REQUIRE(a.size() == 7);
  for (std::size_t n = 0; n < a.size(); ++n) CHECK(oracle::rel(a[n], b[n]) < 1e-9);
  CHECK(oracle::rel(a[0], f.value(z)) < 1e-15);

  // D^1 f = (1 - |z|^2) d f, the Wirtinger derivative taken numerically.
  const double h = 1e-6;
  auto val = [&](C x) { return f.value(x); };
  const C dx = (val(z + h) - val(z - h)) / (2.0 * h);
  const C dy = (val(z + C(0, h)) - val(z - C(0, h))) / (2.0 * h);
  const C wirt = 0.5 * (dx - C(0, 1) * dy);
  CHECK(oracle::rel(pm_derivative(f, 1, z), (1.0 - std::norm(z)) * wirt) < 1e-8);
}

TEST_CASE("points off the disk are rejected") {
  const DiskFunction f = DiskFunction::poly(CB::z());
  CHECK_THROWS_AS(pm_derivative(f, 1, 1.2), DomainError);
  CHECK_THROWS_AS(pm_derivative_definitional(f, 1, C(0.0, -1.0)), DomainError);
  CHECK_THROWS_AS(f.value(2.0), DomainError);
}

TEST_CASE("truncated series report a representation limit") {
  const DiskFunction f = DiskFunction::composed_p(EntireFn::series({1.0, 1.0, 0.5}, 2.0, 0.5));
  CHECK_NOTHROW(pm_derivative(f, 2, 0.1));
  CHECK_THROWS_AS(pm_derivative(f, 3, 0.1), RepresentationError);
}
