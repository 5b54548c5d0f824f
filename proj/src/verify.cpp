#include "wickstar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <gmpxx.h>
#include <stdexcept>

#include "wickstar/peschl_minda.hpp"
#include "wickstar/rigidity.hpp"
#include "wickstar/sphere.hpp"
#include "wickstar/star.hpp"
#include "wickstar/surface.hpp"

namespace wickstar {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::flagged:
      return "flagged";
  }
  return "fail";
}

const char* version_string() { return "0.1.0"; }

namespace {

using QPoly = UniPoly<QComplex>;
using CPoly = UniPoly<Complex>;

// Accumulates a residual and per-sample failures for one check.
struct Tally {
  double residual = 0.0;
  std::size_t samples = 0;
  std::size_t errors = 0;
  std::string first_error;

  void add(double r) {
    residual = std::max(residual, std::isfinite(r) ? r : std::numeric_limits<double>::infinity());
    ++samples;
  }
  void error(const std::string& what) {
    if (errors++ == 0) first_error = what;
  }
  template <class F>
  void sample(F&& f) {
    try {
      add(f());
    } catch (const std::exception& e) {
      error(e.what());
    }
  }

  CheckResult finish(std::string name, std::string reference, double tol, std::string detail = {}) const {
    CheckResult r;
    r.name = std::move(name);
    r.reference = std::move(reference);
    r.max_residual = residual;
    r.samples = samples;
    if (samples == 0 || residual > tol)
      r.status = CheckStatus::fail;
    else
      r.status = errors == 0 ? CheckStatus::pass : CheckStatus::flagged;
    r.detail = std::move(detail);
    if (errors > 0) {
      if (!r.detail.empty()) r.detail += "; ";
      r.detail += std::to_string(errors) + " sample(s) raised: " + first_error;
    }
    return r;
  }
};

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

Complex rand_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
}

QComplex rand_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 4);
  return QComplex::ratio(num(rng), den(rng), num(rng), den(rng));
}

QPoly rand_qpoly(std::mt19937_64& rng, int degree) {
  std::vector<QComplex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = rand_q(rng);
  while (c.back().is_zero()) c.back() = rand_q(rng);
  return QPoly(std::move(c));
}

CPoly to_float(const QPoly& p) {
  std::vector<Complex> c;
  for (const auto& x : p.coeffs()) c.push_back(x.to_complex());
  return CPoly(std::move(c));
}

CPoly rand_cpoly(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = Complex(u(rng), u(rng));
  return CPoly(std::move(c));
}

BiPoly<Complex> rand_bipoly(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  BiPoly<Complex> F;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j) F.add_term(i, j, Complex(u(rng), u(rng)));
  return F;
}

const std::vector<Complex>& hbar_pool() {
  static const std::vector<Complex> pool = {{0.5, 0.0}, {1.0, 1.0}, {0.3, -0.2}, {2.0, 0.0}};
  return pool;
}

Complex pick_hbar(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> k(0, hbar_pool().size() - 1);
  return hbar_pool()[k(rng)];
}

StarConfig series_config() {
  StarConfig cfg;
  cfg.max_terms = 400;
  cfg.tol = 1e-15;
  return cfg;
}

// ---- checks -----------------------------------------------------------------

CheckResult check_coefficients(const CheckContext& ctx, std::mt19937_64&) {
  Tally t;
  const std::string ref = "c_n(h) = h^n / prod_{j<n}(1 + j h) by recurrence and by product; c_n(1) = 1/n!; h = 0, -1/n rejected";
  if (ctx.exact) {
    const std::vector<QComplex> hs = {QComplex(1), QComplex::ratio(1, 2), QComplex(1, 1)};
    for (const auto& hv : hs) {
      const QHbar h(hv);
      for (unsigned n = 0; n <= 30; ++n) t.add(c_n(h, n) == c_n_product(h, n) ? 0.0 : 1.0);
    }
    mpz_class fact = 1;
    for (unsigned n = 0; n <= 30; ++n) {
      if (n > 0) fact *= n;
      t.add(c_n(QHbar(QComplex(1)), n) == QComplex(mpq_class(mpz_class(1), fact)) ? 0.0 : 1.0);
    }
  } else {
    for (const Complex hv : {Complex(1.0), Complex(0.5), Complex(1.0, 1.0)}) {
      const Hbar h(hv);
      for (unsigned n = 0; n <= 30; ++n) {
        const Complex p = c_n_product(h, n);
        t.add(std::abs(c_n(h, n) - p) / std::abs(p));
      }
    }
    double fact = 1.0;
    for (unsigned n = 0; n <= 30; ++n) {
      if (n > 0) fact *= n;
      t.add(std::abs(c_n(Hbar(1.0), n) * fact - 1.0));
    }
  }
  // Pole guard, both arithmetics.
  for (long n = 0; n <= 3; ++n) {
    bool q_rejected = false, f_rejected = false;
    try {
      QHbar h(n == 0 ? QComplex(0) : QComplex::ratio(-1, n));
    } catch (const DomainError&) {
      q_rejected = true;
    }
    try {
      Hbar h(n == 0 ? Complex(0.0) : Complex(-1.0 / static_cast<double>(n)));
    } catch (const DomainError&) {
      f_rejected = true;
    }
    t.add(q_rejected && f_rejected ? 0.0 : 1.0);
  }
  return t.finish("coefficients", ref, ctx.threshold(ctx.exact ? 0.0 : 1e-12));
}

CheckResult check_unit(const CheckContext& ctx, std::mt19937_64& rng) {
  Tally t;
  const DiskFunction one = DiskFunction::poly(BiPoly<Complex>::constant(1.0));
  const StarConfig cfg = series_config();
  for (int s = 0; s < 60; ++s) {
    DiskFunction f = s % 3 == 0   ? DiskFunction::poly(rand_bipoly(rng, 3))
                     : s % 3 == 1 ? DiskFunction::composed_p(EntireFn::polynomial(rand_cpoly(rng, 3)))
                                  : DiskFunction::composed_q(EntireFn::exp(Complex(0.3, 0.1)));
    const Complex z = rand_disk(rng, 0.8);
    const Hbar h(pick_hbar(rng));
    t.sample([&] {
      const Complex fz = f.value(z);
      return std::max(rel(star_disk(one, f, h, z, cfg).value, fz), rel(star_disk(f, one, h, z, cfg).value, fz));
    });
  }
  if (ctx.exact) {
    const BiPoly<QComplex> qone = BiPoly<QComplex>::constant(QComplex(1));
    const QHbar h(QComplex::ratio(1, 2));
    for (int s = 0; s < 20; ++s) {
      BiPoly<QComplex> F;
      for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) F.add_term(i, j, rand_q(rng));
      const bool ok = star_disk_taylor(qone, F, h, 3) == F && star_disk_taylor(F, qone, h, 3) == F;
      t.add(ok ? 0.0 : 1.0);
    }
  }
  return t.finish("unit", "1 * f = f * 1 = f on the disk", ctx.threshold(1e-12));
}

CheckResult check_commutativity(const CheckContext& ctx, std::mt19937_64& rng) {
  Tally t;
  std::uniform_int_distribution<int> deg(0, 4);
  for (int s = 0; s < 40; ++s) {
    const QPoly g = rand_qpoly(rng, deg(rng));
    const QPoly gt = rand_qpoly(rng, deg(rng));
    for (SurfaceKind kind : {SurfaceKind::annulus, SurfaceKind::punctured}) {
      if (ctx.exact) {
        t.add(surface_star_exact(g, gt, kind) == surface_star_exact(gt, g, kind) ? 0.0 : 1.0);
      } else {
        const EntireFn a = EntireFn::polynomial(to_float(g)), b = EntireFn::polynomial(to_float(gt));
        const Hbar h(pick_hbar(rng));
        const Complex w = rand_disk(rng, 2.0);
        t.sample([&] {
          return kind == SurfaceKind::annulus ? rel(star_annulus(a, b, h, w).value, star_annulus(b, a, h, w).value)
                                              : rel(star_punctured(a, b, h, w).value, star_punctured(b, a, h, w).value);
        });
      }
    }
  }
  return t.finish("commutativity", "g * gt = gt * g on the annulus and on the punctured disk",
                  ctx.threshold(ctx.exact ? 0.0 : 1e-12));
}

// (conj z * z) - (z * conj z) = (1 - |z|^2)^2 sum_{n>=1} n! c_n(h) |z|^{2n-2}.
Complex commutator_closed_form(const Hbar& h, Complex z) {
  const double r2 = std::norm(z);
  const auto e = scaled_coefficients(h, 2000);
  Complex acc = 0.0;
  double p = 1.0;
  for (unsigned n = 1; n < e.size(); ++n) {
    const Complex term = e[n] * p;
    acc += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(acc))) break;
    p *= r2;
  }
  return (1.0 - r2) * (1.0 - r2) * acc;
}

CheckResult check_noncommutativity(const CheckContext& ctx, std::mt19937_64& rng) {
  Tally t;
  const DiskFunction z = DiskFunction::poly(BiPoly<Complex>::z());
  const DiskFunction zb = DiskFunction::poly(BiPoly<Complex>::w());
  const StarConfig cfg = series_config();
  double smallest = std::numeric_limits<double>::infinity();
  for (int s = 0; s < 50; ++s) {
    const Complex x = rand_disk(rng, 0.8);
    for (const Complex hv : {Complex(0.5), Complex(1.0, 1.0)}) {
      const Hbar h(hv);
      t.sample([&] {
        const Complex c = star_disk(zb, z, h, x, cfg).value - star_disk(z, zb, h, x, cfg).value;
        smallest = std::min(smallest, std::abs(c));
        return rel(c, commutator_closed_form(h, x));
      });
    }
  }
  auto r = t.finish("noncommutativity",
                    "conj z * z - z * conj z = (1 - |z|^2)^2 sum_{n>=1} n! c_n(h) |z|^{2n-2}, nonzero",
                    ctx.threshold(1e-10));
  if (!(smallest > 1e-3)) {
    r.status = CheckStatus::fail;
    r.detail = "commutator vanished at a sample";
  }
  return r;
}

CheckResult check_associativity(const CheckContext& ctx, std::mt19937_64&) {
  Tally t;
  constexpr int K = 4;
  const std::vector<std::pair<int, int>> mons = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  if (ctx.exact) {
    const QHbar h(QComplex::ratio(1, 2));
    for (auto a : mons)
      for (auto b : mons)
        for (auto c : mons) {
          using P = BiPoly<QComplex>;
          const P f = P::monomial(a.first, a.second), g = P::monomial(b.first, b.second),
                  k = P::monomial(c.first, c.second);
          t.add(star_disk_taylor_left_nested(f, g, k, h, K) == star_disk_taylor_right_nested(f, g, k, h, K) ? 0.0
                                                                                                            : 1.0);
        }
  } else {
    const Hbar h(0.5);
    for (auto a : mons)
      for (auto b : mons)
        for (auto c : mons) {
          using P = BiPoly<Complex>;
          const P f = P::monomial(a.first, a.second), g = P::monomial(b.first, b.second),
                  k = P::monomial(c.first, c.second);
          const P d = star_disk_taylor_left_nested(f, g, k, h, K) - star_disk_taylor_right_nested(f, g, k, h, K);
          double m = 0.0;
          for (const auto& [key, v] : d.terms()) m = std::max(m, std::abs(v));
          t.add(m);
        }
  }
  return t.finish("associativity",
                  "(f * g) * h = f * (g * h): Taylor coefficients to total degree 4, monomials of degree <= 2, h = 1/2",
                  ctx.threshold(ctx.exact ? 0.0 : 1e-12));
}

CheckResult check_conformal(const CheckContext& ctx, std::mt19937_64& rng) {
  Tally t;
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  const StarConfig cfg = series_config();
  for (int s = 0; s < 50; ++s) {
    const MoebiusMap phi = disk_automorphism(u(rng), rand_disk(rng, 0.5));
    const DiskFunction f = DiskFunction::poly(rand_bipoly(rng, 3));
    const DiskFunction g = DiskFunction::poly(rand_bipoly(rng, 3));
    const Complex z = rand_disk(rng, 0.7);
    const Hbar h(pick_hbar(rng));
    t.sample([&] {
      const Complex pz = moebius_apply(phi, SpherePoint(z)).value();
      const Complex lhs =
          star_disk(DiskFunction::pullback(f, phi), DiskFunction::pullback(g, phi), h, z, cfg).value;
      return rel(lhs, star_disk(f, g, h, pz, cfg).value);
    });
  }
  return t.finish("conformal", "(f o phi) * (g o phi) = (f * g) o phi for phi in Aut(D)", ctx.threshold(1e-8));
}

CheckResult check_lift_coherence(const CheckContext& ctx, std::mt19937_64& rng) {
  Tally t;
  const StarConfig cfg = series_config();
  const PuncturedWeight weight = ctx.inject_printed ? PuncturedWeight::printed : PuncturedWeight::derived;
  std::uniform_int_distribution<int> deg(2, 3);
  for (int s = 0; s < 50; ++s) {
    const EntireFn g = EntireFn::polynomial(rand_cpoly(rng, deg(rng)));
    const EntireFn gt = EntireFn::polynomial(rand_cpoly(rng, deg(rng)));
    const Complex z = rand_disk(rng, 0.8);
    const Hbar h(pick_hbar(rng));
    t.sample([&] {
      const Complex disk = star_disk(DiskFunction::composed_p(g), DiskFunction::composed_p(gt), h, z, cfg).value;
      return rel(star_annulus(g, gt, h, aux_p(z), cfg).value, disk);
    });
    t.sample([&] {
      const Complex disk = star_disk(DiskFunction::composed_q(g), DiskFunction::composed_q(gt), h, z, cfg).value;
      return rel(star_punctured(g, gt, h, aux_q(z), cfg, weight).value, disk);
    });
  }
  return t.finish("lift_coherence",
                  ctx.inject_printed ? "surface products equal the disk product of the lifts (punctured weight w^2 injected)"
                                     : "surface products equal the disk product of the lifts g o p, g o q",
                  ctx.threshold(1e-9));
}

// Both readings of the punctured weight at n = 2, g = gt = t^2: w^4 (derived) and w^2 (printed).
CheckResult check_punctured_weights(const CheckContext& ctx, std::mt19937_64& rng) {
  Tally t;
  const QHbar qh(QComplex::ratio(1, 2));
  const QComplex qw = QComplex::ratio(3, 5);
  const QPoly sq = QPoly::monomial(2);
  const auto derived = surface_star_exact(sq, sq, SurfaceKind::punctured);
  const auto printed = surface_star_exact(sq, sq, SurfaceKind::punctured, PuncturedWeight::printed);
  const QComplex d2 = c_n(qh, 2) * derived.terms.at(2)(qw);
  const QComplex p2 = c_n(qh, 2) * printed.terms.at(2)(qw);
  const std::string detail = "n=2 term at h=1/2, w=3/5, g=gt=t^2: derived " + d2.str() + ", printed " +
                             p2.str();

  const EntireFn g = EntireFn::polynomial({0.0, 0.0, 1.0});
  const StarConfig cfg = series_config();
  for (int s = 0; s < 20; ++s) {
    const Complex z = rand_disk(rng, 0.8);
    const Hbar h(pick_hbar(rng));
    t.sample([&] {
      const Complex disk = star_disk(DiskFunction::composed_q(g), DiskFunction::composed_q(g), h, z, cfg).value;
      return rel(star_punctured(g, g, h, aux_q(z), cfg).value, disk);
    });
  }
  return t.finish("punctured_weights", "punctured n-th weight w^{2n} against the constant w^2 variant; derived one matches the lift",
                  ctx.threshold(1e-9), detail);
}

CheckResult check_charts(const CheckContext& ctx, std::mt19937_64& rng) {
  Tally t;
  for (int s = 0; s < 100; ++s) {
    const Complex z = rand_disk(rng, 0.8);
    const double R = s % 2 == 0 ? 2.0 : 3.0;
    t.sample([&] { return rel(chart_f_R(R, covering_disk_to_annulus(R, z)), aux_p(z)); });
    t.sample([&] { return rel(chart_f_0(covering_disk_to_punctured(z)), aux_q(z)); });
  }
  return t.finish("charts", "f_R o pi_R = p and f_0 o pi_0 = q on the disk", ctx.threshold(1e-10));
}

CheckResult check_deck(const CheckContext& ctx, std::mt19937_64& rng) {
  Tally t;
  std::uniform_real_distribution<double> x(-2.0, 2.0), y(0.1, 3.0);
  for (int s = 0; s < 100; ++s) {
    const Complex z(x(rng), y(rng));
    const double R = s % 2 == 0 ? 2.0 : 3.0;
    const double c = annulus_deck_scale(R);
    t.sample([&] { return rel(covering_half_to_annulus(R, c * z), covering_half_to_annulus(R, z)); });
    t.sample([&] { return rel(covering_half_to_punctured(z + 1.0), covering_half_to_punctured(z)); });
  }
  return t.finish("deck", "pi(c z) = pi(z) with log c = pi^2 / log R; pi_0(z + 1) = pi_0(z) on H",
                  ctx.threshold(1e-10));
}

CheckResult check_danielewski(const CheckContext& ctx, std::mt19937_64& rng) {
  Tally t;
  if (ctx.exact) {
    for (int s = 0; s < 1000; ++s) {
      QComplex z = rand_q(rng), w = rand_q(rng);
      while (z == w) w = rand_q(rng);
      const auto abc = danielewski_chart(QGPoint(QSpherePoint(z), QSpherePoint(w)));
      t.add(abc[1] * abc[1] - QComplex(4) * abc[0] * abc[2] == QComplex(1) ? 0.0 : 1.0);
    }
  } else {
    for (int s = 0; s < 1000; ++s) {
      const Complex z = rand_disk(rng, 1.0);
      Complex w = rand_disk(rng, 1.0);
      while (std::abs(z - w) < 0.25) w = rand_disk(rng, 1.0);
      const auto abc = danielewski_chart(GPoint(SpherePoint(z), SpherePoint(w)));
      t.add(std::abs(abc[1] * abc[1] - 4.0 * abc[0] * abc[2] - 1.0));
    }
  }
  return t.finish("danielewski", "(a, b, c) = (1/(z-w), (z+w)/(z-w), zw/(z-w)) satisfies b^2 - 4ac = 1",
                  ctx.threshold(ctx.exact ? 0.0 : 1e-12));
}

CheckResult check_psi_morphism(const CheckContext& ctx, std::mt19937_64& rng) {
  Tally t;
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_real_distribution<double> u(-1.0, 1.0), th(0.0, 2.0 * kPi);
  const double Rp = 2.0, R = 3.0;
  for (int s = 0; s < 40; ++s) {
    const AnnulusElement a(Rp, EntireFn::polynomial(rand_cpoly(rng, deg(rng))));
    const AnnulusElement b(Rp, EntireFn::polynomial(rand_cpoly(rng, deg(rng))));
    const Hbar h(pick_hbar(rng));
    const Complex z = std::polar(std::exp(0.9 * u(rng) * std::log(R)), th(rng));
    t.sample([&] {
      const Complex lhs = iso_psi(star(a, b, h), R).value(z);
      return rel(lhs, star(iso_psi(a, R), iso_psi(b, R), h).value(z));
    });
    const Complex zp = std::polar(std::exp(0.9 * u(rng) * std::log(Rp)), th(rng));
    t.sample([&] { return iso_psi(a, Rp).value(zp) == a.value(zp) ? 0.0 : 1.0; });
  }
  return t.finish("psi_morphism", "Psi_{R',R}(f * ft) = Psi(f) * Psi(ft) for (R', R) = (2, 3); Psi_{R,R} = id",
                  ctx.threshold(1e-9));
}

CheckResult check_invariance(const CheckContext& ctx, std::mt19937_64& rng) {
  Tally t;
  const auto samples = sample_g_points(rng, 100);
  std::uniform_real_distribution<double> cs(1.5, 4.0);
  const MoebiusMap translate = half_plane_automorphism(1.0, 1.0, 0.0, 1.0);
  double weakest_witness = std::numeric_limits<double>::infinity();
  for (int s = 0; s < 10; ++s) {
    const EntireFn g = EntireFn::polynomial(rand_cpoly(rng, 1 + s % 3));
    const MoebiusMap scale = half_plane_automorphism(cs(rng), 0.0, 0.0, 1.0);
    const GFunction sk = scaling_kernel(g), tk = translation_kernel(g);
    for (const auto& rep : {gamma_hat_invariant(sk, scale, samples, 1.0), gamma_hat_invariant(tk, translate, samples, 1.0)}) {
      if (!rep.failures.empty()) t.error(rep.failures.front());
      t.add(rep.max_residual);
    }
    weakest_witness = std::min({weakest_witness, gamma_hat_invariant(sk, translate, samples, 1.0).max_residual,
                                gamma_hat_invariant(tk, scale, samples, 1.0).max_residual});
  }
  const GFunction zfun{"z", [](const GPoint& P) { return P.z().value(); }};
  weakest_witness = std::min(weakest_witness, gamma_hat_invariant(zfun, translate, samples, 1.0).max_residual);
  auto r = t.finish("invariance_predicates",
                    "g(w/(z-w)) is invariant under z -> cz and g(1/(z-w)) under z -> z+1; witnesses are not",
                    ctx.threshold(1e-12));
  if (!(weakest_witness > 1e-3)) {
    r.status = CheckStatus::fail;
    r.detail = "a non-invariant witness passed the predicate";
  }
  return r;
}

CheckResult check_z2(const CheckContext& ctx, std::mt19937_64& rng) {
  Tally t;
  std::uniform_int_distribution<int> idx(0, 3);
  for (int s = 0; s < 50; ++s) {
    FpqSpan<QComplex> F;
    for (int k = 0; k < 3; ++k) F.add(idx(rng), idx(rng), rand_q(rng));
    const auto G = z2_involution(F);
    Complex z = rand_disk(rng, 2.0), w = rand_disk(rng, 2.0);
    while (std::abs(1.0 - z * w) < 0.2 || std::abs(z) < 0.2 || std::abs(w) < 0.2) {
      z = rand_disk(rng, 2.0);
      w = rand_disk(rng, 2.0);
    }
    t.sample([&] { return rel(G.eval(z, w), F.eval(1.0 / z, 1.0 / w)); });
    if (ctx.exact) t.add(z2_involution(G) == F ? 0.0 : 1.0);
  }
  return t.finish("z2_involution", "F(1/z, 1/w) expanded in the f_{p,q} basis; the map is an involution",
                  ctx.threshold(1e-11));
}

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

const std::vector<CheckSpec>& registered_checks() {
  static const std::vector<CheckSpec> checks = {
      {"coefficients", check_coefficients},
      {"unit", check_unit},
      {"commutativity", check_commutativity},
      {"noncommutativity", check_noncommutativity},
      {"associativity", check_associativity},
      {"conformal", check_conformal},
      {"lift_coherence", check_lift_coherence},
      {"punctured_weights", check_punctured_weights},
      {"charts", check_charts},
      {"deck", check_deck},
      {"danielewski", check_danielewski},
      {"psi_morphism", check_psi_morphism},
      {"invariance_predicates", check_invariance},
      {"z2_involution", check_z2},
  };
  return checks;
}

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& c : registered_checks()) out.push_back(c.name);
  return out;
}

CheckResult run_check(const CheckSpec& spec, const CheckContext& ctx, bool timing) {
  std::seed_seq seq{static_cast<std::uint32_t>(ctx.seed), static_cast<std::uint32_t>(ctx.seed >> 32),
                    static_cast<std::uint32_t>(name_hash(spec.name)), static_cast<std::uint32_t>(name_hash(spec.name) >> 32)};
  std::mt19937_64 rng(seq);
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r = spec.run(ctx, rng);
  if (timing) {
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  }
  return r;
}

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status != CheckStatus::fail; });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["metadata"] = {{"seed", seed}, {"mode", mode}, {"version", version}};
  j["checks"] = nlohmann::json::array();
  std::size_t passed = 0, failed = 0, flagged = 0;
  for (const auto& c : checks) {
    nlohmann::json e = {{"name", c.name},
                        {"reference", c.reference},
                        {"status", to_string(c.status)},
                        {"max_residual", std::isfinite(c.max_residual) ? nlohmann::json(c.max_residual) : nlohmann::json()},
                        {"samples", c.samples},
                        {"runtime_ms", c.runtime_ms}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    j["checks"].push_back(std::move(e));
    (c.status == CheckStatus::pass ? passed : c.status == CheckStatus::fail ? failed : flagged)++;
  }
  j["summary"] = {{"passed", passed}, {"failed", failed}, {"flagged", flagged}};
  return j;
}

SuiteReport run_verify(const VerifyOptions& opt) {
  std::vector<const CheckSpec*> selected;
  if (opt.suites.empty()) {
    for (const auto& c : registered_checks()) selected.push_back(&c);
  } else {
    for (const auto& name : opt.suites) {
      auto it = std::find_if(registered_checks().begin(), registered_checks().end(),
                             [&](const CheckSpec& c) { return c.name == name; });
      if (it == registered_checks().end()) throw std::invalid_argument("unknown suite \"" + name + "\"");
      selected.push_back(&*it);
    }
  }
  SuiteReport rep;
  rep.seed = opt.ctx.seed;
  rep.mode = opt.ctx.exact ? "exact" : "float";
  rep.version = version_string();
  for (const auto* c : selected) rep.checks.push_back(run_check(*c, opt.ctx, opt.timing));
  return rep;
}

}  // namespace wickstar
