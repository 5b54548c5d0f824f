// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "oracles.hpp"
#include "wickstar/rigidity.hpp"
#include "wickstar/surface.hpp"
#include "wickstar/verify.hpp"

using namespace wickstar;
using oracle::C;
using QP = UniPoly<QComplex>;
using QB = BiPoly<QComplex>;

namespace {

struct Outcome {
  bool pass = false;
  std::string note;
};

int failures = 0;

template <class F>
void criterion(int id, const std::string& title, F&& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("raised: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (id < 10 ? " " : "") << id << "  " << title;
  if (!o.note.empty()) std::cout << "  [" << o.note << "]";
  std::cout << std::endl;
}

std::string sci(double x) {
  std::ostringstream s;
  s.precision(2);
  s << std::scientific << x;
  return s.str();
}

StarConfig deep() {
  StarConfig cfg;
  cfg.max_terms = 400;
  cfg.tol = 1e-15;
  return cfg;
}

QComplex rand_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 7);
  return QComplex::ratio(num(rng), den(rng), num(rng), den(rng));
}

QP rand_qpoly(std::mt19937_64& rng, int degree) {
  std::vector<QComplex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = rand_q(rng);
  return QP(std::move(c));
}

BiPoly<Complex> rand_bipoly(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  BiPoly<Complex> F;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j) F.add_term(i, j, C(u(rng), u(rng)));
  return F;
}

std::vector<C> rand_coeffs(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<C> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = C(u(rng), u(rng));
  return c;
}

std::string run_cli(const std::string& args) {
  std::string out;
  FILE* p = popen((std::string(WICKSTAR_CLI) + " " + args).c_str(), "r");
  if (p == nullptr) throw std::runtime_error("cannot start the CLI");
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int st = pclose(p);
  if (!WIFEXITED(st) || WEXITSTATUS(st) != 0) throw std::runtime_error("CLI exited with status " + std::to_string(st));
  return out;
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240601);

  criterion(1, "coefficient identities", [&] {
    bool ok = true;
    for (const QComplex& hv : {QComplex(1), QComplex::ratio(1, 2), QComplex(1, 1)}) {
      const QHbar h(hv);
      for (unsigned n = 0; n <= 30; ++n) ok = ok && c_n(h, n) == c_n_product(h, n);
    }
    mpz_class fact = 1;
    for (unsigned n = 0; n <= 30; ++n) {
      if (n > 0) fact *= n;
      ok = ok && c_n(QHbar(QComplex(1)), n) == QComplex(mpq_class(mpz_class(1), fact));
    }
    int rejected = 0;
    for (const QComplex& bad : {QComplex(0), QComplex(-1), QComplex::ratio(-1, 2), QComplex::ratio(-1, 3)}) {
      try {
        QHbar h(bad);
      } catch (const DomainError&) {
        ++rejected;
      }
      try {
        Hbar h(bad.to_complex());
      } catch (const DomainError&) {
        ++rejected;
      }
    }
    return Outcome{ok && rejected == 8, "n <= 30 exact; " + std::to_string(rejected) + "/8 poles rejected"};
  });

  criterion(2, "disk unit and commutator h(1-|z|^2)^2", [&] {
    // unit, exactly on the Poly path
    bool unit = true;
    const QB one = QB::constant(QComplex(1));
    for (int s = 0; s < 20; ++s) {
      QB F;
      for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) F.add_term(i, j, rand_q(rng));
      const QHbar h(QComplex::ratio(1, 2));
      unit = unit && star_disk_taylor(one, F, h, 3) == F && star_disk_taylor(F, one, h, 3) == F;
    }
    // commutator against the literal closed form
    const DiskFunction z = DiskFunction::poly(BiPoly<Complex>::z());
    const DiskFunction zb = DiskFunction::poly(BiPoly<Complex>::w());
    // the full series (1-|z|^2)^2 sum_{n>=1} n! c_n |z|^{2n-2} is reported alongside
    double worst = 0.0, series = 0.0;
    for (int s = 0; s < 100; ++s) {
      const C x = oracle::disk_point(rng, 0.8);
      for (const C hv : {C(0.5), C(1.0, 1.0)}) {
        const Hbar h(hv);
        const C comm = star_disk(zb, z, h, x, deep()).value - star_disk(z, zb, h, x, deep()).value;
        const double r2 = std::norm(x);
        worst = std::max(worst, oracle::rel(comm, hv * (1.0 - r2) * (1.0 - r2)));
        C acc = 0.0, e = 1.0;
        double p = 1.0;
        for (unsigned n = 1; n < 4000; ++n, p *= r2) {
          e *= hv * static_cast<double>(n) / (1.0 + static_cast<double>(n - 1) * hv);
          acc += e * p;
        }
        series = std::max(series, oracle::rel(comm, (1.0 - r2) * (1.0 - r2) * acc));
      }
    }
    return Outcome{unit && worst == 0.0, std::string("unit ") + (unit ? "exact" : "broken") +
                                             "; vs h(1-|z|^2)^2 max rel " + sci(worst) +
                                             "; vs full series " + sci(series)};
  });

  criterion(3, "exact associativity on {1, z, zbar, z^2, z zbar, zbar^2}, h = 1/2", [&] {
    const std::vector<std::pair<int, int>> mons = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    const QHbar h(QComplex::ratio(1, 2));
    int bad = 0, total = 0;
    for (auto a : mons)
      for (auto b : mons)
        for (auto c : mons) {
          const QB f = QB::monomial(a.first, a.second), g = QB::monomial(b.first, b.second),
                   k = QB::monomial(c.first, c.second);
          bad += !(star_disk_taylor_left_nested(f, g, k, h, 6) == star_disk_taylor_right_nested(f, g, k, h, 6));
          ++total;
        }
    return Outcome{bad == 0, std::to_string(total) + " triples, Taylor coefficients to total degree 6"};
  });

  criterion(4, "conformal invariance", [&] {
    std::uniform_real_distribution<double> th(0.0, 2.0 * oracle::pi);
    double worst = 0.0;
    for (int s = 0; s < 50; ++s) {
      const MoebiusMap phi = disk_automorphism(th(rng), oracle::disk_point(rng, 0.5));
      const DiskFunction f = DiskFunction::poly(rand_bipoly(rng, 3));
      const DiskFunction g = DiskFunction::poly(rand_bipoly(rng, 3));
      const C x = oracle::disk_point(rng, 0.7);
      const Hbar h(s % 2 == 0 ? C(0.5) : C(1.0, 1.0));
      const C px = moebius_apply(phi, SpherePoint(x)).value();
      const C lhs = star_disk(DiskFunction::pullback(f, phi), DiskFunction::pullback(g, phi), h, x, deep()).value;
      worst = std::max(worst, oracle::rel(lhs, star_disk(f, g, h, px, deep()).value));
    }
    return Outcome{worst < 1e-8, "max rel " + sci(worst)};
  });

  criterion(5, "annulus closed form and commutativity", [&] {
    const QP id = QP::identity();
    const auto s = surface_star_exact(id, id, SurfaceKind::annulus);
    // terms: c_0 w^2 + c_1 (w^2 - 1), c_1 = h
    const bool form = s.terms.size() == 2 && s.terms.at(0) == QP::monomial(2) &&
                      s.terms.at(1) == QP::monomial(2) - QP::constant(QComplex(1));
    int bad = 0;
    std::uniform_int_distribution<int> deg(0, 4);
    for (int k = 0; k < 50; ++k) {
      const QP a = rand_qpoly(rng, deg(rng)), b = rand_qpoly(rng, deg(rng));
      bad += !(surface_star_exact(a, b, SurfaceKind::annulus) == surface_star_exact(b, a, SurfaceKind::annulus));
    }
    return Outcome{form && bad == 0, std::string("closed form ") + (form ? "exact" : "differs") + "; " +
                                         std::to_string(bad) + "/50 asymmetric pairs"};
  });

  criterion(6, "punctured closed form (1+h)w^2 and commutativity", [&] {
    const QP id = QP::identity();
    const auto s = surface_star_exact(id, id, SurfaceKind::punctured);
    const bool form = s.terms.size() == 2 && s.terms.at(0) == QP::monomial(2) && s.terms.at(1) == QP::monomial(2);
    int bad = 0;
    std::uniform_int_distribution<int> deg(0, 4);
    for (int k = 0; k < 50; ++k) {
      const QP a = rand_qpoly(rng, deg(rng)), b = rand_qpoly(rng, deg(rng));
      bad += !(surface_star_exact(a, b, SurfaceKind::punctured) == surface_star_exact(b, a, SurfaceKind::punctured));
    }
    return Outcome{form && bad == 0, std::string("closed form ") + (form ? "exact" : "differs") + "; " +
                                         std::to_string(bad) + "/50 asymmetric pairs"};
  });

  criterion(7, "lift coherence; printed punctured weight is rejected", [&] {
    double ann = 0.0, pun = 0.0, printed = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 50; ++s) {
      const EntireFn g = EntireFn::polynomial(rand_coeffs(rng, 2 + s % 2));
      const EntireFn gt = EntireFn::polynomial(rand_coeffs(rng, 2));
      const C x = oracle::disk_point(rng, 0.8);
      const Hbar h(s % 2 == 0 ? C(0.5) : C(0.3, -0.2));
      const C dp = star_disk(DiskFunction::composed_p(g), DiskFunction::composed_p(gt), h, x, deep()).value;
      ann = std::max(ann, oracle::rel(star_annulus(g, gt, h, aux_p(x), deep()).value, dp));
      const C dq = star_disk(DiskFunction::composed_q(g), DiskFunction::composed_q(gt), h, x, deep()).value;
      pun = std::max(pun, oracle::rel(star_punctured(g, gt, h, aux_q(x), deep()).value, dq));
      printed = std::min(
          printed, oracle::rel(star_punctured(g, gt, h, aux_q(x), deep(), PuncturedWeight::printed).value, dq));
    }
    VerifyOptions inj;
    inj.suites = {"lift_coherence"};
    inj.ctx.inject_printed = true;
    const bool suite_rejects = run_verify(inj).checks.at(0).status == CheckStatus::fail;
    return Outcome{ann < 1e-9 && pun < 1e-9 && printed > 1e-9 && suite_rejects,
                   "annulus " + sci(ann) + ", punctured " + sci(pun) + ", printed variant min " + sci(printed)};
  });

  criterion(8, "chart and covering identities", [&] {
    double a = 0.0, b = 0.0, d = 0.0;
    std::uniform_real_distribution<double> xs(-2.0, 2.0), ys(0.1, 3.0);
    for (int s = 0; s < 100; ++s) {
      const C x = oracle::disk_point(rng, 0.8);
      const double R = s % 2 == 0 ? 2.0 : 3.0;
      a = std::max(a, oracle::rel(chart_f_R(R, covering_disk_to_annulus(R, x)), aux_p(x)));
      b = std::max(b, oracle::rel(chart_f_0(covering_disk_to_punctured(x)), aux_q(x)));
      const C zeta(xs(rng), ys(rng));
      const double c = annulus_deck_scale(R);
      d = std::max(d, std::abs(std::log(c) - oracle::pi * oracle::pi / std::log(R)));
      d = std::max(d, oracle::rel(covering_half_to_annulus(R, c * zeta), covering_half_to_annulus(R, zeta)));
    }
    return Outcome{a < 1e-10 && b < 1e-10 && d < 1e-10,
                   "f_R o pi_R " + sci(a) + ", f_0 o pi_0 " + sci(b) + ", deck " + sci(d)};
  });

  criterion(9, "Psi_{2,3} is a morphism; Psi_{R,R} = id", [&] {
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_real_distribution<double> u(-0.9, 0.9), th(0.0, 2.0 * oracle::pi);
    double worst = 0.0;
    bool ident = true;
    for (int s = 0; s < 50; ++s) {
      const AnnulusElement a(2.0, EntireFn::polynomial(rand_coeffs(rng, deg(rng))));
      const AnnulusElement b(2.0, EntireFn::polynomial(rand_coeffs(rng, deg(rng))));
      const Hbar h(s % 2 == 0 ? C(0.5) : C(1.0, 1.0));
      const C z = std::polar(std::pow(3.0, u(rng)), th(rng));
      worst = std::max(worst, oracle::rel(iso_psi(star(a, b, h), 3.0)(z), star(iso_psi(a, 3.0), iso_psi(b, 3.0), h)(z)));
      const C y = std::polar(std::pow(2.0, u(rng)), th(rng));
      ident = ident && iso_psi(a, 2.0)(y) == a(y);
    }
    return Outcome{worst < 1e-9 && ident, "max rel " + sci(worst) + (ident ? ", identity exact" : ", identity broken")};
  });

  criterion(10, "invariance predicates and witnesses", [&] {
    const auto pts = sample_g_points(rng, 100);
    const MoebiusMap scale = half_plane_automorphism(2.0, 0.0, 0.0, 1.0);
    const MoebiusMap translate = half_plane_automorphism(1.0, 1.0, 0.0, 1.0);
    double inv = 0.0, witness = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 5; ++s) {
      const EntireFn g = EntireFn::polynomial(rand_coeffs(rng, 1 + s % 3));
      inv = std::max({inv, gamma_hat_invariant(scaling_kernel(g), scale, pts, 1e-12).max_residual,
                      gamma_hat_invariant(translation_kernel(g), translate, pts, 1e-12).max_residual});
      witness = std::min({witness, gamma_hat_invariant(scaling_kernel(g), translate, pts, 1e-12).max_residual,
                          gamma_hat_invariant(translation_kernel(g), scale, pts, 1e-12).max_residual});
    }
    const GFunction zf{"z", [](const GPoint& P) { return P.z().value(); }};
    witness = std::min(witness, gamma_hat_invariant(zf, scale, pts, 1e-12).max_residual);
    return Outcome{inv < 1e-12 && witness > 1e-12, "invariant " + sci(inv) + ", weakest witness " + sci(witness)};
  });

  criterion(11, "two hyperbolic generators: dimension 1, gap >= 1e4", [&] {
    const auto r = invariant_dimension(two_hyperbolic_experiment(3, 200, 42));
    return Outcome{r.dimension == 1 && r.gap >= 1e4,
                   "dimension " + std::to_string(r.dimension) + ", gap " + (std::isfinite(r.gap) ? sci(r.gap) : "inf")};
  });

  criterion(12, "elliptic N = 2, d <= 2: indices with p - q even", [&] {
    const auto r = invariant_dimension(elliptic_experiment(2, 2, 60, 42));
    const std::vector<std::size_t> expect = {0, 2, 4, 6, 8};
    std::string got;
    for (auto k : r.invariant_indices) got += (got.empty() ? "" : ",") + std::to_string(k);
    return Outcome{r.invariant_indices == expect, "indices {" + got + "}"};
  });

  criterion(13, "obstruction at R = 2, h in {+-0.05, +-0.08i}", [&] {
    const auto r = obstruction_check(2.0, {0.05, -0.05, C(0.0, 0.08), C(0.0, -0.08)}, 3);
    const bool ab = std::abs(r.alpha) < 1e-8 && std::abs(std::abs(r.beta) - 1.0) < 1e-8;
    std::ostringstream n;
    n << to_string(r.verdict) << ", alpha " << sci(std::abs(r.alpha)) << ", beta (" << r.beta.real() << ", "
      << r.beta.imag() << ")";
    return Outcome{r.verdict == ObstructionVerdict::obstructed && ab, n.str()};
  });

  criterion(14, "Danielewski chart b^2 - 4ac = 1", [&] {
    double worst = 0.0;
    const auto pts = sample_g_points(rng, 1000);
    for (const auto& P : pts) {
      const auto abc = danielewski_chart(P);
      worst = std::max(worst, std::abs(abc[1] * abc[1] - 4.0 * abc[0] * abc[2] - 1.0));
    }
    return Outcome{worst < 1e-12, "1000 points, max " + sci(worst)};
  });

  criterion(15, "verify --seed 42 is byte-identical across runs", [&] {
    const std::string a = run_cli("verify --seed 42");
    const std::string b = run_cli("verify --seed 42");
    return Outcome{!a.empty() && a == b, std::to_string(a.size()) + " bytes"};
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion(s) failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
