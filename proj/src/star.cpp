#include "wickstar/star.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace wickstar {

namespace {

void require_exact_terminating(const DiskFunction& f, const DiskFunction& g) {
  // D^n g = 0 for n >= 1 iff g is antiholomorphic; conj-D^n f = 0 iff f is holomorphic.
  const bool f_poly = f.kind() == DiskKind::poly;
  const bool g_poly = g.kind() == DiskKind::poly;
  if (!f_poly || !g_poly) throw DomainError("star_disk: exact-finite mode needs polynomial inputs");
  if (g.as_poly().degree(Slot::z) > 0 && f.as_poly().degree(Slot::w) > 0) {
    throw DomainError(
        "star_disk: exact-finite mode needs a terminating series (first factor holomorphic or second "
        "factor antiholomorphic)");
  }
}

StarResult surface_sum(const EntireFn& g, const EntireFn& gt, const Hbar& h, Complex w, const StarConfig& cfg,
                       const std::function<Complex(unsigned)>& weight) {
  const bool both_poly = g.is_polynomial() && gt.is_polynomial();
  if (cfg.mode == StarMode::exact_finite && !both_poly) {
    throw DomainError("exact-finite mode needs polynomial parameters");
  }
  unsigned last = cfg.max_terms == 0 ? 0 : cfg.max_terms - 1;
  last = std::min({last, g.usable_derivative_order(), gt.usable_derivative_order()});
  bool exhaustive = false;
  if (both_poly) {
    const int d = std::min(g.as_polynomial().degree(), gt.as_polynomial().degree());
    const unsigned top = d < 0 ? 0U : static_cast<unsigned>(d);
    if (cfg.mode == StarMode::exact_finite || top <= last) {
      last = top;
      exhaustive = true;
    }
  }
  const auto e = scaled_coefficients(h, last);
  std::vector<Complex> terms(last + 1);
  for (unsigned n = 0; n <= last; ++n) {
    terms[n] = e[n] * weight(n) * g.taylor_coefficient(n, w).value * gt.taylor_coefficient(n, w).value;
  }
  if (exhaustive) {
    StarResult r;
    for (const Complex& t : terms) r.value += t;
    r.terms_used = last + 1;
    r.converged = true;
    return r;
  }
  return sum_series(terms, cfg, false);
}

}  // namespace

StarResult sum_series(const std::vector<Complex>& terms, const StarConfig& cfg, bool exhausted_is_exact) {
  StarResult r;
  double max_partial = 0.0;
  unsigned small = 0;
  double recent = 0.0;
  const std::size_t limit = std::min<std::size_t>(terms.size(), cfg.max_terms);
  for (std::size_t n = 0; n < limit; ++n) {
    r.value += terms[n];
    max_partial = std::max(max_partial, std::abs(r.value));
    const double mag = std::abs(terms[n]);
    if (mag < cfg.tol * (1.0 + max_partial)) {
      ++small;
      recent += mag;
    } else {
      small = 0;
      recent = 0.0;
    }
    if (small == 3) {
      r.terms_used = static_cast<unsigned>(n + 1);
      r.tail_estimate = recent;
      r.converged = true;
      return r;
    }
  }
  r.terms_used = static_cast<unsigned>(limit);
  if (exhausted_is_exact && limit == terms.size()) {
    r.converged = true;
    r.tail_estimate = 0.0;
  } else {
    r.converged = false;
    r.tail_estimate = limit > 0 ? std::abs(terms[limit - 1]) : 0.0;
  }
  return r;
}

StarResult star_disk(const DiskFunction& f, const DiskFunction& g, const Hbar& h, Complex z, const StarConfig& cfg) {
  require_disk_point(z, "star_disk");
  if (cfg.mode == StarMode::exact_finite) {
    require_exact_terminating(f, g);
    StarResult r;
    r.value = f.value(z) * g.value(z);
    r.terms_used = 1;
    r.converged = true;
    return r;
  }
  const unsigned N = cfg.max_terms == 0 ? 0 : cfg.max_terms - 1;
  const auto dg = pm_scaled_sequence(g, PmSide::holomorphic, z, N, cfg.use_definitional_derivatives);
  const auto df = pm_scaled_sequence(f, PmSide::antiholomorphic, z, N, cfg.use_definitional_derivatives);
  const std::size_t len = std::min(dg.size(), df.size());
  const auto e = scaled_coefficients(h, static_cast<unsigned>(len == 0 ? 0 : len - 1));
  std::vector<Complex> terms(len);
  for (std::size_t n = 0; n < len; ++n) terms[n] = e[n] * dg[n] * df[n];
  return sum_series(terms, cfg, false);
}

StarResult star_annulus(const EntireFn& g, const EntireFn& gt, const Hbar& h, Complex w, const StarConfig& cfg) {
  const Complex base = w * w - 1.0;
  return surface_sum(g, gt, h, w, cfg, [&](unsigned n) { return pow_int(base, n); });
}

StarResult star_punctured(const EntireFn& g, const EntireFn& gt, const Hbar& h, Complex w, const StarConfig& cfg,
                          PuncturedWeight weight) {
  const Complex w2 = w * w;
  if (weight == PuncturedWeight::printed) {
    return surface_sum(g, gt, h, w, cfg, [&](unsigned n) { return n == 0 ? Complex(1.0) : w2; });
  }
  return surface_sum(g, gt, h, w, cfg, [&](unsigned n) { return pow_int(w2, n); });
}

namespace {

StarResult evaluate(const ProfileInputs& in, const Hbar& h) {
  switch (in.kind) {
    case ProductKind::disk:
      if (!in.f || !in.g) throw std::invalid_argument("star_hbar_profile: disk product needs f and g");
      return star_disk(*in.f, *in.g, h, in.point, in.cfg);
    case ProductKind::annulus:
    case ProductKind::punctured:
      if (!in.gs || !in.gts) throw std::invalid_argument("star_hbar_profile: surface product needs g and g~");
      return in.kind == ProductKind::annulus ? star_annulus(*in.gs, *in.gts, h, in.point, in.cfg)
                                             : star_punctured(*in.gs, *in.gts, h, in.point, in.cfg);
  }
  throw std::logic_error("star_hbar_profile: unknown product");
}

}  // namespace

std::vector<ProfileSample> star_hbar_profile(const ProfileInputs& in, const std::vector<Complex>& hs) {
  std::vector<ProfileSample> out;
  out.reserve(hs.size());
  for (const Complex& hv : hs) {
    ProfileSample s;
    s.hbar = hv;
    try {
      s.result = evaluate(in, Hbar(hv));
    } catch (const DomainError& e) {
      s.error = e.what();
    }
    out.push_back(std::move(s));
  }
  return out;
}

double cauchy_riemann_residual(const ProfileInputs& in, Complex h0, double step) {
  const Complex i(0.0, 1.0);
  const auto v = [&](Complex h) { return evaluate(in, Hbar(h)).value; };
  const Complex dx = (v(h0 + step) - v(h0 - step)) / (2.0 * step);
  const Complex dy = (v(h0 + i * step) - v(h0 - i * step)) / (2.0 * step);
  // Holomorphy: d/dy = i d/dx.
  return std::abs(dy - i * dx);
}

}  // namespace wickstar
