#include "wickstar/peschl_minda.hpp"

#include <cmath>
#include <stdexcept>

#include "wickstar/errors.hpp"

namespace wickstar {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double binom(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (unsigned j = 1; j <= k; ++j) r = r * static_cast<double>(n - k + j) / static_cast<double>(j);
  return r;
}

double factorial(unsigned n) {
  double r = 1.0;
  for (unsigned j = 2; j <= n; ++j) r *= j;
  return r;
}

Complex mob(const MoebiusMap& m, Complex z) { return (m.a() * z + m.b()) / (m.c() * z + m.d()); }

Jet mob(const MoebiusMap& m, const Jet& z) { return (m.a() * z + m.b()) / (m.c() * z + m.d()); }

// w -> conj(phi(conj w)): the map acting on the second slot of a pullback.
MoebiusMap second_slot_map(const MoebiusMap& phi) { return phi.conjugate_coefficients().as_general(); }

// T_z(u) = (z + u)/(1 + conj(z) u) as a jet in u.
Jet recentring_jet(Complex z, unsigned order) {
  const Jet u = Jet::variable(order, 0.0);
  return (u + z) / (std::conj(z) * u + 1.0);
}

// Partial derivatives d_slot^m F at (z, w) for m = 0 .. top.
std::vector<Complex> slot_derivatives(const BiPoly<Complex>& F, Slot slot, Complex z, Complex w, unsigned top) {
  std::vector<Complex> out;
  BiPoly<Complex> d = F;
  for (unsigned m = 0; m <= top; ++m) {
    out.push_back(d.eval_complex(z, w));
    d = d.wirtinger(slot);
  }
  return out;
}

// delta_n at a point from the Leibniz form, n = 0 .. N.
std::vector<Complex> poly_sequence(const BiPoly<Complex>& F, PmSide side, Complex z, unsigned N) {
  const Slot slot = side == PmSide::holomorphic ? Slot::z : Slot::w;
  const Complex w = std::conj(z);
  const int deg = F.degree(slot);
  const unsigned top = deg < 0 ? 0U : static_cast<unsigned>(deg);
  const std::vector<Complex> d = slot_derivatives(F, slot, z, w, top);
  const Complex s = 1.0 - z * w;
  const Complex other = side == PmSide::holomorphic ? -w : -z;
  std::vector<Complex> out(N + 1, 0.0);
  out[0] = d[0];
  for (unsigned n = 1; n <= N; ++n) {
    Complex acc = 0.0;
    const unsigned mtop = std::min(n, top);
    for (unsigned m = 1; m <= mtop; ++m) {
      acc += binom(n - 1, m - 1) / factorial(m) * pow_int(s, m) * pow_int(other, n - m) * d[m];
    }
    out[n] = acc;
  }
  return out;
}

// delta_n from the closed forms on g o p and g o q.
std::vector<Complex> composite_sequence(const EntireFn& g, bool on_p, PmSide side, Complex z, unsigned N) {
  const Complex zb = std::conj(z);
  const double s = 1.0 - std::norm(z);
  Complex ratio;
  Complex t;
  if (on_p) {
    t = aux_p(z);
    ratio = side == PmSide::holomorphic ? (1.0 - zb * zb) / s : -(1.0 - z * z) / s;
  } else {
    t = aux_q(z);
    ratio = side == PmSide::holomorphic ? -(1.0 - zb) * (1.0 - zb) / s : -(1.0 - z) * (1.0 - z) / s;
  }
  const unsigned top = std::min(N, g.usable_derivative_order());
  std::vector<Complex> out;
  out.reserve(top + 1);
  Complex r_pow = 1.0;
  for (unsigned n = 0; n <= top; ++n) {
    out.push_back(r_pow * g.taylor_coefficient(n, t).value);
    r_pow *= ratio;
  }
  return out;
}

std::vector<Complex> jet_sequence(const DiskFunction& f, PmSide side, Complex z, unsigned N) {
  const Jet T = recentring_jet(side == PmSide::holomorphic ? z : std::conj(z), N);
  const Jet fixed_z(N, z);
  const Jet fixed_w(N, std::conj(z));
  const Jet j = side == PmSide::holomorphic ? f.extension_jet(T, fixed_w) : f.extension_jet(fixed_z, T);
  return j.coeffs();
}

}  // namespace

void require_disk_point(Complex z, const char* where) {
  if (!(std::abs(z) < 1.0)) throw DomainError(std::string(where) + ": point must satisfy |z| < 1");
}

Complex aux_p(Complex z) {
  require_disk_point(z, "p");
  return (z - std::conj(z)) / (1.0 - std::norm(z));
}

Complex aux_q(Complex z) {
  require_disk_point(z, "q");
  return std::norm(1.0 - z) / (1.0 - std::norm(z));
}

Complex aux_p_ext(Complex z, Complex w) { return (z - w) / (1.0 - z * w); }
Complex aux_q_ext(Complex z, Complex w) { return (1.0 - z) * (1.0 - w) / (1.0 - z * w); }

DiskFunction DiskFunction::pullback(const DiskFunction& inner, const MoebiusMap& phi) {
  if (phi.kind() != MoebiusKind::aut_disk) throw DomainError("pullback: map is not designated Aut(D)");
  if (const auto* p = std::get_if<disk::Poly>(&inner.v_); p && phi.b() == 0.0 && phi.c() == 0.0) {
    const Complex lam = phi.a() / phi.d();
    BiPoly<Complex> out;
    for (const auto& [k, c] : p->F.terms())
      out.add_term(k.first, k.second, c * pow_int(lam, k.first) * pow_int(std::conj(lam), k.second));
    return poly(std::move(out));
  }
  return DiskFunction(disk::Pullback{std::make_shared<const DiskFunction>(inner), phi});
}

const BiPoly<Complex>& DiskFunction::as_poly() const {
  if (const auto* p = std::get_if<disk::Poly>(&v_)) return p->F;
  throw RepresentationError("DiskFunction: not a polynomial");
}

Complex DiskFunction::value(Complex z) const {
  require_disk_point(z, "DiskFunction");
  return extension(z, std::conj(z));
}

Complex DiskFunction::extension(Complex z, Complex w) const {
  return std::visit(overloaded{
                        [&](const disk::Poly& p) { return p.F.eval_complex(z, w); },
                        [&](const disk::ComposedP& c) { return c.g.eval(aux_p_ext(z, w)).value; },
                        [&](const disk::ComposedQ& c) { return c.g.eval(aux_q_ext(z, w)).value; },
                        [&](const disk::Pullback& pb) {
                          return pb.inner->extension(mob(pb.phi, z), mob(second_slot_map(pb.phi), w));
                        },
                    },
                    v_);
}

Jet DiskFunction::extension_jet(const Jet& z, const Jet& w) const {
  return std::visit(overloaded{
                        [&](const disk::Poly& p) {
                          const int dz = std::max(p.F.degree(Slot::z), 0);
                          const int dw = std::max(p.F.degree(Slot::w), 0);
                          std::vector<Jet> zp(dz + 1, Jet(z.order(), 1.0));
                          std::vector<Jet> wp(dw + 1, Jet(z.order(), 1.0));
                          for (int k = 1; k <= dz; ++k) zp[k] = zp[k - 1] * z;
                          for (int k = 1; k <= dw; ++k) wp[k] = wp[k - 1] * w;
                          Jet acc(z.order());
                          for (const auto& [k, c] : p.F.terms()) acc += c * (zp[k.first] * wp[k.second]);
                          return acc;
                        },
                        [&](const disk::ComposedP& c) { return c.g.eval_jet((z - w) / (1.0 - z * w)); },
                        [&](const disk::ComposedQ& c) {
                          return c.g.eval_jet(((1.0 - z) * (1.0 - w)) / (1.0 - z * w));
                        },
                        [&](const disk::Pullback& pb) {
                          return pb.inner->extension_jet(mob(pb.phi, z), mob(second_slot_map(pb.phi), w));
                        },
                    },
                    v_);
}

std::vector<Complex> pm_scaled_sequence(const DiskFunction& f, PmSide side, Complex z, unsigned N,
                                        bool definitional) {
  require_disk_point(z, "Peschl-Minda derivative");
  if (definitional) return jet_sequence(f, side, z, N);
  return std::visit(overloaded{
                        [&](const disk::Poly& p) { return poly_sequence(p.F, side, z, N); },
                        [&](const disk::ComposedP& c) { return composite_sequence(c.g, true, side, z, N); },
                        [&](const disk::ComposedQ& c) { return composite_sequence(c.g, false, side, z, N); },
                        [&](const disk::Pullback&) { return jet_sequence(f, side, z, N); },
                    },
                    f.variant());
}

namespace {

Complex single(const DiskFunction& f, PmSide side, unsigned n, Complex z) {
  if (n == 0) {
    require_disk_point(z, "Peschl-Minda derivative");
    return f.value(z);
  }
  const auto seq = pm_scaled_sequence(f, side, z, n);
  if (seq.size() <= n) throw RepresentationError("Peschl-Minda derivative: order exceeds the usable series order");
  return factorial(n) * seq[n];
}

Complex single_definitional(const DiskFunction& f, PmSide side, unsigned n, Complex z, unsigned jet_order) {
  require_disk_point(z, "Peschl-Minda derivative");
  if (jet_order == 0) jet_order = n + 1;
  if (jet_order < n) throw std::invalid_argument("Peschl-Minda oracle: jet order below derivative order");
  return factorial(n) * jet_sequence(f, side, z, jet_order)[n];
}

}  // namespace

Complex pm_derivative(const DiskFunction& f, unsigned n, Complex z) { return single(f, PmSide::holomorphic, n, z); }

Complex pm_bar_derivative(const DiskFunction& f, unsigned n, Complex z) {
  return single(f, PmSide::antiholomorphic, n, z);
}

Complex pm_derivative_definitional(const DiskFunction& f, unsigned n, Complex z, unsigned jet_order) {
  return single_definitional(f, PmSide::holomorphic, n, z, jet_order);
}

Complex pm_bar_derivative_definitional(const DiskFunction& f, unsigned n, Complex z, unsigned jet_order) {
  return single_definitional(f, PmSide::antiholomorphic, n, z, jet_order);
}

std::pair<Complex, Complex> pm_closed_form_p(const EntireFn& g, unsigned n, Complex z) {
  require_disk_point(z, "pm_closed_form_p");
  const double f = factorial(n);
  const auto d = composite_sequence(g, true, PmSide::holomorphic, z, n);
  const auto db = composite_sequence(g, true, PmSide::antiholomorphic, z, n);
  if (d.size() <= n) throw RepresentationError("pm_closed_form_p: order exceeds the usable series order");
  return {f * d[n], f * db[n]};
}

std::pair<Complex, Complex> pm_closed_form_q(const EntireFn& g, unsigned n, Complex z) {
  require_disk_point(z, "pm_closed_form_q");
  const double f = factorial(n);
  const auto d = composite_sequence(g, false, PmSide::holomorphic, z, n);
  const auto db = composite_sequence(g, false, PmSide::antiholomorphic, z, n);
  if (d.size() <= n) throw RepresentationError("pm_closed_form_q: order exceeds the usable series order");
  return {f * d[n], f * db[n]};
}

}  // namespace wickstar
