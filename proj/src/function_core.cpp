#include "wickstar/function_core.hpp"

#include <cmath>
#include <sstream>
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

// k (k-1) ... (k-d+1) as a double.
double falling(unsigned k, unsigned d) {
  double r = 1.0;
  for (unsigned j = 0; j < d; ++j) r *= static_cast<double>(k - j);
  return r;
}

double binom(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (unsigned j = 1; j <= k; ++j) r = r * static_cast<double>(n - k + j) / static_cast<double>(j);
  return r;
}

// Sum over k > M of C rho^{-k} k^(d) |t|^{k-d}
//   = C rho^{-d} (d/dx)^d [x^{M+1} / (1 - x)],  x = |t| / rho.
double series_tail(const SeriesForm& s, double abs_t) {
  if (s.C == 0.0) return 0.0;
  const unsigned M = s.max_order();
  const unsigned d = s.derivative_order;
  const double x = abs_t / s.rho;
  double acc = 0.0;
  double fact = 1.0;  // (d - j)!
  for (unsigned j = 1; j <= d; ++j) fact *= j;
  for (unsigned j = 0; j <= d; ++j) {
    if (j > 0) fact /= static_cast<double>(d - j + 1);
    const double term = binom(d, j) * falling(M + 1, j) * std::pow(x, static_cast<double>(M + 1 - j)) * fact /
                        std::pow(1.0 - x, static_cast<double>(d - j + 1));
    acc += term;
  }
  return s.C * std::pow(s.rho, -static_cast<double>(d)) * acc;
}

}  // namespace

EntireFn EntireFn::series(std::vector<Complex> coeffs, double rho, double C) {
  if (coeffs.empty()) throw std::invalid_argument("EntireFn::series: at least one coefficient required");
  if (!(rho > 0.0) || !(C >= 0.0)) throw std::invalid_argument("EntireFn::series: need rho > 0 and C >= 0");
  return EntireFn(SeriesForm{std::move(coeffs), rho, C, 0});
}

EntireKind EntireFn::kind() const {
  switch (form_.index()) {
    case 0:
      return EntireKind::polynomial;
    case 1:
      return EntireKind::exp;
    default:
      return EntireKind::series;
  }
}

const UniPoly<Complex>& EntireFn::as_polynomial() const {
  if (const auto* p = std::get_if<UniPoly<Complex>>(&form_)) return *p;
  throw RepresentationError("EntireFn: not a polynomial");
}

EntireFn EntireFn::derivative(unsigned n) const {
  return std::visit(overloaded{
                        [&](const UniPoly<Complex>& p) { return EntireFn(p.derivative(n)); },
                        [&](const ExpForm& e) {
                          return EntireFn(ExpForm{e.amplitude * pow_int(e.scale, n), e.scale});
                        },
                        [&](const SeriesForm& s) {
                          const unsigned order = s.derivative_order + n;
                          if (order > s.max_order()) {
                            std::ostringstream msg;
                            msg << "EntireFn: derivative of order " << order
                                << " needs a truncated series of order >= " << order << ", have "
                                << s.max_order();
                            throw RepresentationError(msg.str());
                          }
                          SeriesForm out = s;
                          out.derivative_order = order;
                          return EntireFn(std::move(out));
                        },
                    },
                    form_);
}

Evaluation EntireFn::eval(Complex t) const {
  return std::visit(overloaded{
                        [&](const UniPoly<Complex>& p) { return Evaluation{p.eval_complex(t), 0.0}; },
                        [&](const ExpForm& e) { return Evaluation{e.amplitude * std::exp(e.scale * t), 0.0}; },
                        [&](const SeriesForm& s) {
                          const double r = std::abs(t);
                          if (!(r < s.rho)) {
                            throw DomainError("EntireFn: |t| outside the tail-bound disk of the truncated series");
                          }
                          const unsigned d = s.derivative_order;
                          Complex acc = 0.0;
                          for (unsigned k = s.max_order() + 1; k-- > d;) acc = acc * t + s.coeffs[k] * falling(k, d);
                          return Evaluation{acc, series_tail(s, r)};
                        },
                    },
                    form_);
}

Evaluation EntireFn::taylor_coefficient(unsigned n, Complex t) const {
  return std::visit(overloaded{
                        [&](const UniPoly<Complex>& p) {
                          // sum_k binom(k, n) a_k t^{k-n}
                          Complex acc = 0.0;
                          const int deg = p.degree();
                          for (int k = deg; k >= static_cast<int>(n); --k)
                            acc = acc * t + p.coeffs()[k] * binom(static_cast<unsigned>(k), n);
                          return Evaluation{acc, 0.0};
                        },
                        [&](const ExpForm& e) {
                          Complex scale_pow = 1.0;
                          for (unsigned j = 1; j <= n; ++j) scale_pow *= e.scale / static_cast<double>(j);
                          return Evaluation{e.amplitude * scale_pow * std::exp(e.scale * t), 0.0};
                        },
                        [&](const SeriesForm&) {
                          Evaluation v = derivative(n).eval(t);
                          double fact = 1.0;
                          for (unsigned j = 2; j <= n; ++j) fact *= j;
                          return Evaluation{v.value / fact, v.error_bound / fact};
                        },
                    },
                    form_);
}

unsigned EntireFn::usable_derivative_order() const {
  if (const auto* s = std::get_if<SeriesForm>(&form_)) return s->max_order() - s->derivative_order;
  return std::numeric_limits<unsigned>::max();
}

Jet EntireFn::eval_jet(const Jet& t) const {
  return std::visit(overloaded{
                        [&](const UniPoly<Complex>& p) {
                          Jet acc(t.order());
                          const auto& c = p.coeffs();
                          for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
                          return acc;
                        },
                        [&](const ExpForm& e) { return e.amplitude * wickstar::exp(e.scale * t); },
                        [&](const SeriesForm&) -> Jet {
                          throw RepresentationError("EntireFn: jet composition needs a closed form, not a truncated series");
                        },
                    },
                    form_);
}

std::string EntireFn::describe() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const UniPoly<Complex>& p) {
                   os << "poly[";
                   for (std::size_t k = 0; k < p.coeffs().size(); ++k) os << (k ? "," : "") << p.coeffs()[k];
                   os << "]";
                 },
                 [&](const ExpForm& e) { os << e.amplitude << "*exp(" << e.scale << " t)"; },
                 [&](const SeriesForm& s) {
                   os << "series(M=" << s.max_order() << ", rho=" << s.rho << ", C=" << s.C
                      << ", d=" << s.derivative_order << ")";
                 },
             },
             form_);
  return os.str();
}

Complex BasisFpq::eval(Complex z, Complex w) const {
  if (p < 0 || q < 0) throw std::invalid_argument("f_{p,q}: negative index");
  const Complex s = 1.0 - z * w;
  if (std::abs(s) <= 1e-15) throw DomainError("f_{p,q}: zw = 1 is outside Omega");
  const int m = std::max(p, q);
  return pow_int(z, p) * pow_int(w, q) / pow_int(s, m);
}

}  // namespace wickstar
