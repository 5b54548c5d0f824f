#ifndef WICKSTAR_FUNCTION_CORE_HPP
#define WICKSTAR_FUNCTION_CORE_HPP

// Entire functions with exact derivatives, and the f_{p,q} kernel family on Omega.

#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wickstar/errors.hpp"
#include "wickstar/jet.hpp"
#include "wickstar/polynomial.hpp"
#include "wickstar/scalar.hpp"

namespace wickstar {

/// Value with a rigorous absolute error bound (0 for closed forms).
struct Evaluation {
  Complex value;
  double error_bound = 0.0;
};

/// amplitude * e^{scale t}
struct ExpForm {
  Complex amplitude{1.0, 0.0};
  Complex scale{0.0, 0.0};
};

/// d^order/dt^order of sum_{k<=M} a_k t^k + tail, where |a_k| <= C / rho^k for k > M.
struct SeriesForm {
  std::vector<Complex> coeffs;  // a_0 .. a_M
  double rho = 1.0;
  double C = 0.0;
  unsigned derivative_order = 0;

  unsigned max_order() const { return static_cast<unsigned>(coeffs.size()) - 1; }
};

enum class EntireKind { polynomial, exp, series };

/// Entire function g: C -> C, the parameter of the surface algebras.
class EntireFn {
 public:
  using Form = std::variant<UniPoly<Complex>, ExpForm, SeriesForm>;

  static EntireFn polynomial(std::vector<Complex> coeffs) { return EntireFn(UniPoly<Complex>(std::move(coeffs))); }
  static EntireFn polynomial(UniPoly<Complex> p) { return EntireFn(std::move(p)); }
  static EntireFn constant(Complex c) { return polynomial(std::vector<Complex>{c}); }
  /// t -> t
  static EntireFn identity() { return polynomial(std::vector<Complex>{0.0, 1.0}); }
  static EntireFn exp(Complex scale, Complex amplitude = 1.0) { return EntireFn(ExpForm{amplitude, scale}); }
  /// Truncated Taylor series with the mandatory geometric tail contract.
  static EntireFn series(std::vector<Complex> coeffs, double rho, double C);

  EntireKind kind() const;
  const Form& form() const { return form_; }
  bool is_polynomial() const { return kind() == EntireKind::polynomial; }
  /// Throws unless the form is a polynomial.
  const UniPoly<Complex>& as_polynomial() const;

  /// Exact n-th derivative (series: shifted order, tail re-derived on evaluation).
  EntireFn derivative(unsigned n) const;
  /// Value and error bound; series inputs need |t| < rho.
  Evaluation eval(Complex t) const;
  /// g^{(n)}(t) / n!, computed without forming n!.
  Evaluation taylor_coefficient(unsigned n, Complex t) const;
  /// Highest derivative order the representation can serve (unbounded for closed forms).
  unsigned usable_derivative_order() const;
  /// Composition with a Taylor jet; exact forms only.
  Jet eval_jet(const Jet& t) const;

  std::string describe() const;

 private:
  explicit EntireFn(Form f) : form_(std::move(f)) {}
  Form form_;
};

inline EntireFn entire_derivative(const EntireFn& g, unsigned n) { return g.derivative(n); }
inline Evaluation entire_eval(const EntireFn& g, Complex t) { return g.eval(t); }

/// f_{p,q}(z, w) = z^p w^q / (1 - zw)^{max(p, q)}.
struct BasisFpq {
  int p = 0;
  int q = 0;

  /// Throws when zw = 1.
  Complex eval(Complex z, Complex w) const;
  friend bool operator<(const BasisFpq& a, const BasisFpq& b) {
    return std::pair(a.p, a.q) < std::pair(b.p, b.q);
  }
  friend bool operator==(const BasisFpq& a, const BasisFpq& b) { return a.p == b.p && a.q == b.q; }
};

inline Complex fpq_eval(const BasisFpq& b, Complex z, Complex w) { return b.eval(z, w); }

/// Finite linear combination of f_{p,q}.
template <class T>
class FpqSpan {
 public:
  using Map = std::map<std::pair<int, int>, T>;

  FpqSpan() = default;
  static FpqSpan single(int p, int q, T c = ScalarTraits<T>::from_int(1)) {
    FpqSpan s;
    s.add(p, q, std::move(c));
    return s;
  }

  void add(int p, int q, const T& c) {
    if (p < 0 || q < 0) throw std::invalid_argument("FpqSpan: negative index");
    if (wickstar::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace({p, q}, c);
    if (!inserted) {
      it->second += c;
      if (wickstar::is_zero(it->second)) terms_.erase(it);
    }
  }
  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Complex eval(Complex z, Complex w) const {
    Complex acc = 0.0;
    for (const auto& [k, c] : terms_) acc += to_complex(c) * BasisFpq{k.first, k.second}.eval(z, w);
    return acc;
  }

  friend bool operator==(const FpqSpan& a, const FpqSpan& b) { return a.terms_ == b.terms_; }
  friend FpqSpan operator+(FpqSpan a, const FpqSpan& b) {
    for (const auto& [k, c] : b.terms_) a.add(k.first, k.second, c);
    return a;
  }

 private:
  Map terms_;
};

}  // namespace wickstar

#endif  // WICKSTAR_FUNCTION_CORE_HPP
