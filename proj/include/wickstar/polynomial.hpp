#ifndef WICKSTAR_POLYNOMIAL_HPP
#define WICKSTAR_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "wickstar/scalar.hpp"

namespace wickstar {

/// Dense univariate polynomial, ascending powers, trailing zeros trimmed.
template <class T>
class UniPoly {
 public:
  using Traits = ScalarTraits<T>;

  UniPoly() = default;
  explicit UniPoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly constant(T c) { return UniPoly(std::vector<T>{std::move(c)}); }
  /// t
  static UniPoly identity() { return UniPoly(std::vector<T>{Traits::from_int(0), Traits::from_int(1)}); }
  /// c t^k
  static UniPoly monomial(unsigned k, T c = Traits::from_int(1)) {
    std::vector<T> v(k + 1, Traits::from_int(0));
    v[k] = std::move(c);
    return UniPoly(std::move(v));
  }

  const std::vector<T>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Traits::from_int(0); }

  Complex eval_complex(Complex t) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + to_complex(*it);
    return acc;
  }
  T operator()(const T& t) const {
    T acc = Traits::from_int(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UniPoly derivative(unsigned n = 1) const {
    if (n == 0) return *this;
    if (static_cast<int>(n) > degree()) return {};
    std::vector<T> out(coeffs_.size() - n);
    for (std::size_t k = n; k < coeffs_.size(); ++k) {
      long falling = 1;
      for (unsigned j = 0; j < n; ++j) falling *= static_cast<long>(k - j);
      out[k - n] = coeffs_[k] * Traits::from_int(falling);
    }
    return UniPoly(std::move(out));
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Traits::from_int(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Traits::from_int(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, Traits::from_int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(out));
  }
  friend UniPoly operator*(const T& s, UniPoly p) {
    for (auto& c : p.coeffs_) c = s * c;
    p.trim();
    return p;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && wickstar::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

enum class Slot { z, w };

/// Sparse F(z, w) = sum a_ij z^i w^j; no zero coefficient is ever stored.
template <class T>
class BiPoly {
 public:
  using Traits = ScalarTraits<T>;
  using Key = std::pair<int, int>;
  using Map = std::map<Key, T>;

  BiPoly() = default;

  static BiPoly constant(T c) { return monomial(0, 0, std::move(c)); }
  static BiPoly monomial(int i, int j, T c = Traits::from_int(1)) {
    BiPoly p;
    p.add_term(i, j, std::move(c));
    return p;
  }
  /// z
  static BiPoly z() { return monomial(1, 0); }
  /// w (the conj z slot on the disk diagonal)
  static BiPoly w() { return monomial(0, 1); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  T coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Traits::from_int(0) : it->second;
  }

  void add_term(int i, int j, const T& c) {
    if (wickstar::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (wickstar::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Highest power of z (resp. w); -1 for the zero polynomial.
  int degree(Slot s) const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, s == Slot::z ? k.first : k.second);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
  }
  /// Lowest total degree among stored terms; -1 for the zero polynomial.
  int min_total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = (d < 0) ? k.first + k.second : std::min(d, k.first + k.second);
    return d;
  }

  /// Evaluation at floating-point arguments, whatever the coefficient field.
  Complex eval_complex(Complex z, Complex w) const {
    Complex acc = 0.0;
    for (const auto& [k, c] : terms_) acc += to_complex(c) * pow_int(z, k.first) * pow_int(w, k.second);
    return acc;
  }
  T operator()(const T& z, const T& w) const {
    T acc = Traits::from_int(0);
    for (const auto& [k, c] : terms_) acc += c * pow_int(z, k.first) * pow_int(w, k.second);
    return acc;
  }
  /// Value F(z, conj z) on the disk diagonal.
  T on_diagonal(const T& z) const { return (*this)(z, conj_of(z)); }

  /// Formal partial derivative in the chosen slot.
  BiPoly wirtinger(Slot s) const {
    BiPoly out;
    for (const auto& [k, c] : terms_) {
      const int e = s == Slot::z ? k.first : k.second;
      if (e == 0) continue;
      const T scaled = c * Traits::from_int(e);
      if (s == Slot::z)
        out.add_term(k.first - 1, k.second, scaled);
      else
        out.add_term(k.first, k.second - 1, scaled);
    }
    return out;
  }
  BiPoly wirtinger(Slot s, int n) const {
    BiPoly out = *this;
    for (int k = 0; k < n && !out.is_zero(); ++k) out = out.wirtinger(s);
    return out;
  }

  /// G with G(z, conj z) = conj(F(z, conj z)): swap slots, conjugate coefficients.
  BiPoly conjugate_function() const {
    BiPoly out;
    for (const auto& [k, c] : terms_) out.add_term(k.second, k.first, conj_of(c));
    return out;
  }

  /// Terms of total degree <= max_degree.
  BiPoly truncated(int max_degree) const {
    BiPoly out;
    for (const auto& [k, c] : terms_)
      if (k.first + k.second <= max_degree) out.terms_.emplace(k, c);
    return out;
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  BiPoly operator-() const {
    BiPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
  }
  friend BiPoly operator*(const T& s, const BiPoly& p) {
    BiPoly out;
    for (const auto& [k, c] : p.terms_) out.add_term(k.first, k.second, s * c);
    return out;
  }
  /// Product keeping only terms of total degree <= max_degree.
  static BiPoly multiply_truncated(const BiPoly& a, const BiPoly& b, int max_degree) {
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        if (ka.first + ka.second + kb.first + kb.second <= max_degree)
          out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
  }
  BiPoly pow(unsigned n) const {
    BiPoly out = constant(Traits::from_int(1));
    for (unsigned k = 0; k < n; ++k) out = out * *this;
    return out;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  /// Coefficient-wise conversion to complex doubles.
  BiPoly<Complex> to_float() const {
    BiPoly<Complex> out;
    for (const auto& [k, c] : terms_) out.add_term(k.first, k.second, to_complex(c));
    return out;
  }

 private:
  Map terms_;
};

/// 1 - z w, the kernel factor shared by the Peschl-Minda recursion and f_{p,q}.
template <class T>
BiPoly<T> one_minus_zw() {
  BiPoly<T> p = BiPoly<T>::constant(ScalarTraits<T>::from_int(1));
  p.add_term(1, 1, ScalarTraits<T>::from_int(-1));
  return p;
}

}  // namespace wickstar

#endif  // WICKSTAR_POLYNOMIAL_HPP
