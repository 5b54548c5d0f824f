#include "wickstar/json_io.hpp"

#include <cctype>

namespace wickstar {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<Complex> complex_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& c : j) out.push_back(complex_from_json(c));
  return out;
}

}  // namespace

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw InputError("complex numbers are [re, im] pairs, got " + j.dump());
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

EntireFn entire_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "id" || s == "t") return EntireFn::identity();
    if (s == "one" || s == "1") return EntireFn::constant(1.0);
    throw InputError("unknown entire-function shorthand \"" + s + "\"");
  }
  const std::string type = require(j, "type").get<std::string>();
  if (type == "poly") return EntireFn::polynomial(complex_list(require(j, "coeffs"), "coeffs"));
  if (type == "exp") {
    const Complex amp = j.contains("amplitude") ? complex_from_json(j.at("amplitude")) : Complex(1.0);
    return EntireFn::exp(complex_from_json(require(j, "scale")), amp);
  }
  if (type == "series") {
    return EntireFn::series(complex_list(require(j, "coeffs"), "coeffs"), number(require(j, "rho"), "rho"),
                            number(require(j, "C"), "C"));
  }
  throw InputError("unknown entire-function type \"" + type + "\"");
}

BiPoly<Complex> monomial_from_string(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InputError("empty monomial");
  Complex coef = 1.0;
  int a = 0, b = 0;
  std::size_t pos = 0;
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw InputError("expected an integer in \"" + text + "\"");
    return std::stoi(s.substr(start, pos - start));
  };
  while (pos < s.size()) {
    if (s.compare(pos, 4, "zbar") == 0 || s.compare(pos, 5, "conjz") == 0) {
      pos += s[pos] == 'z' ? 4 : 5;
      int e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = read_int();
      }
      b += e;
    } else if (s[pos] == 'z') {
      ++pos;
      int e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = read_int();
      }
      a += e;
    } else if (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' || s[pos] == '-') {
      std::size_t used = 0;
      coef *= std::stod(s.substr(pos), &used);
      pos += used;
    } else {
      throw InputError("cannot parse monomial \"" + text + "\"");
    }
    if (pos < s.size()) {
      if (s[pos] != '*') throw InputError("cannot parse monomial \"" + text + "\"");
      ++pos;
    }
  }
  return BiPoly<Complex>::monomial(a, b, coef);
}

DiskFunction disk_from_json(const json& j) {
  if (j.is_string()) return DiskFunction::poly(monomial_from_string(j.get<std::string>()));
  const std::string type = require(j, "type").get<std::string>();
  if (type == "bipoly") {
    BiPoly<Complex> F;
    for (const auto& t : require(j, "terms")) {
      if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer()) {
        throw InputError("bipoly terms are [i, j, [re, im]]");
      }
      const int i = t[0].get<int>(), k = t[1].get<int>();
      if (i < 0 || k < 0) throw InputError("bipoly exponents must be non-negative");
      F.add_term(i, k, complex_from_json(t[2]));
    }
    return DiskFunction::poly(std::move(F));
  }
  if (type == "poly") {
    // Holomorphic polynomial in z.
    BiPoly<Complex> F;
    const auto c = complex_list(require(j, "coeffs"), "coeffs");
    for (std::size_t k = 0; k < c.size(); ++k) F.add_term(static_cast<int>(k), 0, c[k]);
    return DiskFunction::poly(std::move(F));
  }
  if (type == "composed_p") return DiskFunction::composed_p(entire_from_json(require(j, "g")));
  if (type == "composed_q") return DiskFunction::composed_q(entire_from_json(require(j, "g")));
  throw InputError("unknown disk-function type \"" + type + "\"");
}

json star_result_to_json(const StarResult& r) {
  return {{"value", complex_to_json(r.value)},
          {"terms_used", r.terms_used},
          {"tail_estimate", r.tail_estimate},
          {"converged", r.converged}};
}

json parse_loose(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[' || text[first] == '"')) {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("invalid JSON: ") + e.what());
    }
  }
  return json(text);
}

}  // namespace wickstar
