#ifndef WICKSTAR_JSON_IO_HPP
#define WICKSTAR_JSON_IO_HPP

// JSON forms of the CLI inputs and outputs.  Complex numbers are [re, im].
//
// Entire functions:
//   {"type":"poly","coeffs":[[re,im],...]}
//   {"type":"exp","scale":[re,im],"amplitude":[re,im]}     (amplitude optional)
//   {"type":"series","coeffs":[...],"rho":r,"C":c}
//   "id" | "one" as shorthands.
// Disk functions:
//   {"type":"bipoly","terms":[[i,j,[re,im]],...]}          (z^i zbar^j)
//   {"type":"composed_p","g":<entire>} | {"type":"composed_q","g":<entire>}
//   monomial strings such as "zbar", "z^2", "z*zbar", "1".

#include <json.hpp>

#include "wickstar/function_core.hpp"
#include "wickstar/peschl_minda.hpp"
#include "wickstar/star.hpp"

namespace wickstar {

using json = nlohmann::json;

/// Malformed JSON input (wrong shape, missing keys).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Complex complex_from_json(const json& j);
json complex_to_json(Complex z);

EntireFn entire_from_json(const json& j);
DiskFunction disk_from_json(const json& j);
/// "z^a*zbar^b" style monomials, optional leading numeric factor.
BiPoly<Complex> monomial_from_string(const std::string& s);

json star_result_to_json(const StarResult& r);

/// Parses text that is either JSON or a bare monomial / shorthand string.
json parse_loose(const std::string& text);

}  // namespace wickstar

#endif  // WICKSTAR_JSON_IO_HPP
