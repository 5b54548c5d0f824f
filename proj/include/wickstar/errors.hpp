#ifndef WICKSTAR_ERRORS_HPP
#define WICKSTAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wickstar {

/// Input outside the domain of an operation (ħ at a pole, point off the surface, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The request is well-formed but the chosen representation cannot serve it
/// (e.g. a derivative order beyond a truncated series' usable order).
class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical conditioning failure distinct from a genuine mathematical answer.
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wickstar

#endif  // WICKSTAR_ERRORS_HPP
