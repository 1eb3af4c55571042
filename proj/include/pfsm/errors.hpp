#pragma once

#include <stdexcept>
#include <string>

namespace pfsm {

/// Malformed textual input (scalars, potentials, flags).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A well-formed request that the mathematics cannot honour: division by
/// zero, exact input required, singular section, unsupported extension.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace pfsm
