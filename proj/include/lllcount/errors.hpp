#pragma once

#include <stdexcept>
#include <string>

namespace lllcount {

// Raised when an argument lies outside the domain where a formula is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when parameters are mathematically valid but outside the regime a
// bound was proven for (e.g. restricted-regime bounds with eta = 0.54).
class RegimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}

}  // namespace detail

}  // namespace lllcount
