#pragma once

#include <stdexcept>
#include <string>

namespace fibonomial {

/// Raised by exact_div when the divisor does not divide the dividend.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Index outside the domain of a binomial-type family (k > n and similar).
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class InvalidGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An extension class of the modified Fibonomial interpretation has the wrong size.
class ClassSizeMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The staircase class decomposition failed to partition S(n).
class ClassMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownIdentity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fibonomial
