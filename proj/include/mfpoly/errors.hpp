#pragma once

#include <stdexcept>
#include <string>

namespace mfpoly {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A Laurent polynomial expected to collapse to a polynomial in lambda = s^2
// still has odd or negative s-powers.
class NotPolynomialInLambda : public Error {
 public:
  explicit NotPolynomialInLambda(const std::string& msg) : Error(msg) {}
};

// A coefficient expected to be real still has a nonzero imaginary part.
class NotRealValued : public Error {
 public:
  explicit NotRealValued(const std::string& msg) : Error(msg) {}
};

// Numeric evaluation of a negative s-power at s = 0.
class PoleAtZero : public Error {
 public:
  explicit PoleAtZero(const std::string& msg = "evaluation at s = 0 with negative power") : Error(msg) {}
};

// Numeric evaluation outside the admissible domain (branch point, digamma pole).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

}  // namespace mfpoly
