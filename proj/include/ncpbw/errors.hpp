#pragma once

#include <stdexcept>
#include <string>

namespace ncpbw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different algebras (or an id is out of range for the
/// algebra it is used with).
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation that is undefined on the zero polynomial (degree, LH, LM).
class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& op)
      : Error(op + ": undefined for the zero polynomial") {}
};

class InvalidMonomial : public Error {
 public:
  using Error::Error;
};

}  // namespace ncpbw
