#pragma once

#include <stdexcept>
#include <string>

namespace biperiodic {

/// Raised when inverting or dividing by an exact zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Two quadratic-extension values built over different discriminants.
class MismatchedDiscriminant : public std::invalid_argument {
 public:
  MismatchedDiscriminant()
      : std::invalid_argument("mismatched discriminant in quadratic extension") {}
};

/// Binet forms need alpha != beta, which fails exactly when ab = -4.
class BinetDegenerate : public std::domain_error {
 public:
  BinetDegenerate() : std::domain_error("ab = -4 degenerate: alpha equals beta") {}
};

// A Binet evaluation left a nonzero sqrt(D) coefficient behind. Only a
// mistranscribed formula can cause this, so it is a logic error.
class IrrationalResidue : public std::logic_error {
 public:
  explicit IrrationalResidue(const std::string& what) : std::logic_error(what) {}
};

class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace biperiodic
