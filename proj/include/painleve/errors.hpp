#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace painleve {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// A number-field element was expected to be rational but is not.
class IrrationalResidue : public Error {
 public:
  explicit IrrationalResidue(std::vector<std::string> coeffs)
      : Error(make_message(coeffs)), coeffs_(std::move(coeffs)) {}

  const std::vector<std::string>& coeffs() const { return coeffs_; }

 private:
  static std::string make_message(const std::vector<std::string>& c) {
    std::string m = "irrational residue: [";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) m += ", ";
      m += c[i];
    }
    return m + "]";
  }

  std::vector<std::string> coeffs_;
};

// An exact division or structural assertion failed; always an implementation bug.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class GaugeMismatch : public Error {
 public:
  using Error::Error;
};

class VariableMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace painleve
