#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace gss {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  DimensionError(std::size_t lhs, std::size_t rhs)
      : Error(make_message(lhs, rhs)), lhs_(lhs), rhs_(rhs) {}

  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

 private:
  static std::string make_message(std::size_t a, std::size_t b) {
    std::ostringstream os;
    os << "dimension mismatch: " << a << " vs " << b;
    return os.str();
  }
  std::size_t lhs_, rhs_;
};

// A map was evaluated at a parameter point outside its domain of definition.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double u, double v = 0.0)
      : Error(make_message(what, u, v)), u_(u), v_(v) {}

  double u() const noexcept { return u_; }
  double v() const noexcept { return v_; }

 private:
  static std::string make_message(const std::string& what, double u, double v) {
    std::ostringstream os;
    os.precision(17);
    os << what << " at (u, v) = (" << u << ", " << v << ")";
    return os.str();
  }
  double u_, v_;
};

// The tangent plane is degenerate (W^2 <= tau_reg) or a frame cannot be built.
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ToleranceError : public Error {
 public:
  using Error::Error;
};

// Invalid user-supplied parameters; message names the violated invariant.
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace gss
