#pragma once

#include <stdexcept>
#include <string>

namespace resumlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class DegeneratePadeSystem : public Error {
 public:
  using Error::Error;
};

/// Evaluation of a rational function at (or numerically at) a denominator root.
class PoleHit : public Error {
 public:
  using Error::Error;
};

/// The approximant has denominator roots inside the integration domain.
class ImproperApproximant : public Error {
 public:
  ImproperApproximant(int order, std::string method)
      : Error("improper approximant N=" + std::to_string(order) + " for method " + method),
        order_(order),
        method_(std::move(method)) {}

  int order() const noexcept { return order_; }
  const std::string& method() const noexcept { return method_; }

 private:
  int order_;
  std::string method_;
};

/// Quadrature levels failed to agree within the precision budget.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NotConverged : public Error {
 public:
  using Error::Error;
};

class CacheCorrupt : public Error {
 public:
  using Error::Error;
};

}  // namespace resumlab
