#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qroots {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ZeroDivisionError : public Error {
public:
  using Error::Error;
};

// g(N) vanished identically; the norm-equation reduction does not apply.
class DegenerateGError : public Error {
public:
  using Error::Error;
};

class ZeroPolynomialError : public Error {
public:
  using Error::Error;
};

class AllZeroError : public Error {
public:
  using Error::Error;
};

class ConstantTermZeroError : public Error {
public:
  using Error::Error;
};

// The requested method does not cover this input (e.g. a cubic without a
// pure imaginary root, or degree >= 4 in `solve`).
class NotSupportedError : public Error {
public:
  using Error::Error;
};

class ZeroCoefficientError : public Error {
public:
  using Error::Error;
};

class NoConvergenceError : public Error {
public:
  using Error::Error;
};

class SyntaxError : public Error {
public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace qroots
