#ifndef WRDPM_ERRORS_HPP
#define WRDPM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wrdpm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A value violates a structural invariant (asymmetry, negative weight, bad shape...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A distribution parameter lies outside its family's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to be positive semidefinite has an eigenvalue below tolerance.
class NotPsdError : public Error {
 public:
  NotPsdError(const std::string& what, double eigenvalue) : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

}  // namespace wrdpm

#endif  // WRDPM_ERRORS_HPP
