#ifndef ORTHOREL_ERRORS_HPP
#define ORTHOREL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orthorel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Not enough stored coefficients / moments for the requested index.
class DepthError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The caller violated an operation's precondition (e.g. wrong relation case).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rational strings, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace orthorel

#endif  // ORTHOREL_ERRORS_HPP
