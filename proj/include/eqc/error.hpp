#pragma once

#include <stdexcept>
#include <string>

namespace eqc {

// Failure categories surfaced by the library. The CLI maps them onto
// stable exit codes; library callers can switch on kind() to tell an
// expected domain refusal from a broken invariant.
enum class ErrorKind {
  DimensionMismatch,   // operands live in different ambient dimensions
  NonOrthogonal,       // linear part fails the orthogonality test
  AffinelyDependent,   // operation needs a full-dimensional simplex
  Collinear,           // classical triangle center undefined
  NoAffineCenter,      // conic has its pole on the line at infinity
  AnchorNotFixed,      // anchor point moved by a symmetry of the base
  OutOfDomain,         // partial center evaluated off its orbit
  NotEquifacetal,      // coincidence check needs an equifacetal simplex
  EquifacetalInput,    // certificate construction needs a non-equifacetal one
  Parse,               // malformed input file or argument
  Unsupported,         // parameter outside the supported range
  InvariantViolation,  // internal consistency failure; never swallowed
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace eqc
