#pragma once

#include <stdexcept>
#include <string>

namespace qq {

// Process exit codes used by the CLI. Each error class maps to one of these.
enum class ExitCode : int {
  ok = 0,
  internal = 1,
  validation = 2,
  pole = 3,
  colliding = 4,
  verify_failed = 5,
  limit = 6,
  collision = 7,
  truncation = 8,
  path_dependence = 9,
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual ExitCode exit_code() const noexcept { return ExitCode::internal; }
  virtual const char* kind() const noexcept { return "Error"; }
};

#define QQ_DECLARE_ERROR(Name, Code)                                        \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(what) {}                 \
    ExitCode exit_code() const noexcept override { return ExitCode::Code; } \
    const char* kind() const noexcept override { return #Name; }            \
  };

// A denominator binomial evaluated to zero.
QQ_DECLARE_ERROR(PoleError, pole)
// Two Y-factors at the same node and argument met during a reflection.
QQ_DECLARE_ERROR(CollidingArguments, colliding)
// Malformed input: schema, quiver shape, weights, generator names.
QQ_DECLARE_ERROR(ValidationError, validation)
// A limit or specialization needs a factorization the General form cannot give.
QQ_DECLARE_ERROR(NonFactoredLimitError, limit)
// A classical-limit coefficient is not an integer.
QQ_DECLARE_ERROR(NonIntegerLimit, limit)
// Two surviving terms land on the same Y-monomial after specialization.
QQ_DECLARE_ERROR(YCollision, collision)
// Pit position incompatible with the colored residue rule.
QQ_DECLARE_ERROR(InvalidPit, validation)
// Expansion exceeded the term bound or needs a counting-degree cutoff.
QQ_DECLARE_ERROR(TruncationRequired, truncation)
// Two reflection paths reached one monomial with different coefficients.
QQ_DECLARE_ERROR(PathDependence, path_dependence)

#undef QQ_DECLARE_ERROR

}  // namespace qq
