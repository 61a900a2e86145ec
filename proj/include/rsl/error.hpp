#pragma once

#include <stdexcept>
#include <string>

namespace rsl {

enum class ErrorKind {
  DomainError,
  SmallArgument,
  NonPositiveSample,
  UnknownSigma,
  UnknownSymbol,
  QuadratureUnderresolved,
  SplitDomainError,
  DomainNotCovered,
  NonConvergent,
  OutOfRangeQ,
  RegimeViolation,
  ParameterViolation,
  AdmissibilityViolation,
  NoPairAvailable,
  OutOfRangeS,
  OutOfRangeSigma,
  NonContraction,
  ConfigError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rsl
