#include "rsl/error.hpp"

namespace rsl {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::SmallArgument: return "SmallArgument";
    case ErrorKind::NonPositiveSample: return "NonPositiveSample";
    case ErrorKind::UnknownSigma: return "UnknownSigma";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::QuadratureUnderresolved: return "QuadratureUnderresolved";
    case ErrorKind::SplitDomainError: return "SplitDomainError";
    case ErrorKind::DomainNotCovered: return "DomainNotCovered";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::OutOfRangeQ: return "OutOfRangeQ";
    case ErrorKind::RegimeViolation: return "RegimeViolation";
    case ErrorKind::ParameterViolation: return "ParameterViolation";
    case ErrorKind::AdmissibilityViolation: return "AdmissibilityViolation";
    case ErrorKind::NoPairAvailable: return "NoPairAvailable";
    case ErrorKind::OutOfRangeS: return "OutOfRangeS";
    case ErrorKind::OutOfRangeSigma: return "OutOfRangeSigma";
    case ErrorKind::NonContraction: return "NonContraction";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace rsl
