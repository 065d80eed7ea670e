#include "invosc/error.hpp"

namespace invosc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Pole: return "PoleError";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ParameterPole: return "ParameterPole";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::SeedZero: return "SeedZero";
    case ErrorKind::WronskianZero: return "WronskianZero";
    case ErrorKind::WZero: return "WZero";
    case ErrorKind::Classification: return "ClassificationError";
    case ErrorKind::MissingDerivative: return "MissingDerivative";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace invosc
