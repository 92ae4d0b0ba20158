#pragma once

#include <stdexcept>
#include <string>

namespace folcoh {

enum class ErrorKind {
  NotSquare,
  NotUnimodular,
  DimensionMismatch,
  FrameMismatch,
  OddDimension,
  OddCodimension,
  AmbientMismatch,
  NotContained,
  NonInvariantImage,
  NotSymplectic,
  NotComplexCompatible,
  SingularWedgePairing,
  StructureMissing,
  InsufficientSamples,
  InvalidConfig,
};

inline const char *to_string(ErrorKind k) {
  switch (k) {
  case ErrorKind::NotSquare: return "NotSquare";
  case ErrorKind::NotUnimodular: return "NotUnimodular";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::FrameMismatch: return "FrameMismatch";
  case ErrorKind::OddDimension: return "OddDimension";
  case ErrorKind::OddCodimension: return "OddCodimension";
  case ErrorKind::AmbientMismatch: return "AmbientMismatch";
  case ErrorKind::NotContained: return "NotContained";
  case ErrorKind::NonInvariantImage: return "NonInvariantImage";
  case ErrorKind::NotSymplectic: return "NotSymplectic";
  case ErrorKind::NotComplexCompatible: return "NotComplexCompatible";
  case ErrorKind::SingularWedgePairing: return "SingularWedgePairing";
  case ErrorKind::StructureMissing: return "StructureMissing";
  case ErrorKind::InsufficientSamples: return "InsufficientSamples";
  case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace folcoh
