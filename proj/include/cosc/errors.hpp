#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cosc {

enum class ErrorKind {
  InvalidArgument,
  RepulsiveOscillator,
  PoleAtB,
  NotConverged,
  LambdaPole,
  SingularPoint,
  DeletedLevel,
  NonNormalizable,
  LadderEdge,
  DegenerateTriple,
  DegenerateSolution,
  ZeroCrossing,
  NoValidAssignment,
  EmptyGrid,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::RepulsiveOscillator: return "RepulsiveOscillator";
    case ErrorKind::PoleAtB: return "PoleAtB";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::LambdaPole: return "LambdaPole";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::DeletedLevel: return "DeletedLevel";
    case ErrorKind::NonNormalizable: return "NonNormalizable";
    case ErrorKind::LadderEdge: return "LadderEdge";
    case ErrorKind::DegenerateTriple: return "DegenerateTriple";
    case ErrorKind::DegenerateSolution: return "DegenerateSolution";
    case ErrorKind::ZeroCrossing: return "ZeroCrossing";
    case ErrorKind::NoValidAssignment: return "NoValidAssignment";
    case ErrorKind::EmptyGrid: return "EmptyGrid";
  }
  return "Unknown";
}

}  // namespace cosc
