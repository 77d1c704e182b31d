#include "triblock/error.hpp"

namespace triblock {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::InconsistentRotation: return "InconsistentRotation";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::NotB5c: return "NotB5c";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::IdentityFailure: return "IdentityFailure";
    case ErrorKind::GluingMismatch: return "GluingMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidName: return "InvalidName";
  }
  return "Unknown";
}

}  // namespace triblock
