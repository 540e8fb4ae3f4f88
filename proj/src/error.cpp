#include "bsg/error.hpp"

namespace bsg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonComposable: return "NonComposable";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::UnknownBlock: return "UnknownBlock";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::MalformedWalk: return "MalformedWalk";
    case ErrorKind::PartitionMismatch: return "PartitionMismatch";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::InvalidSystem: return "InvalidSystem";
    case ErrorKind::InvalidRepGraph: return "InvalidRepGraph";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace bsg
