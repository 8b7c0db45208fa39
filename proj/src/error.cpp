#include "explorer/error.hpp"

namespace explorer {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RefugeOutOfBounds: return "RefugeOutOfBounds";
    case ErrorKind::NoArena: return "NoArena";
    case ErrorKind::StartOutsideRefuge: return "StartOutsideRefuge";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownParam: return "UnknownParam";
    case ErrorKind::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorKind::EmptyValues: return "EmptyValues";
    case ErrorKind::EmptySeeds: return "EmptySeeds";
    case ErrorKind::EmptySeries: return "EmptySeries";
    case ErrorKind::ZeroTotal: return "ZeroTotal";
    case ErrorKind::BadFraction: return "BadFraction";
    case ErrorKind::BadWindow: return "BadWindow";
    case ErrorKind::BinWidthMismatch: return "BinWidthMismatch";
    case ErrorKind::BothEmpty: return "BothEmpty";
    case ErrorKind::EmptyTarget: return "EmptyTarget";
    case ErrorKind::EmptyGrid: return "EmptyGrid";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownKey: return "UnknownKey";
    case ErrorKind::BadHeader: return "BadHeader";
    case ErrorKind::BadRow: return "BadRow";
    case ErrorKind::InconsistentBinWidth: return "InconsistentBinWidth";
    case ErrorKind::NoData: return "NoData";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace explorer
