#ifndef EXPLORER_ERROR_HPP_
#define EXPLORER_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace explorer {

// Every failure the library reports, tagged so callers (and tests) can
// dispatch on the kind without parsing messages.
enum class ErrorKind {
  // gridworld
  RefugeOutOfBounds,
  NoArena,
  StartOutsideRefuge,
  // agent / engine configuration
  ValidationError,
  UnknownParam,
  ValueOutOfRange,
  EmptyValues,
  EmptySeeds,
  // curve metrics
  EmptySeries,
  ZeroTotal,
  BadFraction,
  BadWindow,
  BinWidthMismatch,
  // fit
  BothEmpty,
  EmptyTarget,
  EmptyGrid,
  // config / csv / plot
  ParseError,
  UnknownKey,
  BadHeader,
  BadRow,
  InconsistentBinWidth,
  NoData,
  IoError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace explorer

#endif  // EXPLORER_ERROR_HPP_
