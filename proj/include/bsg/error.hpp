#ifndef BSG_ERROR_HPP
#define BSG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace bsg {

enum class ErrorKind {
  NonComposable,
  UnknownVertex,
  UnknownEdge,
  UnknownBlock,
  UnknownPoint,
  DuplicateName,
  MalformedWalk,
  PartitionMismatch,
  NotAdmissible,
  BaseMismatch,
  NotIrreducible,
  ZeroVector,
  InvalidSystem,
  InvalidRepGraph,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace bsg

#endif  // BSG_ERROR_HPP
