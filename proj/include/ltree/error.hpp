#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ltree {

// Machine-readable error codes. The CLI reports these names verbatim.
enum class ErrorCode {
  GroupMismatch,
  NotInGroup,
  UndefinedRatio,
  DomainError,
  Overflow,
  NotInValuationRing,
  FieldMismatch,
  InvalidTree,
  InvalidPoint,
  EmbeddingError,
  TreeMismatch,
  NotAnIsometry,
  OrbitEscapesTree,
  SingularLattice,
  DeterminantNotOne,
  InfiniteResidueField,
  NotConnected,
  InvalidEdge,
  InvalidGraph,
  NotTransitive,
  SymbolError,
  TrivialAction,
  BoundedCharacter,
  NotSupportedAtInfinity,
  ClassListMismatch,
  ParseError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ltree
