#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grpd {

enum class ErrorKind {
  DuplicateLabel,
  UnknownLabel,
  ConflictingProduct,
  EmptyStructure,
  AxiomViolation,
  NotAGroup,
  NotAnIdentity,
  EmptySubset,
  NotASubgroupoid,
  NotWide,
  NotNormal,
  QuotientUndefined,
  NotALoop,
  NotAbelian,
  NotAHomomorphism,
  NotStrong,
  NotSurjective,
  NotNested,
  NotNormalAtStep,
  BadPosition,
  GroupoidMismatch,
  TooLarge,
  NotAssociative,
  StarViolation,
  NonCommutingIdempotents,
  EmptyWord,
  GroupMismatch,
  NotUnital,
  NotAnAction,
  SyntaxError,
  SchemaError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `witness` carries the offending
/// element labels (or a position) in human-readable form when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string witness = {})
      : std::runtime_error(std::move(message)),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string message,
                              std::string witness = {}) {
  throw Error(kind, std::move(message), std::move(witness));
}

}  // namespace grpd
