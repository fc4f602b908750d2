#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace selset {

// Broad error categories. The CLI maps these onto exit codes.
enum class ErrorKind {
  kInput,         // malformed or invalid input data
  kPrecondition,  // valid input, but outside what the requested operation accepts
  kVerification,  // a produced solution failed verification (always a bug)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class FormatErrc {
  kMalformedLine,
  kCountMismatch,
  kVertexOutOfRange,
  kDuplicateVertex,
  kDuplicateEdge,
  kSelfLoop,
  kDisconnected,
  kColorOutOfRange,
  kUnusedColor,
  kEmptyGraph,
  kInvalidUnitLength,
  kMixedPolarity,
  kClauseSize,
  kRepeatedVariable,
  kVariableOutOfRange,
};

std::string_view to_string(FormatErrc code);

// Raised by every parser and by ColoredGraph construction. `line` is the
// 1-based input line, or 0 when the problem is not tied to a single line.
class FormatError : public Error {
 public:
  FormatError(FormatErrc code, std::size_t line, const std::string& detail);
  FormatErrc code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  FormatErrc code_;
  std::size_t line_;
};

enum class PreconditionErrc {
  kInvalidVertex,
  kEmptySet,
  kNotATree,
  kNotABlock,
  kMonochromatic,
  kBudgetExceeded,
  kUncoverable,
  kUnsatisfied,
  kNotSelective,
  kWrongSize,
  kNotDecomposable,
  kInvalidSpec,
  kMapMismatch,
};

std::string_view to_string(PreconditionErrc code);

class PreconditionError : public Error {
 public:
  PreconditionError(PreconditionErrc code, const std::string& detail);
  PreconditionErrc code() const noexcept { return code_; }

 private:
  PreconditionErrc code_;
};

class VerificationError : public Error {
 public:
  explicit VerificationError(const std::string& detail)
      : Error(ErrorKind::kVerification, "verification failed: " + detail) {}
};

}  // namespace selset
