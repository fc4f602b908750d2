#include "selset/error.hpp"

namespace selset {

std::string_view to_string(FormatErrc code) {
  switch (code) {
    case FormatErrc::kMalformedLine: return "malformed line";
    case FormatErrc::kCountMismatch: return "count mismatch";
    case FormatErrc::kVertexOutOfRange: return "vertex out of range";
    case FormatErrc::kDuplicateVertex: return "duplicate vertex";
    case FormatErrc::kDuplicateEdge: return "duplicate edge";
    case FormatErrc::kSelfLoop: return "self-loop";
    case FormatErrc::kDisconnected: return "disconnected graph";
    case FormatErrc::kColorOutOfRange: return "color out of range";
    case FormatErrc::kUnusedColor: return "unused color";
    case FormatErrc::kEmptyGraph: return "empty graph";
    case FormatErrc::kInvalidUnitLength: return "invalid unit length";
    case FormatErrc::kMixedPolarity: return "mixed-polarity clause";
    case FormatErrc::kClauseSize: return "clause size is not 3";
    case FormatErrc::kRepeatedVariable: return "repeated variable in clause";
    case FormatErrc::kVariableOutOfRange: return "variable out of range";
  }
  return "unknown format error";
}

std::string_view to_string(PreconditionErrc code) {
  switch (code) {
    case PreconditionErrc::kInvalidVertex: return "invalid vertex";
    case PreconditionErrc::kEmptySet: return "empty set";
    case PreconditionErrc::kNotATree: return "not a tree";
    case PreconditionErrc::kNotABlock: return "not a block";
    case PreconditionErrc::kMonochromatic: return "monochromatic graph";
    case PreconditionErrc::kBudgetExceeded: return "block exceeds search budget";
    case PreconditionErrc::kUncoverable: return "uncoverable element";
    case PreconditionErrc::kUnsatisfied: return "assignment does not satisfy formula";
    case PreconditionErrc::kNotSelective: return "subset is not selective";
    case PreconditionErrc::kWrongSize: return "subset has wrong size";
    case PreconditionErrc::kNotDecomposable: return "subset does not match gadget pattern";
    case PreconditionErrc::kInvalidSpec: return "invalid parameters";
    case PreconditionErrc::kMapMismatch: return "vertex map does not match formula";
  }
  return "unknown precondition error";
}

namespace {

std::string format_message(FormatErrc code, std::size_t line, const std::string& detail) {
  std::string msg;
  if (line != 0) msg = "line " + std::to_string(line) + ": ";
  msg += to_string(code);
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

FormatError::FormatError(FormatErrc code, std::size_t line, const std::string& detail)
    : Error(ErrorKind::kInput, format_message(code, line, detail)), code_(code), line_(line) {}

PreconditionError::PreconditionError(PreconditionErrc code, const std::string& detail)
    : Error(ErrorKind::kPrecondition,
            std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code) {}

}  // namespace selset
