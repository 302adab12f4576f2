#include "inet/error.hpp"

#include <utility>

namespace inet {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidName: return "InvalidName";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kHardContradiction: return "HardContradiction";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kEndpointMismatch: return "EndpointMismatch";
    case ErrorCode::kPathNotInDiagram: return "PathNotInDiagram";
    case ErrorCode::kUnsupportedPolicy: return "UnsupportedPolicy";
    case ErrorCode::kEmptyReportSet: return "EmptyReportSet";
    case ErrorCode::kDiagramTooLarge: return "DiagramTooLarge";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kSemanticError: return "SemanticError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what,
             std::vector<std::string> nodes)
    : std::runtime_error(what), code_(code), nodes_(std::move(nodes)) {}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column,
                       const std::string& message,
                       std::vector<std::string> nodes)
    : Error(code,
            std::to_string(line) + ":" + std::to_string(column) + ": " +
                message,
            std::move(nodes)),
      line_(line),
      column_(column) {}

}  // namespace inet
