#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace inet {

enum class ErrorCode {
  kInvalidName,
  kUnknownNode,
  kSelfLoop,
  kHardContradiction,
  kCycleDetected,
  kEndpointMismatch,
  kPathNotInDiagram,
  kUnsupportedPolicy,
  kEmptyReportSet,
  kDiagramTooLarge,
  kSyntaxError,
  kSemanticError,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this type. `nodes()` carries the
// offending node names where one applies (the cycle for kCycleDetected, the
// pair for kHardContradiction, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::vector<std::string> nodes = {});

  ErrorCode code() const { return code_; }
  const std::vector<std::string>& nodes() const { return nodes_; }

 private:
  ErrorCode code_;
  std::vector<std::string> nodes_;
};

// Syntax and semantic errors from the .inet reader, with 1-based positions.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column,
             const std::string& message, std::vector<std::string> nodes = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace inet
