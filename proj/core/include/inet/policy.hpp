#pragma once

#include <cstdint>
#include <string>

namespace inet {

// Where a precluding source may sit: anywhere reachable (off-path) or only on
// the contested path itself (on-path).
enum class PreclusionScope : std::uint8_t { kOffPath, kOnPath };

// Whether the path witnessing a preclusion must be valid in its two parts
// separately (split) or as one whole path (total).
enum class PreclusionValidity : std::uint8_t { kSplit, kTotal };

enum class Scepticism : std::uint8_t { kDirect, kExtensions };

// Conflict resolution among information sources: P21 drops every dominated
// source, P22 only those dominated by a contradicting source.
enum class Resolver : std::uint8_t { kP21, kP22 };

// The default is directly sceptical, split-validity, off-path upward
// chaining with the P22 resolver.
struct PolicyConfig {
  PreclusionScope scope = PreclusionScope::kOffPath;
  PreclusionValidity validity = PreclusionValidity::kSplit;
  Scepticism scepticism = Scepticism::kDirect;
  Resolver resolver = Resolver::kP22;

  friend bool operator==(const PolicyConfig&, const PolicyConfig&) = default;
};

std::string to_string(const PolicyConfig& cfg);

}  // namespace inet
