#pragma once

// Inheritance diagrams: finite acyclic graphs of positive ("is a") and
// negative ("is not a") defeasible links, plus the path values built over
// them. Everything here is immutable once constructed.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inet/error.hpp"

namespace inet {

enum class Polarity : std::uint8_t { kPositive, kNegative };

constexpr Polarity opposite(Polarity p) {
  return p == Polarity::kPositive ? Polarity::kNegative : Polarity::kPositive;
}

const char* to_string(Polarity p);

// A node name: non-empty token of letters, digits and underscores.
// Comparison is exact (case-sensitive) string comparison.
class NodeId {
 public:
  explicit NodeId(std::string name);

  const std::string& str() const { return name_; }

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
  friend bool operator==(const NodeId&, const NodeId&) = default;

  static bool is_valid_name(std::string_view name);

 private:
  std::string name_;
};

std::ostream& operator<<(std::ostream& os, const NodeId& id);

struct Link {
  NodeId source;
  NodeId target;
  Polarity polarity = Polarity::kPositive;

  friend auto operator<=>(const Link&, const Link&) = default;
  friend bool operator==(const Link&, const Link&) = default;
};

// "a -> b" / "a !> b"
std::string to_string(const Link& link);
std::ostream& operator<<(std::ostream& os, const Link& link);

inline Link pos(std::string s, std::string t) {
  return Link{NodeId(std::move(s)), NodeId(std::move(t)), Polarity::kPositive};
}
inline Link neg(std::string s, std::string t) {
  return Link{NodeId(std::move(s)), NodeId(std::move(t)), Polarity::kNegative};
}

enum class PathKind : std::uint8_t { kGeneralized, kPotential };

// A non-empty chain of links. The kind is derived from the steps: a path is
// Potential when it holds at most one negative link and that link is last.
class Path {
 public:
  // Throws kEndpointMismatch when consecutive steps do not chain.
  explicit Path(std::vector<Link> steps);

  const NodeId& origin() const { return steps_.front().source; }
  const NodeId& endpoint() const { return steps_.back().target; }
  const std::vector<Link>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  PathKind kind() const { return kind_; }
  Polarity polarity() const { return steps_.back().polarity; }
  bool is_direct() const { return steps_.size() == 1; }

  // origin followed by each step's target
  std::vector<NodeId> nodes() const;

  // The path without its last step; nullopt for a direct link.
  std::optional<Path> prefix() const;

  friend auto operator<=>(const Path& a, const Path& b) {
    return a.steps_ <=> b.steps_;
  }
  friend bool operator==(const Path& a, const Path& b) {
    return a.steps_ == b.steps_;
  }

 private:
  std::vector<Link> steps_;
  PathKind kind_;
};

// "a -> c !> d"
std::string to_string(const Path& path);
std::ostream& operator<<(std::ostream& os, const Path& path);

// Joins sigma and tau; the kind of the result is recomputed, so it degrades
// to Generalized when the Potential shape is lost.
Path concatenate(const Path& sigma, const Path& tau);

// Validated diagram. Nodes are kept sorted by name; node indices used by the
// index-based accessors refer to that order.
class Diagram {
 public:
  Diagram() = default;

  // Node set is `nodes` plus every link endpoint. Throws kSelfLoop,
  // kHardContradiction or kCycleDetected (the cycle is listed in nodes()).
  static Diagram build(std::vector<NodeId> nodes, std::vector<Link> links);
  static Diagram build(std::vector<Link> links) {
    return build({}, std::move(links));
  }

  const std::vector<NodeId>& nodes() const { return nodes_; }
  // Sorted by (source, target, polarity).
  const std::vector<Link>& links() const { return links_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  bool contains(const NodeId& id) const { return find(id).has_value(); }
  bool contains(const Link& link) const;
  std::optional<std::size_t> find(const NodeId& id) const;
  // Throws kUnknownNode.
  std::size_t index(const NodeId& id) const;
  const NodeId& node(std::size_t i) const { return nodes_[i]; }

  std::optional<Polarity> link(std::size_t from, std::size_t to) const {
    std::int8_t v = matrix_[from * nodes_.size() + to];
    if (v == 0) return std::nullopt;
    return v > 0 ? Polarity::kPositive : Polarity::kNegative;
  }
  bool has_link(std::size_t from, std::size_t to, Polarity p) const {
    auto l = link(from, to);
    return l && *l == p;
  }
  std::span<const std::size_t> successors(std::size_t i) const {
    return successors_[i];
  }
  std::span<const std::size_t> predecessors(std::size_t i) const {
    return predecessors_[i];
  }
  // Node indices in a topological order (ties by name).
  std::span<const std::size_t> topological_order() const { return topo_; }

  // Whether some generalized path runs from `from` to `to`.
  bool reaches(std::size_t from, std::size_t to) const {
    return longest_[from * nodes_.size() + to] > 0;
  }
  // Longest generalized path length from `from` to `to`; 0 when none.
  std::size_t longest(std::size_t from, std::size_t to) const {
    return longest_[from * nodes_.size() + to];
  }

  Link link_between(std::size_t from, std::size_t to) const;

  // Builds the path visiting `nodes` in order; throws kPathNotInDiagram if
  // a hop has no link.
  Path path_through(const std::vector<NodeId>& nodes) const;
  Path path_through(std::initializer_list<const char*> nodes) const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.nodes_ == b.nodes_ && a.links_ == b.links_;
  }

 private:
  std::vector<NodeId> nodes_;
  std::vector<Link> links_;
  std::vector<std::int8_t> matrix_;  // +1 positive, -1 negative, 0 none
  std::vector<std::vector<std::size_t>> successors_;
  std::vector<std::vector<std::size_t>> predecessors_;
  std::vector<std::size_t> topo_;
  std::vector<std::uint32_t> longest_;
};

// Length of the longest generalized path from x to y, nullopt if there is
// none. This is the induction measure for path validity.
std::optional<std::size_t> degree(const Diagram& gamma, const NodeId& x,
                                  const NodeId& y);

enum class Verdict : std::uint8_t { kPositive, kNegative, kNone };

const char* to_string(Verdict v);

inline Verdict verdict_of(Polarity p) {
  return p == Polarity::kPositive ? Verdict::kPositive : Verdict::kNegative;
}

struct Conclusion {
  NodeId subject;
  NodeId predicate;
  Verdict verdict = Verdict::kNone;
  std::vector<Path> witnesses;  // sorted; empty iff verdict is None
  // The information source deciding the conclusion: the subject itself for
  // a direct link, else the lexicographically least last-but-one node of a
  // witness.
  std::optional<NodeId> strength;
};

}  // namespace inet
