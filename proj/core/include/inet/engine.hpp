#pragma once

// Validity of paths in an inheritance diagram and the conclusions drawn from
// them, under a configurable preclusion/scepticism policy.
//
// Validity is decided by induction on degree: every pair (x, y) is processed
// in increasing order of the longest generalized path x..y, and a compound
// path x .. u -> y is valid iff its prefix is valid and the step u -> y passes
// two tests relative to the origin x:
//   (2) no source v with a contradicting link to y is more specific than u
//       (v = x, or valid positive paths x..v and v..u);
//   (3) every contradicting source reachable from x by a valid positive path
//       is itself beaten by a more specific agreeing source z.
// Only (origin, endpoint, polarity) facts are memoized, so each pair is
// decided once.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "inet/diagram.hpp"
#include "inet/policy.hpp"

namespace inet {

namespace detail {
class Evaluator;
}

class Engine {
 public:
  // Throws kUnsupportedPolicy for cfg.scepticism == Extensions (see
  // compute_extensions). `tie_shuffle_seed` permutes pairs of equal degree;
  // results must not depend on it.
  explicit Engine(Diagram gamma, PolicyConfig cfg = {},
                  std::optional<std::uint64_t> tie_shuffle_seed = {});
  ~Engine();
  Engine(Engine&&) noexcept;
  Engine& operator=(Engine&&) noexcept;

  const Diagram& diagram() const { return *gamma_; }
  const PolicyConfig& policy() const { return cfg_; }

  // sigma must be made of links of the diagram (kPathNotInDiagram otherwise).
  // Generalized paths that are not potential paths are never valid.
  bool is_valid(const Path& sigma) const;

  Conclusion query(const NodeId& x, const NodeId& y) const;
  Verdict verdict(std::size_t x, std::size_t y) const;
  bool has_valid_path(std::size_t x, std::size_t y, Polarity p) const;

  // Sorted. Exponential in the worst case; meant for witnesses and tests.
  std::vector<Path> valid_paths(const NodeId& x, const NodeId& y,
                                Polarity p) const;

  // Links where a walker from x heading for y can be told that no valid path
  // continues: every link leaving x or a node validly reached from x, whose
  // target is y or leads to y, and which carries no valid x..y path.
  std::vector<Link> signposts(const NodeId& x, const NodeId& y) const;

  // Origin-relative decision for the single step u -> y (u != x, prefix
  // assumed valid).
  bool step_valid(std::size_t x, std::size_t u, std::size_t y) const;

 private:
  std::shared_ptr<const Diagram> gamma_;
  PolicyConfig cfg_;
  std::unique_ptr<detail::Evaluator> eval_;
};

// One-shot helpers building a fresh Engine.
bool is_valid(const Diagram& gamma, const Path& sigma,
              const PolicyConfig& cfg = {});
Conclusion query(const Diagram& gamma, const NodeId& x, const NodeId& y,
                 const PolicyConfig& cfg = {});
std::vector<Link> signposts(const Diagram& gamma, const NodeId& x,
                            const NodeId& y, const PolicyConfig& cfg = {});

// -- Plug-in conflict resolution among information sources -----------------

struct SourceReport {
  NodeId source;
  Polarity claim;
  NodeId about;

  friend auto operator<=>(const SourceReport&, const SourceReport&) = default;
  friend bool operator==(const SourceReport&, const SourceReport&) = default;
};

enum class Resolution : std::uint8_t { kPositive, kNegative, kUndecided };

const char* to_string(Resolution r);

struct ResolvedSources {
  Resolution resolution = Resolution::kUndecided;
  std::vector<SourceReport> survivors;  // sorted
};

// better(a, b): a is a better (more specific) source than b. Need be neither
// transitive nor total.
using BetterRelation = std::function<bool(const NodeId&, const NodeId&)>;

// Throws kEmptyReportSet. Survivors are reported even when undecided.
ResolvedSources resolve_sources(const std::vector<SourceReport>& reports,
                                const BetterRelation& better,
                                Resolver resolver);

// Convenience: a relation given as explicit (better, worse) pairs.
BetterRelation relation_from_pairs(std::set<std::pair<NodeId, NodeId>> pairs);

// -- Extensions (indirect scepticism) --------------------------------------

struct Extension {
  std::vector<Path> valid_paths;      // sorted
  std::vector<Conclusion> conclusions;  // sorted by (subject, predicate)
};

struct ExtensionSet {
  std::vector<Extension> extensions;
  // Conclusions (subject, predicate, verdict) shared by every extension;
  // witnesses are the union over extensions.
  std::vector<Conclusion> intersection;
};

// Forks at each unresolved conflict, processing pairs by increasing
// (degree, subject, predicate). cfg.scepticism is ignored. Throws
// kUnsupportedPolicy above `max_extensions` leaves.
ExtensionSet compute_extensions(const Diagram& gamma, PolicyConfig cfg = {},
                                std::size_t max_extensions = 4096);

// Conclusions of the direct engine for every ordered pair with a verdict,
// in the same layout as Extension::conclusions.
std::vector<Conclusion> all_conclusions(const Engine& engine);

}  // namespace inet
