#pragma once

// Reactive graphs: an inheritance diagram plus double arrows. A double arrow
// connects a trigger link to a blocked link; once a walk has travelled
// through the trigger, the blocked link is gone for the rest of that walk.
//
// Compiled per origin: the double arrows switch off exactly those
// continuations that would turn a valid path into an invalid one, so a plain
// depth-first walk over what stays visible reproduces the engine's verdicts.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "inet/diagram.hpp"
#include "inet/engine.hpp"
#include "inet/policy.hpp"

namespace inet {

// Per-pair state of the label algorithm: nothing known yet (Star), potential
// paths of one or both polarities (PPos, PNeg, PBoth), or decided (VPos,
// VNeg). A P-label that cannot be decided falls back to Star, which is then
// final.
enum class PairLabel : std::uint8_t { kStar, kPPos, kPNeg, kPBoth, kVPos, kVNeg };

const char* to_string(PairLabel l);  // "*", "p+", "p-", "p+-", "v+", "v-"

// Whether the algorithm may move a pair from `from` to `to`.
bool label_transition_allowed(PairLabel from, PairLabel to);

struct LabelTable {
  NodeId origin;
  // Pairs (origin, y) for every y in the diagram.
  std::map<std::pair<NodeId, NodeId>, PairLabel> labels;
  // y -> nodes with a direct link into y.
  std::map<NodeId, std::set<NodeId>> predecessors;

  PairLabel at(const NodeId& y) const;  // label of (origin, y)
};

// Called on every label change, for the requested origin as well as for the
// sub-origins evaluated along the way.
using LabelObserver = std::function<void(const NodeId& x, const NodeId& y,
                                         PairLabel from, PairLabel to)>;

// The label-execution algorithm for origin x under the default policy
// (off-path, split, P22). Throws kUnknownNode.
LabelTable label_all(const Diagram& gamma, const NodeId& x,
                     const LabelObserver& observer = {});

Verdict verdict_of(PairLabel l);  // VPos/VNeg -> Positive/Negative, else None

struct DoubleArrow {
  Link trigger;
  Link blocked;

  friend auto operator<=>(const DoubleArrow&, const DoubleArrow&) = default;
  friend bool operator==(const DoubleArrow&, const DoubleArrow&) = default;
};

std::string to_string(const DoubleArrow& d);  // "(a -> b) >> (b -> d)"

struct ReactiveNet {
  Diagram base;
  NodeId origin;
  std::set<DoubleArrow> double_arrows;
};

// Throws kUnknownNode, and kUnsupportedPolicy unless the policy is
// directly sceptical with off-path preclusion.
ReactiveNet compile(const Diagram& gamma, const NodeId& origin,
                    const PolicyConfig& cfg = {});

// Runs the compilation again over rn, walking with its double arrows in
// force, and returns rn's arrows together with anything newly needed.
ReactiveNet recompile(const ReactiveNet& rn, const PolicyConfig& cfg = {});

// Depth-first walk from rn.origin over enabled links, positive links first
// and at most one negative link at the end. Throws kUnknownNode, and
// std::logic_error if the target is reached with both polarities.
Verdict walk(const ReactiveNet& rn, const NodeId& target);

// Graphviz text. Deterministic: nodes and edges sorted.
std::string to_dot(const ReactiveNet& rn, const std::string& graph_name);

}  // namespace inet
