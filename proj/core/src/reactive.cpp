#include "inet/reactive.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace inet {

const char* to_string(PairLabel l) {
  switch (l) {
    case PairLabel::kStar: return "*";
    case PairLabel::kPPos: return "p+";
    case PairLabel::kPNeg: return "p-";
    case PairLabel::kPBoth: return "p+-";
    case PairLabel::kVPos: return "v+";
    case PairLabel::kVNeg: return "v-";
  }
  return "?";
}

bool label_transition_allowed(PairLabel from, PairLabel to) {
  if (from == to) return false;
  switch (from) {
    case PairLabel::kStar:
      return true;
    case PairLabel::kPPos:
    case PairLabel::kPNeg:
      return to != PairLabel::kPPos && to != PairLabel::kPNeg;
    case PairLabel::kPBoth:
      return to == PairLabel::kVPos || to == PairLabel::kVNeg ||
             to == PairLabel::kStar;
    case PairLabel::kVPos:
    case PairLabel::kVNeg:
      return false;
  }
  return false;
}

Verdict verdict_of(PairLabel l) {
  if (l == PairLabel::kVPos) return Verdict::kPositive;
  if (l == PairLabel::kVNeg) return Verdict::kNegative;
  return Verdict::kNone;
}

PairLabel LabelTable::at(const NodeId& y) const {
  auto it = labels.find({origin, y});
  if (it == labels.end()) {
    throw Error(ErrorCode::kUnknownNode, "unknown node '" + y.str() + "'",
                {y.str()});
  }
  return it->second;
}

namespace {

bool has_positive_potential(PairLabel l) {
  return l == PairLabel::kPPos || l == PairLabel::kPBoth ||
         l == PairLabel::kVPos;
}

PairLabel raised(PairLabel cur, Polarity p) {
  const PairLabel mine =
      p == Polarity::kPositive ? PairLabel::kPPos : PairLabel::kPNeg;
  if (cur == PairLabel::kStar) return mine;
  if (cur == mine || cur == PairLabel::kPBoth) return cur;
  return PairLabel::kPBoth;
}

class Labeller {
 public:
  Labeller(const Diagram& gamma, const LabelObserver& observer)
      : gamma_(gamma), observer_(observer) {}

  const std::vector<PairLabel>& run(std::size_t x) {
    if (auto it = done_.find(x); it != done_.end()) return it->second;

    const std::size_t n = gamma_.size();
    std::vector<PairLabel> lab(n, PairLabel::kStar);
    auto set = [&](std::size_t y, PairLabel to) {
      if (lab[y] == to) return;
      if (!label_transition_allowed(lab[y], to)) {
        throw std::logic_error(std::string("illegal label transition ") +
                               to_string(lab[y]) + " -> " + to_string(to));
      }
      if (observer_) observer_(gamma_.node(x), gamma_.node(y), lab[y], to);
      lab[y] = to;
    };

    // Direct links decide their pair outright.
    for (std::size_t y : gamma_.successors(x)) {
      set(y, *gamma_.link(x, y) == Polarity::kPositive ? PairLabel::kVPos
                                                       : PairLabel::kVNeg);
    }

    // Potential labels, pushed forward in topological order.
    for (std::size_t u : gamma_.topological_order()) {
      if (u == x || !has_positive_potential(lab[u])) continue;
      for (std::size_t w : gamma_.successors(u)) {
        if (gamma_.link(x, w)) continue;
        set(w, raised(lab[w], *gamma_.link(u, w)));
      }
    }

    // Resolution by increasing degree: predecessors of y are decided first.
    std::vector<std::size_t> open;
    for (std::size_t y = 0; y < n; ++y) {
      if (lab[y] != PairLabel::kStar && lab[y] != PairLabel::kVPos &&
          lab[y] != PairLabel::kVNeg) {
        open.push_back(y);
      }
    }
    std::stable_sort(open.begin(), open.end(), [&](auto a, auto b) {
      return gamma_.longest(x, a) < gamma_.longest(x, b);
    });
    for (std::size_t y : open) {
      std::vector<std::size_t> sources;
      for (std::size_t c : gamma_.predecessors(y)) {
        if (lab[c] == PairLabel::kVPos) sources.push_back(c);
      }
      std::vector<std::size_t> survivors;
      for (std::size_t c2 : sources) {
        const Polarity mine = *gamma_.link(c2, y);
        bool eliminated = false;
        for (std::size_t c : sources) {
          if (c == c2 || *gamma_.link(c, y) == mine) continue;
          if (run(c)[c2] == PairLabel::kVPos) {
            eliminated = true;
            break;
          }
        }
        if (!eliminated) survivors.push_back(c2);
      }
      PairLabel result = PairLabel::kStar;
      if (!survivors.empty()) {
        const Polarity first = *gamma_.link(survivors.front(), y);
        const bool agree =
            std::all_of(survivors.begin(), survivors.end(), [&](auto c) {
              return *gamma_.link(c, y) == first;
            });
        if (agree) {
          result = first == Polarity::kPositive ? PairLabel::kVPos
                                                : PairLabel::kVNeg;
        }
      }
      set(y, result);
    }
    return done_.emplace(x, std::move(lab)).first->second;
  }

 private:
  const Diagram& gamma_;
  const LabelObserver& observer_;
  std::map<std::size_t, std::vector<PairLabel>> done_;
};

void require_supported(const PolicyConfig& cfg) {
  if (cfg.scepticism != Scepticism::kDirect ||
      cfg.scope != PreclusionScope::kOffPath) {
    throw Error(ErrorCode::kUnsupportedPolicy,
                "reactive compilation needs a directly sceptical, off-path "
                "policy, got " + to_string(cfg));
  }
}

// Double arrows indexed by trigger.
std::map<Link, std::vector<Link>> by_trigger(const ReactiveNet& rn) {
  std::map<Link, std::vector<Link>> out;
  for (const DoubleArrow& d : rn.double_arrows) {
    out[d.trigger].push_back(d.blocked);
  }
  return out;
}

// Depth-first traversal of potential paths from the origin with double
// arrows in force. `visit` sees every enabled link leaving a node reached
// positively, with the first link of the current branch.
class Walker {
 public:
  using Visit = std::function<void(const Link& first, const Link& l)>;

  Walker(const ReactiveNet& rn, Visit visit)
      : rn_(rn), triggers_(by_trigger(rn)), visit_(std::move(visit)) {}

  void run() {
    const std::size_t x = rn_.base.index(rn_.origin);
    for (std::size_t f : rn_.base.successors(x)) {
      const Link first = rn_.base.link_between(x, f);
      step(first, first, {});
    }
  }

 private:
  void step(const Link& first, const Link& l, std::set<Link> disabled) {
    visit_(first, l);
    if (l.polarity == Polarity::kNegative) return;
    if (auto it = triggers_.find(l); it != triggers_.end()) {
      disabled.insert(it->second.begin(), it->second.end());
    }
    if (!seen_.insert({first, l.target, disabled}).second) return;
    const std::size_t u = rn_.base.index(l.target);
    for (std::size_t w : rn_.base.successors(u)) {
      const Link next = rn_.base.link_between(u, w);
      if (disabled.contains(next)) continue;
      step(first, next, disabled);
    }
  }

  const ReactiveNet& rn_;
  std::map<Link, std::vector<Link>> triggers_;
  Visit visit_;
  std::set<std::tuple<Link, NodeId, std::set<Link>>> seen_;
};

}  // namespace

LabelTable label_all(const Diagram& gamma, const NodeId& x,
                     const LabelObserver& observer) {
  const std::size_t xi = gamma.index(x);
  Labeller labeller(gamma, observer);
  const std::vector<PairLabel>& lab = labeller.run(xi);

  LabelTable table{x, {}, {}};
  for (std::size_t y = 0; y < gamma.size(); ++y) {
    table.labels.emplace(std::pair{x, gamma.node(y)}, lab[y]);
    auto& preds = table.predecessors[gamma.node(y)];
    for (std::size_t c : gamma.predecessors(y)) preds.insert(gamma.node(c));
  }
  return table;
}

std::string to_string(const DoubleArrow& d) {
  return "(" + to_string(d.trigger) + ") >> (" + to_string(d.blocked) + ")";
}

ReactiveNet compile(const Diagram& gamma, const NodeId& origin,
                    const PolicyConfig& cfg) {
  const std::size_t x = gamma.index(origin);
  require_supported(cfg);
  const Engine engine(gamma, cfg);

  ReactiveNet rn{gamma, origin, {}};
  for (std::size_t f : gamma.successors(x)) {
    if (*gamma.link(x, f) != Polarity::kPositive) continue;
    const Link first = gamma.link_between(x, f);
    // Nodes reached by a valid positive path beginning with `first`.
    std::vector<bool> reached(gamma.size(), false);
    reached[f] = true;
    for (std::size_t u : gamma.topological_order()) {
      if (!reached[u]) continue;
      for (std::size_t w : gamma.successors(u)) {
        if (!engine.step_valid(x, u, w)) {
          rn.double_arrows.insert({first, gamma.link_between(u, w)});
        } else if (*gamma.link(u, w) == Polarity::kPositive) {
          reached[w] = true;
        }
      }
    }
  }
  return rn;
}

ReactiveNet recompile(const ReactiveNet& rn, const PolicyConfig& cfg) {
  const std::size_t x = rn.base.index(rn.origin);
  require_supported(cfg);
  const Engine engine(rn.base, cfg);

  ReactiveNet out = rn;
  Walker(rn, [&](const Link& first, const Link& l) {
    if (l.source == rn.origin) return;
    if (!engine.step_valid(x, rn.base.index(l.source),
                           rn.base.index(l.target))) {
      out.double_arrows.insert({first, l});
    }
  }).run();
  return out;
}

Verdict walk(const ReactiveNet& rn, const NodeId& target) {
  rn.base.index(target);
  bool positive = false;
  bool negative = false;
  Walker(rn, [&](const Link&, const Link& l) {
    if (l.target != target) return;
    (l.polarity == Polarity::kPositive ? positive : negative) = true;
  }).run();
  if (positive && negative) {
    throw std::logic_error("walk reached " + target.str() +
                           " with both polarities");
  }
  if (positive) return Verdict::kPositive;
  if (negative) return Verdict::kNegative;
  return Verdict::kNone;
}

std::string to_dot(const ReactiveNet& rn, const std::string& graph_name) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };

  std::set<Link> routed;
  for (const DoubleArrow& d : rn.double_arrows) {
    routed.insert(d.trigger);
    routed.insert(d.blocked);
  }

  std::string out = "digraph " + quote(graph_name) + " {\n";
  for (const NodeId& id : rn.base.nodes()) {
    out += "  " + quote(id.str());
    if (id == rn.origin) out += " [shape=box]";
    out += ";\n";
  }
  for (const Link& l : routed) {
    out += "  " + quote(to_string(l)) + " [shape=point];\n";
  }
  for (const Link& l : rn.base.links()) {
    const std::string mark =
        l.polarity == Polarity::kNegative ? " [label=\"!\"]" : "";
    if (routed.contains(l)) {
      out += "  " + quote(l.source.str()) + " -> " + quote(to_string(l)) +
             " [arrowhead=none];\n";
      out += "  " + quote(to_string(l)) + " -> " + quote(l.target.str()) +
             mark + ";\n";
    } else {
      out += "  " + quote(l.source.str()) + " -> " + quote(l.target.str()) +
             mark + ";\n";
    }
  }
  for (const DoubleArrow& d : rn.double_arrows) {
    out += "  " + quote(to_string(d.trigger)) + " -> " +
           quote(to_string(d.blocked)) +
           " [style=dashed, label=\"blocks\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace inet
