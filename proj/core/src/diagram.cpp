#include "inet/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

namespace inet {

const char* to_string(Polarity p) {
  return p == Polarity::kPositive ? "positive" : "negative";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPositive: return "POSITIVE";
    case Verdict::kNegative: return "NEGATIVE";
    case Verdict::kNone: return "NONE";
  }
  return "NONE";
}

bool NodeId::is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

NodeId::NodeId(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) {
    throw Error(ErrorCode::kInvalidName, "invalid node name '" + name_ + "'",
                {name_});
  }
}

std::ostream& operator<<(std::ostream& os, const NodeId& id) {
  return os << id.str();
}

std::string to_string(const Link& link) {
  return link.source.str() +
         (link.polarity == Polarity::kPositive ? " -> " : " !> ") +
         link.target.str();
}

std::ostream& operator<<(std::ostream& os, const Link& link) {
  return os << to_string(link);
}

// -- Path -------------------------------------------------------------------

namespace {

PathKind classify(const std::vector<Link>& steps) {
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (steps[i].polarity == Polarity::kNegative) return PathKind::kGeneralized;
  }
  return PathKind::kPotential;
}

}  // namespace

Path::Path(std::vector<Link> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) {
    throw Error(ErrorCode::kEndpointMismatch, "a path needs at least one step");
  }
  for (std::size_t i = 1; i < steps_.size(); ++i) {
    if (steps_[i].source != steps_[i - 1].target) {
      throw Error(ErrorCode::kEndpointMismatch,
                  "step '" + to_string(steps_[i]) + "' does not continue '" +
                      to_string(steps_[i - 1]) + "'",
                  {steps_[i - 1].target.str(), steps_[i].source.str()});
    }
  }
  kind_ = classify(steps_);
}

std::vector<NodeId> Path::nodes() const {
  std::vector<NodeId> out;
  out.reserve(steps_.size() + 1);
  out.push_back(origin());
  for (const Link& l : steps_) out.push_back(l.target);
  return out;
}

std::optional<Path> Path::prefix() const {
  if (steps_.size() < 2) return std::nullopt;
  return Path(std::vector<Link>(steps_.begin(), steps_.end() - 1));
}

std::string to_string(const Path& path) {
  std::string out = path.origin().str();
  for (const Link& l : path.steps()) {
    out += l.polarity == Polarity::kPositive ? " -> " : " !> ";
    out += l.target.str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Path& path) {
  return os << to_string(path);
}

Path concatenate(const Path& sigma, const Path& tau) {
  if (sigma.endpoint() != tau.origin()) {
    throw Error(ErrorCode::kEndpointMismatch,
                "cannot concatenate '" + to_string(sigma) + "' with '" +
                    to_string(tau) + "'",
                {sigma.endpoint().str(), tau.origin().str()});
  }
  std::vector<Link> steps = sigma.steps();
  steps.insert(steps.end(), tau.steps().begin(), tau.steps().end());
  return Path(std::move(steps));
}

// -- Diagram ----------------------------------------------------------------

namespace {

// Returns one directed cycle among `alive` nodes (all of which lie on or
// lead into a cycle after Kahn's algorithm stalls).
std::vector<std::size_t> find_cycle(
    const std::vector<std::vector<std::size_t>>& succ,
    const std::vector<bool>& alive) {
  const std::size_t n = succ.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> stack;
  std::vector<std::size_t> cycle;
  std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
    state[v] = 1;
    stack.push_back(v);
    for (std::size_t w : succ[v]) {
      if (!alive[w]) continue;
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle.assign(it, stack.end());
        return true;
      }
      if (state[w] == 0 && dfs(w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v] && state[v] == 0 && dfs(v)) break;
  }
  return cycle;
}

}  // namespace

Diagram Diagram::build(std::vector<NodeId> nodes, std::vector<Link> links) {
  for (const Link& l : links) {
    if (l.source == l.target) {
      throw Error(ErrorCode::kSelfLoop,
                  "self loop on '" + l.source.str() + "'", {l.source.str()});
    }
    nodes.push_back(l.source);
    nodes.push_back(l.target);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());

  Diagram d;
  d.nodes_ = std::move(nodes);
  d.links_ = std::move(links);
  const std::size_t n = d.nodes_.size();
  d.matrix_.assign(n * n, 0);
  d.successors_.assign(n, {});
  d.predecessors_.assign(n, {});

  for (const Link& l : d.links_) {
    const std::size_t s = *d.find(l.source);
    const std::size_t t = *d.find(l.target);
    std::int8_t& cell = d.matrix_[s * n + t];
    const std::int8_t v = l.polarity == Polarity::kPositive ? 1 : -1;
    if (cell != 0 && cell != v) {
      throw Error(ErrorCode::kHardContradiction,
                  "both '" + l.source.str() + " -> " + l.target.str() +
                      "' and '" + l.source.str() + " !> " + l.target.str() +
                      "' are present",
                  {l.source.str(), l.target.str()});
    }
    cell = v;
    d.successors_[s].push_back(t);
    d.predecessors_[t].push_back(s);
  }

  // Kahn's algorithm; the priority queue keeps the order name-stable.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t t = 0; t < n; ++t) indegree[t] = d.predecessors_[t].size();
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>>
      ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    d.topo_.push_back(v);
    for (std::size_t w : d.successors_[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (d.topo_.size() != n) {
    std::vector<bool> alive(n, true);
    for (std::size_t v : d.topo_) alive[v] = false;
    std::vector<std::size_t> cycle = find_cycle(d.successors_, alive);
    std::vector<std::string> names;
    std::string text;
    for (std::size_t v : cycle) {
      names.push_back(d.nodes_[v].str());
      text += d.nodes_[v].str() + " -> ";
    }
    if (!cycle.empty()) text += d.nodes_[cycle.front()].str();
    throw Error(ErrorCode::kCycleDetected, "cycle detected: " + text,
                std::move(names));
  }

  // Longest generalized path lengths, one DP per origin in topological order.
  d.longest_.assign(n * n, 0);
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[d.topo_[i]] = i;
  for (std::size_t x = 0; x < n; ++x) {
    std::uint32_t* row = &d.longest_[x * n];
    for (std::size_t k = position[x]; k < n; ++k) {
      const std::size_t v = d.topo_[k];
      if (v != x && row[v] == 0) continue;
      for (std::size_t w : d.successors_[v]) {
        row[w] = std::max(row[w], row[v] + 1);
      }
    }
  }
  return d;
}

bool Diagram::contains(const Link& l) const {
  auto s = find(l.source);
  auto t = find(l.target);
  return s && t && has_link(*s, *t, l.polarity);
}

std::optional<std::size_t> Diagram::find(const NodeId& id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t Diagram::index(const NodeId& id) const {
  auto i = find(id);
  if (!i) {
    throw Error(ErrorCode::kUnknownNode, "unknown node '" + id.str() + "'",
                {id.str()});
  }
  return *i;
}

Link Diagram::link_between(std::size_t from, std::size_t to) const {
  auto p = link(from, to);
  if (!p) {
    throw Error(ErrorCode::kPathNotInDiagram,
                "no link from '" + nodes_[from].str() + "' to '" +
                    nodes_[to].str() + "'",
                {nodes_[from].str(), nodes_[to].str()});
  }
  return Link{nodes_[from], nodes_[to], *p};
}

Path Diagram::path_through(const std::vector<NodeId>& nodes) const {
  if (nodes.size() < 2) {
    throw Error(ErrorCode::kPathNotInDiagram, "a path needs two nodes");
  }
  std::vector<Link> steps;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    auto s = find(nodes[i - 1]);
    auto t = find(nodes[i]);
    if (!s || !t) {
      throw Error(ErrorCode::kPathNotInDiagram,
                  "no link from '" + nodes[i - 1].str() + "' to '" +
                      nodes[i].str() + "'");
    }
    steps.push_back(link_between(*s, *t));
  }
  return Path(std::move(steps));
}

Path Diagram::path_through(std::initializer_list<const char*> nodes) const {
  std::vector<NodeId> ids;
  for (const char* n : nodes) ids.emplace_back(n);
  return path_through(ids);
}

std::optional<std::size_t> degree(const Diagram& gamma, const NodeId& x,
                                  const NodeId& y) {
  const std::size_t xi = gamma.index(x);
  const std::size_t yi = gamma.index(y);
  if (!gamma.reaches(xi, yi)) return std::nullopt;
  return gamma.longest(xi, yi);
}

}  // namespace inet
