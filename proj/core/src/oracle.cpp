#include "inet/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace inet::oracle {

namespace {

void guard(const Diagram& gamma) {
  if (gamma.size() > kMaxNodes) {
    throw Error(ErrorCode::kDiagramTooLarge,
                "oracle limited to " + std::to_string(kMaxNodes) + " nodes");
  }
}

std::optional<Polarity> link_polarity(const Diagram& gamma, const NodeId& s,
                                      const NodeId& t) {
  for (const Link& l : gamma.links()) {
    if (l.source == s && l.target == t) return l.polarity;
  }
  return std::nullopt;
}

void extend(const Diagram& gamma, const NodeId& y, std::vector<Link>& steps,
            std::vector<Path>& out) {
  const NodeId at = steps.back().target;  // steps grows below
  if (at == y) {
    out.emplace_back(steps);
    return;  // acyclic: y cannot be revisited
  }
  for (const Link& l : gamma.links()) {
    if (l.source != at) continue;
    steps.push_back(l);
    extend(gamma, y, steps, out);
    steps.pop_back();
  }
}

bool contains_node(const Path& p, const NodeId& v) {
  const auto nodes = p.nodes();
  return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
}

class Naive {
 public:
  Naive(const Diagram& gamma, const PolicyConfig& cfg)
      : gamma_(gamma), cfg_(cfg) {}

  bool valid(const Path& sigma) const {
    if (sigma.kind() != PathKind::kPotential) return false;
    if (sigma.is_direct()) return true;  // Case I

    const Path prefix = *sigma.prefix();
    const NodeId& x = sigma.origin();
    const NodeId& u = sigma.steps().back().source;
    const NodeId& y = sigma.endpoint();
    const Polarity s = sigma.polarity();

    // (1) upward chaining
    if (!valid(prefix)) return false;

    // (2) sigma itself is not precluded
    if (cfg_.scope == PreclusionScope::kOnPath) {
      for (const NodeId& v : prefix.nodes()) {
        if (v != u && counts_against(v, y, s)) return false;
      }
    } else {
      for (const Link& l : gamma_.links()) {
        if (l.target != y || l.source == u) continue;
        if (!counts_against(l.source, y, s)) continue;
        if (better(x, l.source, u)) return false;
      }
    }

    // (3) every potential contradiction is itself precluded
    for (const Link& l : gamma_.links()) {
      if (l.target != y || l.polarity != opposite(s) || l.source == x) continue;
      const NodeId& v = l.source;
      if (!exists_valid(x, v)) continue;
      bool precluded = false;
      for (const Link& m : gamma_.links()) {
        if (m.target != y || m.source == v) continue;
        if (cfg_.resolver == Resolver::kP22 && m.polarity != s) continue;
        if (better(x, m.source, v)) {
          precluded = true;
          break;
        }
      }
      if (!precluded) return false;
    }
    return true;
  }

 private:
  // Whether a link v - y takes part in contesting a step of polarity s.
  bool counts_against(const NodeId& v, const NodeId& y, Polarity s) const {
    auto p = link_polarity(gamma_, v, y);
    if (!p) return false;
    return cfg_.resolver == Resolver::kP21 || *p == opposite(s);
  }

  bool exists_valid(const NodeId& a, const NodeId& b) const {
    for (const Path& p : enumerate_paths(gamma_, a, b, PathKind::kPotential)) {
      if (p.polarity() == Polarity::kPositive && valid(p)) return true;
    }
    return false;
  }

  // Source `v` is more specific than source `w`, seen from x.
  bool better(const NodeId& x, const NodeId& v, const NodeId& w) const {
    if (v == x) return exists_valid(x, w);
    if (cfg_.validity == PreclusionValidity::kSplit) {
      return exists_valid(x, v) && exists_valid(v, w);
    }
    for (const Path& p : enumerate_paths(gamma_, x, w, PathKind::kPotential)) {
      if (p.polarity() == Polarity::kPositive && contains_node(p, v) &&
          valid(p)) {
        return true;
      }
    }
    return false;
  }

  const Diagram& gamma_;
  const PolicyConfig& cfg_;
};

}  // namespace

std::vector<Path> enumerate_paths(const Diagram& gamma, const NodeId& x,
                                  const NodeId& y, PathKind kind) {
  guard(gamma);
  gamma.index(x);
  gamma.index(y);
  std::vector<Path> all;
  for (const Link& l : gamma.links()) {
    if (l.source != x) continue;
    std::vector<Link> steps{l};
    extend(gamma, y, steps, all);
  }
  if (kind == PathKind::kPotential) {
    std::erase_if(all,
                  [](const Path& p) { return p.kind() != PathKind::kPotential; });
  }
  std::sort(all.begin(), all.end());
  return all;
}

bool naive_is_valid(const Diagram& gamma, const Path& sigma,
                    const PolicyConfig& cfg) {
  guard(gamma);
  for (const Link& l : sigma.steps()) {
    if (!gamma.contains(l)) {
      throw Error(ErrorCode::kPathNotInDiagram,
                  "link '" + to_string(l) + "' is not in the diagram");
    }
  }
  return Naive(gamma, cfg).valid(sigma);
}

Verdict naive_verdict(const Diagram& gamma, const NodeId& x, const NodeId& y,
                      const PolicyConfig& cfg) {
  Naive naive(gamma, cfg);
  bool positive = false;
  bool negative = false;
  for (const Path& p : enumerate_paths(gamma, x, y, PathKind::kPotential)) {
    if (!naive.valid(p)) continue;
    (p.polarity() == Polarity::kPositive ? positive : negative) = true;
  }
  if (positive && negative) {
    throw std::logic_error("oracle found both polarities for " + x.str() +
                           ".." + y.str());
  }
  if (positive) return Verdict::kPositive;
  if (negative) return Verdict::kNegative;
  return Verdict::kNone;
}

Diagram random_net(std::mt19937_64& rng, const RandomNetOptions& opts) {
  std::uniform_int_distribution<std::size_t> size_dist(opts.min_nodes,
                                                       opts.max_nodes);
  const std::size_t n = size_dist(rng);
  std::vector<NodeId> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.emplace_back("n" + std::to_string(i));
  }
  std::shuffle(names.begin(), names.end(), rng);  // topological order
  std::bernoulli_distribution linked(opts.link_probability);
  std::bernoulli_distribution coin(0.5);
  std::vector<Link> links;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!linked(rng)) continue;
      links.push_back({names[i], names[j],
                       coin(rng) ? Polarity::kPositive : Polarity::kNegative});
    }
  }
  // Repair: drop the negative half of any hard contradiction.
  std::erase_if(links, [&](const Link& l) {
    return l.polarity == Polarity::kNegative &&
           std::any_of(links.begin(), links.end(), [&](const Link& o) {
             return o.source == l.source && o.target == l.target &&
                    o.polarity == Polarity::kPositive;
           });
  });
  return Diagram::build(names, std::move(links));
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("ORACLE_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  return std::stoull(env);
}

}  // namespace inet::oracle
