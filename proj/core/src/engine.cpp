#include "inet/engine.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "evaluator.hpp"

namespace inet {

std::string to_string(const PolicyConfig& cfg) {
  std::string out;
  out += cfg.scope == PreclusionScope::kOffPath ? "off-path" : "on-path";
  out += cfg.validity == PreclusionValidity::kSplit ? "/split" : "/total";
  out += cfg.scepticism == Scepticism::kDirect ? "/sceptical" : "/extensions";
  out += cfg.resolver == Resolver::kP21 ? "/p21" : "/p22";
  return out;
}

const char* to_string(Resolution r) {
  switch (r) {
    case Resolution::kPositive: return "Positive";
    case Resolution::kNegative: return "Negative";
    case Resolution::kUndecided: return "Undecided";
  }
  return "Undecided";
}

namespace {

Path to_path(const Diagram& gamma, const std::vector<std::size_t>& nodes) {
  std::vector<Link> steps;
  steps.reserve(nodes.size() - 1);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    steps.push_back(gamma.link_between(nodes[i - 1], nodes[i]));
  }
  return Path(std::move(steps));
}

// Node indices of sigma, checking every step against the diagram.
std::vector<std::size_t> resolve_path(const Diagram& gamma, const Path& sigma) {
  std::vector<std::size_t> nodes;
  nodes.reserve(sigma.length() + 1);
  for (const Link& l : sigma.steps()) {
    if (!gamma.contains(l)) {
      throw Error(ErrorCode::kPathNotInDiagram,
                  "link '" + to_string(l) + "' is not in the diagram",
                  {l.source.str(), l.target.str()});
    }
  }
  for (const NodeId& id : sigma.nodes()) nodes.push_back(*gamma.find(id));
  return nodes;
}

Conclusion make_conclusion(const Diagram& gamma,
                           const detail::Evaluator& eval, std::size_t x,
                           std::size_t y) {
  Conclusion c{gamma.node(x), gamma.node(y), Verdict::kNone, {}, std::nullopt};
  if (x == y) return c;
  const bool p = eval.has_valid(x, y, Polarity::kPositive);
  const bool n = eval.has_valid(x, y, Polarity::kNegative);
  if (!p && !n) return c;
  if (p && n) {
    throw std::logic_error("both polarities valid for " + gamma.node(x).str() +
                           ".." + gamma.node(y).str());
  }
  const Polarity pol = p ? Polarity::kPositive : Polarity::kNegative;
  c.verdict = verdict_of(pol);
  for (const auto& nodes : eval.valid_paths(x, y, pol)) {
    c.witnesses.push_back(to_path(gamma, nodes));
  }
  std::sort(c.witnesses.begin(), c.witnesses.end());
  if (gamma.link(x, y)) {
    c.strength = gamma.node(x);
  } else {
    std::optional<NodeId> best;
    for (const Path& w : c.witnesses) {
      const NodeId& src = w.steps().back().source;
      if (!best || src < *best) best = src;
    }
    c.strength = best;
  }
  return c;
}

}  // namespace

// -- Engine -----------------------------------------------------------------

Engine::Engine(Diagram gamma, PolicyConfig cfg,
               std::optional<std::uint64_t> tie_shuffle_seed)
    : gamma_(std::make_shared<const Diagram>(std::move(gamma))), cfg_(cfg) {
  if (cfg_.scepticism == Scepticism::kExtensions) {
    throw Error(ErrorCode::kUnsupportedPolicy,
                "extension-based scepticism: use compute_extensions");
  }
  eval_ = std::make_unique<detail::Evaluator>(*gamma_, cfg_);
  for (const detail::PairRef& pr :
       detail::pairs_by_degree(*gamma_, tie_shuffle_seed)) {
    eval_->evaluate_pair(pr.x, pr.y);
  }
}

Engine::~Engine() = default;
Engine::Engine(Engine&&) noexcept = default;
Engine& Engine::operator=(Engine&&) noexcept = default;

bool Engine::is_valid(const Path& sigma) const {
  const std::vector<std::size_t> nodes = resolve_path(*gamma_, sigma);
  if (sigma.kind() != PathKind::kPotential) return false;
  return eval_->path_valid(nodes);
}

Verdict Engine::verdict(std::size_t x, std::size_t y) const {
  if (eval_->has_valid(x, y, Polarity::kPositive)) return Verdict::kPositive;
  if (eval_->has_valid(x, y, Polarity::kNegative)) return Verdict::kNegative;
  return Verdict::kNone;
}

bool Engine::has_valid_path(std::size_t x, std::size_t y, Polarity p) const {
  return eval_->has_valid(x, y, p);
}

bool Engine::step_valid(std::size_t x, std::size_t u, std::size_t y) const {
  return eval_->step(x, u, y);
}

Conclusion Engine::query(const NodeId& x, const NodeId& y) const {
  return make_conclusion(*gamma_, *eval_, gamma_->index(x), gamma_->index(y));
}

std::vector<Path> Engine::valid_paths(const NodeId& x, const NodeId& y,
                                      Polarity p) const {
  const std::size_t xi = gamma_->index(x);
  const std::size_t yi = gamma_->index(y);
  std::vector<Path> out;
  for (const auto& nodes : eval_->valid_paths(xi, yi, p)) {
    out.push_back(to_path(*gamma_, nodes));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Link> Engine::signposts(const NodeId& x, const NodeId& y) const {
  const Diagram& g = *gamma_;
  const std::size_t xi = g.index(x);
  const std::size_t yi = g.index(y);
  std::set<Link> on_valid;
  for (Polarity p : {Polarity::kPositive, Polarity::kNegative}) {
    for (const auto& nodes : eval_->valid_paths(xi, yi, p)) {
      for (std::size_t i = 1; i < nodes.size(); ++i) {
        on_valid.insert(g.link_between(nodes[i - 1], nodes[i]));
      }
    }
  }
  std::vector<Link> out;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (u != xi && !eval_->has_valid(xi, u, Polarity::kPositive)) continue;
    for (std::size_t w : g.successors(u)) {
      if (w != yi && !g.reaches(w, yi)) continue;
      Link l = g.link_between(u, w);
      if (!on_valid.contains(l)) out.push_back(std::move(l));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_valid(const Diagram& gamma, const Path& sigma,
              const PolicyConfig& cfg) {
  return Engine(gamma, cfg).is_valid(sigma);
}

Conclusion query(const Diagram& gamma, const NodeId& x, const NodeId& y,
                 const PolicyConfig& cfg) {
  return Engine(gamma, cfg).query(x, y);
}

std::vector<Link> signposts(const Diagram& gamma, const NodeId& x,
                            const NodeId& y, const PolicyConfig& cfg) {
  return Engine(gamma, cfg).signposts(x, y);
}

std::vector<Conclusion> all_conclusions(const Engine& engine) {
  std::vector<Conclusion> out;
  const Diagram& g = engine.diagram();
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      if (x == y || engine.verdict(x, y) == Verdict::kNone) continue;
      out.push_back(engine.query(g.node(x), g.node(y)));
    }
  }
  return out;
}

// -- Source resolution ------------------------------------------------------

ResolvedSources resolve_sources(const std::vector<SourceReport>& reports,
                                const BetterRelation& better,
                                Resolver resolver) {
  if (reports.empty()) {
    throw Error(ErrorCode::kEmptyReportSet, "no source reports to resolve");
  }
  ResolvedSources out;
  for (const SourceReport& r : reports) {
    const bool dominated =
        std::any_of(reports.begin(), reports.end(), [&](const SourceReport& o) {
          if (o.source == r.source) return false;
          if (resolver == Resolver::kP22 && o.claim == r.claim) return false;
          return better(o.source, r.source);
        });
    if (!dominated) out.survivors.push_back(r);
  }
  std::sort(out.survivors.begin(), out.survivors.end());
  out.survivors.erase(std::unique(out.survivors.begin(), out.survivors.end()),
                      out.survivors.end());
  if (out.survivors.empty()) {
    out.resolution = Resolution::kUndecided;
    return out;
  }
  const Polarity first = out.survivors.front().claim;
  const bool agree = std::all_of(
      out.survivors.begin(), out.survivors.end(),
      [&](const SourceReport& r) { return r.claim == first; });
  if (!agree) {
    out.resolution = Resolution::kUndecided;
  } else {
    out.resolution = first == Polarity::kPositive ? Resolution::kPositive
                                                  : Resolution::kNegative;
  }
  return out;
}

BetterRelation relation_from_pairs(std::set<std::pair<NodeId, NodeId>> pairs) {
  auto shared = std::make_shared<const std::set<std::pair<NodeId, NodeId>>>(
      std::move(pairs));
  return [shared](const NodeId& a, const NodeId& b) {
    return shared->contains({a, b});
  };
}

// -- Extensions -------------------------------------------------------------

namespace {

Extension collect_extension(const Diagram& gamma,
                            const detail::Evaluator& eval) {
  Extension ext;
  for (std::size_t x = 0; x < gamma.size(); ++x) {
    for (std::size_t y = 0; y < gamma.size(); ++y) {
      if (x == y || !gamma.reaches(x, y)) continue;
      for (Polarity p : {Polarity::kPositive, Polarity::kNegative}) {
        for (const auto& nodes : eval.valid_paths(x, y, p)) {
          ext.valid_paths.push_back(to_path(gamma, nodes));
        }
      }
      Conclusion c = make_conclusion(gamma, eval, x, y);
      if (c.verdict != Verdict::kNone) ext.conclusions.push_back(std::move(c));
    }
  }
  std::sort(ext.valid_paths.begin(), ext.valid_paths.end());
  return ext;
}

}  // namespace

ExtensionSet compute_extensions(const Diagram& gamma, PolicyConfig cfg,
                                std::size_t max_extensions) {
  cfg.scepticism = Scepticism::kExtensions;
  const std::vector<detail::PairRef> order =
      detail::pairs_by_degree(gamma, std::nullopt);

  ExtensionSet result;
  // Depth-first over branches; each stack entry resumes at `next`.
  struct Branch {
    detail::Evaluator eval;
    std::size_t next;
  };
  std::vector<Branch> stack;
  stack.push_back({detail::Evaluator(gamma, cfg), 0});
  while (!stack.empty()) {
    Branch b = std::move(stack.back());
    stack.pop_back();
    for (; b.next < order.size(); ++b.next) {
      const auto& [deg, x, y] = order[b.next];
      if (!b.eval.has_conflict(x, y)) {
        b.eval.commit_pair(x, y, std::nullopt);
        continue;
      }
      // The positive branch continues here; the negative one is deferred so
      // extensions come out positive-first.
      Branch other{b.eval, b.next + 1};
      other.eval.commit_pair(x, y, Polarity::kNegative);
      stack.push_back(std::move(other));
      b.eval.commit_pair(x, y, Polarity::kPositive);
    }
    result.extensions.push_back(collect_extension(gamma, b.eval));
    if (result.extensions.size() > max_extensions) {
      throw Error(ErrorCode::kUnsupportedPolicy,
                  "more than " + std::to_string(max_extensions) +
                      " extensions");
    }
  }

  // Intersection of conclusion sets.
  using Key = std::tuple<NodeId, NodeId, Verdict>;
  std::map<Key, std::pair<std::size_t, std::set<Path>>> tally;
  for (const Extension& ext : result.extensions) {
    for (const Conclusion& c : ext.conclusions) {
      auto& slot = tally[{c.subject, c.predicate, c.verdict}];
      ++slot.first;
      slot.second.insert(c.witnesses.begin(), c.witnesses.end());
    }
  }
  for (auto& [key, slot] : tally) {
    if (slot.first != result.extensions.size()) continue;
    Conclusion c{std::get<0>(key), std::get<1>(key), std::get<2>(key),
                 {slot.second.begin(), slot.second.end()}, std::nullopt};
    const std::size_t x = gamma.index(c.subject);
    const std::size_t y = gamma.index(c.predicate);
    if (gamma.link(x, y)) {
      c.strength = c.subject;
    } else {
      for (const Path& w : c.witnesses) {
        const NodeId& src = w.steps().back().source;
        if (!c.strength || src < *c.strength) c.strength = src;
      }
    }
    result.intersection.push_back(std::move(c));
  }
  return result;
}

}  // namespace inet
