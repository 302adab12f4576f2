#include "evaluator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace inet::detail {

std::vector<PairRef> pairs_by_degree(const Diagram& gamma,
                                     std::optional<std::uint64_t> seed) {
  std::vector<PairRef> pairs;
  const std::size_t n = gamma.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (gamma.reaches(x, y)) pairs.push_back({gamma.longest(x, y), x, y});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const PairRef& a, const PairRef& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  if (seed) {
    std::mt19937_64 rng(*seed);
    auto begin = pairs.begin();
    while (begin != pairs.end()) {
      auto end = std::find_if(begin, pairs.end(), [&](const PairRef& p) {
        return p.degree != begin->degree;
      });
      std::shuffle(begin, end, rng);
      begin = end;
    }
  }
  return pairs;
}

Evaluator::Evaluator(const Diagram& gamma, PolicyConfig cfg)
    : gamma_(&gamma),
      cfg_(cfg),
      n_(gamma.size()),
      on_path_(cfg.scope == PreclusionScope::kOnPath) {
  if (on_path_ && n_ > 64) {
    throw Error(ErrorCode::kUnsupportedPolicy,
                "on-path preclusion supports at most 64 nodes");
  }
  step_.assign(n_ * n_ * n_, -1);
  pos_.assign(n_ * n_, -1);
  neg_.assign(n_ * n_, -1);
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      if (!gamma.reaches(x, y)) {
        pos_[x * n_ + y] = 0;
        neg_[x * n_ + y] = 0;
      }
    }
  }
}

bool Evaluator::has_valid(std::size_t x, std::size_t y, Polarity p) const {
  const std::int8_t v =
      (p == Polarity::kPositive ? pos_ : neg_)[x * n_ + y];
  if (v < 0) {
    throw std::logic_error("validity of " + gamma_->node(x).str() + ".." +
                           gamma_->node(y).str() +
                           " consulted before its degree was processed");
  }
  return v != 0;
}

bool Evaluator::step(std::size_t x, std::size_t u, std::size_t y) const {
  const std::int8_t v = step_[cell(x, u, y)];
  if (v < 0) {
    throw std::logic_error("step " + gamma_->node(u).str() + "-" +
                           gamma_->node(y).str() + " from " +
                           gamma_->node(x).str() +
                           " consulted before its degree was processed");
  }
  return v != 0;
}

bool Evaluator::dominates(std::size_t x, std::size_t better,
                          std::size_t worse) const {
  if (better == x) return has_valid(x, worse, Polarity::kPositive);
  if (cfg_.validity == PreclusionValidity::kSplit) {
    return has_valid(x, better, Polarity::kPositive) &&
           has_valid(better, worse, Polarity::kPositive);
  }
  return valid_through(x, better, worse);
}

bool Evaluator::source_counts(std::size_t v, std::size_t y,
                              Polarity against) const {
  if (cfg_.resolver == Resolver::kP21) return true;
  return gamma_->has_link(v, y, opposite(against));
}

// Condition (2): no better source contradicts the last step.
bool Evaluator::cond_not_precluded(std::size_t x, std::size_t u,
                                   std::size_t y) const {
  if (on_path_) return true;  // checked against the path's own nodes
  const Polarity s = *gamma_->link(u, y);
  for (std::size_t v : gamma_->predecessors(y)) {
    if (v == u || !source_counts(v, y, s)) continue;
    if (dominates(x, v, u)) return false;
  }
  return true;
}

// Condition (3): every accessible contradicting source is itself dominated.
bool Evaluator::cond_conflicts_precluded(std::size_t x, std::size_t u,
                                         std::size_t y) const {
  const Polarity s = *gamma_->link(u, y);
  for (std::size_t v : gamma_->predecessors(y)) {
    if (v == x || !gamma_->has_link(v, y, opposite(s))) continue;
    if (!has_valid(x, v, Polarity::kPositive)) continue;
    bool precluded = false;
    for (std::size_t z : gamma_->predecessors(y)) {
      if (z == v || !source_counts(z, y, opposite(s))) continue;
      if (dominates(x, z, v)) {
        precluded = true;
        break;
      }
    }
    if (!precluded) return false;
  }
  return true;
}

bool Evaluator::allowed(std::size_t x, std::size_t p, std::size_t q,
                        Mask mask) const {
  if (p == x) return true;
  if (!step(x, p, q)) return false;
  if (!on_path_) return true;
  const Polarity s = *gamma_->link(p, q);
  for (std::size_t v : gamma_->predecessors(q)) {
    if (v == p || (mask & bit(v)) == 0) continue;
    if (cfg_.resolver == Resolver::kP21 ||
        gamma_->has_link(v, q, opposite(s))) {
      return false;
    }
  }
  return true;
}

namespace {

struct State {
  std::size_t node;
  std::uint64_t mask;
  bool passed;
  bool operator==(const State&) const = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const {
    std::size_t h = std::hash<std::uint64_t>{}(s.mask);
    h ^= s.node * 0x9e3779b97f4a7c15ULL + (s.passed ? 1 : 0) + (h << 6) +
         (h >> 2);
    return h;
  }
};

}  // namespace

bool Evaluator::search(std::size_t x, std::size_t target, Polarity want,
                       std::optional<std::size_t> via) const {
  if (via && *via == target) return false;
  std::unordered_set<State, StateHash> seen;
  std::vector<State> stack;
  State start{x, bit(x), !via || *via == x};
  stack.push_back(start);
  seen.insert(start);
  while (!stack.empty()) {
    const State cur = stack.back();
    stack.pop_back();
    for (std::size_t q : gamma_->successors(cur.node)) {
      const Polarity s = *gamma_->link(cur.node, q);
      if (q == target) {
        if (s == want && cur.passed && allowed(x, cur.node, q, cur.mask)) {
          return true;
        }
        continue;
      }
      if (s != Polarity::kPositive || !gamma_->reaches(q, target)) continue;
      if (!allowed(x, cur.node, q, cur.mask)) continue;
      State next{q, cur.mask | bit(q), cur.passed || (via && q == *via)};
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return false;
}

bool Evaluator::valid_through(std::size_t x, std::size_t via,
                              std::size_t target) const {
  return search(x, target, Polarity::kPositive, via);
}

void Evaluator::settle(std::size_t x, std::size_t y) {
  pos_[x * n_ + y] = search(x, y, Polarity::kPositive, std::nullopt) ? 1 : 0;
  neg_[x * n_ + y] = search(x, y, Polarity::kNegative, std::nullopt) ? 1 : 0;
}

void Evaluator::evaluate_pair(std::size_t x, std::size_t y) {
  for (std::size_t u : gamma_->predecessors(y)) {
    if (u == x || !gamma_->reaches(x, u)) continue;
    const bool ok =
        cond_not_precluded(x, u, y) && cond_conflicts_precluded(x, u, y);
    step_[cell(x, u, y)] = ok ? 1 : 0;
  }
  settle(x, y);
}

bool Evaluator::has_conflict(std::size_t x, std::size_t y) {
  if (gamma_->link(x, y)) return false;
  for (std::size_t u : gamma_->predecessors(y)) {
    if (u == x || !gamma_->reaches(x, u)) continue;
    step_[cell(x, u, y)] = cond_not_precluded(x, u, y) ? 1 : 0;
  }
  return search(x, y, Polarity::kPositive, std::nullopt) &&
         search(x, y, Polarity::kNegative, std::nullopt);
}

void Evaluator::commit_pair(std::size_t x, std::size_t y,
                            std::optional<Polarity> accept) {
  if (!accept) {
    evaluate_pair(x, y);
    return;
  }
  for (std::size_t u : gamma_->predecessors(y)) {
    if (u == x || !gamma_->reaches(x, u)) continue;
    if (gamma_->has_link(u, y, opposite(*accept))) step_[cell(x, u, y)] = 0;
  }
  settle(x, y);
}

bool Evaluator::path_valid(const std::vector<std::size_t>& nodes) const {
  const std::size_t x = nodes.front();
  Mask mask = bit(x);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!allowed(x, nodes[i - 1], nodes[i], mask)) return false;
    mask |= bit(nodes[i]);
  }
  return true;
}

std::vector<std::vector<std::size_t>> Evaluator::valid_paths(
    std::size_t x, std::size_t y, Polarity want) const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path{x};
  auto dfs = [&](auto&& self, Mask mask) -> void {
    const std::size_t p = path.back();
    for (std::size_t q : gamma_->successors(p)) {
      const Polarity s = *gamma_->link(p, q);
      if (q == y) {
        if (s == want && allowed(x, p, q, mask)) {
          path.push_back(q);
          out.push_back(path);
          path.pop_back();
        }
        continue;
      }
      if (s != Polarity::kPositive || !gamma_->reaches(q, y)) continue;
      if (!allowed(x, p, q, mask)) continue;
      path.push_back(q);
      self(self, mask | bit(q));
      path.pop_back();
    }
  };
  dfs(dfs, bit(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace inet::detail
