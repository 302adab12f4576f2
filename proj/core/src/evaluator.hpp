#pragma once

// Internal: the degree-ordered validity tables shared by the direct engine,
// the extension enumerator and the reactive compiler.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "inet/diagram.hpp"
#include "inet/policy.hpp"

namespace inet::detail {

struct PairRef {
  std::size_t degree;
  std::size_t x;
  std::size_t y;
};

// Every (x, y) with a generalized path from x to y, sorted by (degree, x, y).
// With a seed, pairs of equal degree are shuffled.
std::vector<PairRef> pairs_by_degree(const Diagram& gamma,
                                     std::optional<std::uint64_t> seed);

class Evaluator {
 public:
  Evaluator(const Diagram& gamma, PolicyConfig cfg);

  const Diagram& diagram() const { return *gamma_; }
  const PolicyConfig& policy() const { return cfg_; }
  std::size_t size() const { return n_; }

  // Direct scepticism: step condition = (2) and (3).
  void evaluate_pair(std::size_t x, std::size_t y);

  // Extension mode. has_conflict sets tentative step values from (2) alone
  // and reports whether both polarities have candidates; commit_pair then
  // keeps the accepted side (or, without a fork, falls back to (2)+(3)).
  bool has_conflict(std::size_t x, std::size_t y);
  void commit_pair(std::size_t x, std::size_t y,
                   std::optional<Polarity> accept);

  // Whether a valid path of the given polarity runs from x to y.
  bool has_valid(std::size_t x, std::size_t y, Polarity p) const;

  // The origin-relative step condition for the link u -> y (u != x). For
  // on-path preclusion the path-dependent part is not included.
  bool step(std::size_t x, std::size_t u, std::size_t y) const;

  // Steps of a path starting at its origin; first step always valid.
  bool path_valid(const std::vector<std::size_t>& nodes) const;

  // All valid paths from x to y of polarity p, as node sequences, in
  // lexicographic order of node names.
  std::vector<std::vector<std::size_t>> valid_paths(std::size_t x,
                                                    std::size_t y,
                                                    Polarity p) const;

  // Valid positive path x .. via .. target (via strictly before target).
  bool valid_through(std::size_t x, std::size_t via, std::size_t target) const;

 private:
  using Mask = std::uint64_t;

  bool cond_not_precluded(std::size_t x, std::size_t u, std::size_t y) const;
  bool cond_conflicts_precluded(std::size_t x, std::size_t u,
                                std::size_t y) const;
  // Whether `better` is a more specific source than `worse` as seen from x.
  bool dominates(std::size_t x, std::size_t better, std::size_t worse) const;
  bool source_counts(std::size_t v, std::size_t y, Polarity against) const;

  bool allowed(std::size_t x, std::size_t p, std::size_t q, Mask mask) const;
  bool search(std::size_t x, std::size_t target, Polarity want,
              std::optional<std::size_t> via) const;
  void settle(std::size_t x, std::size_t y);

  Mask bit(std::size_t v) const {
    return on_path_ ? (Mask{1} << v) : Mask{0};
  }

  std::size_t cell(std::size_t x, std::size_t u, std::size_t y) const {
    return (x * n_ + u) * n_ + y;
  }

  const Diagram* gamma_;
  PolicyConfig cfg_;
  std::size_t n_;
  bool on_path_;
  std::vector<std::int8_t> step_;  // -1 undecided
  std::vector<std::int8_t> pos_;
  std::vector<std::int8_t> neg_;
};

}  // namespace inet::detail
