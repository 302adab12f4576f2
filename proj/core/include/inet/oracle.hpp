#pragma once

// Brute-force reference implementations. Nothing here shares code with the
// engine: paths are enumerated exhaustively and validity is the inductive
// definition transcribed literally, without memoization.

#include <cstdint>
#include <random>
#include <vector>

#include "inet/diagram.hpp"
#include "inet/policy.hpp"

namespace inet::oracle {

inline constexpr std::size_t kMaxNodes = 12;

// All generalized (or potential) paths from x to y, sorted. Throws
// kDiagramTooLarge above kMaxNodes.
std::vector<Path> enumerate_paths(const Diagram& gamma, const NodeId& x,
                                  const NodeId& y, PathKind kind);

bool naive_is_valid(const Diagram& gamma, const Path& sigma,
                    const PolicyConfig& cfg = {});

// Verdict from naive validity over all potential x..y paths.
Verdict naive_verdict(const Diagram& gamma, const NodeId& x, const NodeId& y,
                      const PolicyConfig& cfg = {});

struct RandomNetOptions {
  std::size_t min_nodes = 2;
  std::size_t max_nodes = 8;
  double link_probability = 0.25;
};

// Random DAG: node names n0..n{k-1} in a random topological order; every
// forward ordered pair is linked with `link_probability`, polarity by a fair
// coin. Hard contradictions cannot arise (one draw per pair); should a
// generator variant produce one, the negative link is dropped.
Diagram random_net(std::mt19937_64& rng, const RandomNetOptions& opts = {});

// Seed from the ORACLE_SEED environment variable, else `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace inet::oracle
