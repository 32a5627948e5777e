#pragma once

// Family sweep harness: builds a deterministic roster of graphs, evaluates
// each theorem instance (optionally across threads), and aggregates a
// replayable report.  Every instance embeds its serialized graph, so any
// verdict can be reproduced with `compare` alone.

#include <cstdint>

#include "woi/json_io.hpp"

namespace woi {

struct SweepOptions {
  unsigned jobs = 1;  // instances evaluated concurrently when > 1
  std::size_t cap = kEnumerationCap;
};

struct InstanceResult {
  std::string label;
  Json graph;
  bool hypothesis = false;
  std::vector<unsigned> tested_s;
  std::vector<bool> equal_by_s;
  TheoremVerdict::Outcome outcome = TheoremVerdict::Outcome::Satisfied;
  std::string detail;
};

struct SweepReport {
  std::string family;
  Json params;
  std::vector<InstanceResult> instances;
  std::size_t satisfied = 0, violated = 0, skipped = 0;

  bool pass() const { return violated == 0; }
  Json to_json(bool include_instances = true) const;
};

// Odd-cycle biconditional on C_n: every natural-orientation weight pattern
// over `alphabet`, plus `seeded_orientations` non-natural seeded instances.
SweepReport sweep_odd_cycle(std::size_t n, const std::vector<int>& alphabet,
                            std::size_t seeded_orientations,
                            std::uint64_t seed, unsigned s_max,
                            const SweepOptions& opts = {});

// Clique-sum biconditional on C_{2n+1} + C_{2m+1} glued at x1, natural
// orientation, every weight pattern over `alphabet`.
SweepReport sweep_clique_sum(std::size_t n, std::size_t m,
                             const std::vector<int>& alphabet, unsigned s_max,
                             const SweepOptions& opts = {});

// Complete multipartite biconditional at s=2: for each part-size config,
// `samples` seeded orientation/weight draws.
SweepReport sweep_multipartite(
    const std::vector<std::vector<std::size_t>>& part_configs,
    const std::vector<int>& alphabet, std::size_t samples, std::uint64_t seed,
    const SweepOptions& opts = {});

// Naturally oriented cycle weight dichotomy over {1,2}^n: all weights
// nontrivial => equal at s=2 and 3, mixed => unequal already at s=2,
// all-trivial patterns are skipped.
SweepReport sweep_cycle_dichotomy(const std::vector<std::size_t>& sizes,
                                  const SweepOptions& opts = {});

// Stars: `samples` seeded orientation/weight draws per order; equality must
// hold at every s in 2..s_max.
SweepReport sweep_star(const std::vector<std::size_t>& orders,
                       const std::vector<int>& alphabet, std::size_t samples,
                       std::uint64_t seed, unsigned s_max,
                       const SweepOptions& opts = {});

// Natural paths: full cartesian of interior weights over `interior` and
// final-endpoint weight over `ends`; equality at every s in 2..s_max.
SweepReport sweep_path(const std::vector<std::size_t>& lengths,
                       const std::vector<int>& interior,
                       const std::vector<int>& ends, unsigned s_max,
                       const SweepOptions& opts = {});

// Random-graph oracle/invariant suite: `count` seeded graphs with up to
// `max_n` vertices and weights up to `max_weight`; per graph checks pipeline
// agreement and containment for s=1..s_max, the decomposition identity,
// cover/partition laws, radicals of irreducible ideals, and strong-cover
// invariance under the two weight transforms.
SweepReport sweep_random_oracle(std::size_t count, std::size_t max_n,
                                int max_weight, unsigned s_max,
                                std::uint64_t seed,
                                const SweepOptions& opts = {});

}  // namespace woi
