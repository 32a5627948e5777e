#pragma once

// Weighted oriented graphs: finite simple underlying graph, every edge given
// one direction, positive integer vertex weights.  A vertex with only
// out-edges (a source) always has weight 1; build() normalizes violating
// inputs and records that it did.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "woi/monomial.hpp"

namespace woi {

struct graph_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class WeightedOrientedGraph {
public:
  // Vertex order defines the canonical variable order.  Edges are (tail,
  // head) pairs of vertex names.  Rejects loops, duplicate or anti-parallel
  // edges, nonpositive weights, unknown endpoints.
  WeightedOrientedGraph(std::vector<std::string> vertex_names,
                        std::vector<int> weights,
                        std::vector<std::pair<std::string, std::string>> edges);

  const UniverseRef& universe() const noexcept { return universe_; }
  std::size_t vertex_count() const noexcept { return universe_->size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::string& vertex_name(std::size_t v) const {
    return universe_->name(v);
  }
  int weight(std::size_t v) const { return weights_.at(v); }
  const std::vector<int>& weights() const noexcept { return weights_; }
  // Sorted by (tail, head).
  const std::vector<std::pair<std::size_t, std::size_t>>& edges()
      const noexcept {
    return edges_;
  }
  bool has_edge(std::size_t tail, std::size_t head) const;
  // True iff build() had to reset some source's weight to 1.
  bool source_weights_normalized() const noexcept {
    return source_weights_normalized_;
  }

  const std::vector<std::size_t>& out_neighbors(std::size_t v) const {
    return out_.at(v);
  }
  const std::vector<std::size_t>& in_neighbors(std::size_t v) const {
    return in_.at(v);
  }
  // Underlying (undirected) neighbors.
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const;

  // Vertices of weight >= 2.
  std::vector<std::size_t> v_plus() const;
  // No in-edges and at least one out-edge.
  std::vector<std::size_t> sources() const;
  // No out-edges and at least one in-edge.
  std::vector<std::size_t> sinks() const;
  // Every vertex of weight >= 2 is a sink.
  bool is_sink_only_vplus() const;

  // Same vertices and weights, different weight vector (internal helper for
  // the weight transforms; revalidates the source rule).
  WeightedOrientedGraph with_weights(std::vector<int> weights) const;

private:
  UniverseRef universe_;
  std::vector<int> weights_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> out_, in_;
  bool source_weights_normalized_ = false;
};

// Induced subgraph on V \ drop; vertices that are sources of the subgraph
// get weight 1, everything else keeps its weight.  Fresh universe (fewer
// names, original order).
WeightedOrientedGraph delete_vertices(const WeightedOrientedGraph& g,
                                      const std::vector<std::size_t>& drop);

// Per-edge orientation relative to a family's natural edge order: flag true
// flips that edge.
struct Orientation {
  enum class Kind { Natural, Seeded, Explicit } kind = Kind::Natural;
  std::uint64_t seed = 0;
  std::vector<bool> flips;

  static Orientation natural() { return {}; }
  static Orientation seeded(std::uint64_t seed) {
    return {Kind::Seeded, seed, {}};
  }
  static Orientation explicit_flips(std::vector<bool> flips) {
    return {Kind::Explicit, 0, std::move(flips)};
  }

  // Materializes the per-edge flags for a family with `edge_count` edges.
  std::vector<bool> resolve(std::size_t edge_count) const;
};

// Cycle x1..xn, natural edges (x1,x2),...,(xn,x1).
WeightedOrientedGraph make_cycle(std::size_t n, std::vector<int> weights,
                                 const Orientation& orient = {});
// Path x0 -> x1 -> ... -> xn (length n >= 1), naturally oriented.
WeightedOrientedGraph make_path(std::size_t length, std::vector<int> weights);
// Star with hub x0 and spokes x1..xn; natural orientation points every spoke
// out of the hub, flips point into it.  weights = (hub, spoke 1, ...).
WeightedOrientedGraph make_star(std::size_t n, std::vector<int> weights,
                                const Orientation& orient = {});
// Two naturally oriented odd cycles, lengths 2n+1 and 2m+1, glued at x1:
// x1..x_{2n+1} and x1,y2..y_{2m+1}.  weights = (x-cycle, then y2..).
WeightedOrientedGraph make_clique_sum(std::size_t n, std::size_t m,
                                      std::vector<int> weights);
// Complete multipartite: parts of the given sizes, vertices x1..xN part by
// part, every cross-part pair adjacent.  Natural edge order: part pairs
// (i < j), then vertex index; the natural direction points from the lower
// part to the higher.
WeightedOrientedGraph make_complete_multipartite(
    std::vector<std::size_t> part_sizes, std::vector<int> weights,
    const Orientation& orient = {});

// Resets every weighted sink's weight to 1; returns the reduced graph and
// the (sorted) list of affected vertices.
std::pair<WeightedOrientedGraph, std::vector<std::size_t>> sink_weights_to_one(
    const WeightedOrientedGraph& g);
// Caps every weight at 2.
WeightedOrientedGraph clamp_weights_to_two(const WeightedOrientedGraph& g);

}  // namespace woi
