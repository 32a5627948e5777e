#include "woi/graph.hpp"

#include <algorithm>
#include <set>

#include "woi/rng.hpp"

namespace woi {

WeightedOrientedGraph::WeightedOrientedGraph(
    std::vector<std::string> vertex_names, std::vector<int> weights,
    std::vector<std::pair<std::string, std::string>> edges)
    : universe_(make_universe(std::move(vertex_names))),
      weights_(std::move(weights)) {
  const std::size_t n = universe_->size();
  if (weights_.size() != n)
    throw graph_error("weight list length does not match vertex count");
  for (std::size_t v = 0; v < n; ++v)
    if (weights_[v] < 1)
      throw graph_error("vertex " + universe_->name(v) +
                        " has nonpositive weight");

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [tail_name, head_name] : edges) {
    auto tail = universe_->find(tail_name);
    auto head = universe_->find(head_name);
    if (!tail || !head)
      throw graph_error("edge endpoint is not a vertex: (" + tail_name + ", " +
                        head_name + ")");
    if (*tail == *head)
      throw graph_error("loop at vertex " + tail_name);
    if (!seen.emplace(*tail, *head).second)
      throw graph_error("duplicate edge (" + tail_name + ", " + head_name +
                        ")");
    if (seen.count({*head, *tail}))
      throw graph_error("anti-parallel edge pair between " + tail_name +
                        " and " + head_name);
    edges_.emplace_back(*tail, *head);
  }
  std::sort(edges_.begin(), edges_.end());

  out_.assign(n, {});
  in_.assign(n, {});
  for (auto [tail, head] : edges_) {
    out_[tail].push_back(head);
    in_[head].push_back(tail);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(out_[v].begin(), out_[v].end());
    std::sort(in_[v].begin(), in_[v].end());
  }

  // Sources carry weight 1 by definition; normalize and remember we did.
  for (std::size_t v = 0; v < n; ++v) {
    if (in_[v].empty() && !out_[v].empty() && weights_[v] != 1) {
      weights_[v] = 1;
      source_weights_normalized_ = true;
    }
  }
}

bool WeightedOrientedGraph::has_edge(std::size_t tail, std::size_t head) const {
  const auto& nb = out_.at(tail);
  return std::binary_search(nb.begin(), nb.end(), head);
}

std::vector<std::size_t> WeightedOrientedGraph::neighbors(
    std::size_t v) const {
  std::vector<std::size_t> nb(out_.at(v));
  nb.insert(nb.end(), in_.at(v).begin(), in_.at(v).end());
  std::sort(nb.begin(), nb.end());
  return nb;  // simple graph: out/in neighbor sets are disjoint
}

std::size_t WeightedOrientedGraph::degree(std::size_t v) const {
  return out_.at(v).size() + in_.at(v).size();
}

std::vector<std::size_t> WeightedOrientedGraph::v_plus() const {
  std::vector<std::size_t> vs;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (weights_[v] >= 2) vs.push_back(v);
  return vs;
}

std::vector<std::size_t> WeightedOrientedGraph::sources() const {
  std::vector<std::size_t> vs;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (in_[v].empty() && !out_[v].empty()) vs.push_back(v);
  return vs;
}

std::vector<std::size_t> WeightedOrientedGraph::sinks() const {
  std::vector<std::size_t> vs;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (out_[v].empty() && !in_[v].empty()) vs.push_back(v);
  return vs;
}

bool WeightedOrientedGraph::is_sink_only_vplus() const {
  for (std::size_t v : v_plus())
    if (!out_[v].empty()) return false;
  return true;
}

WeightedOrientedGraph WeightedOrientedGraph::with_weights(
    std::vector<int> weights) const {
  std::vector<std::pair<std::string, std::string>> named;
  named.reserve(edges_.size());
  for (auto [tail, head] : edges_)
    named.emplace_back(universe_->name(tail), universe_->name(head));
  return WeightedOrientedGraph(universe_->names(), std::move(weights),
                               std::move(named));
}

WeightedOrientedGraph delete_vertices(const WeightedOrientedGraph& g,
                                      const std::vector<std::size_t>& drop) {
  std::vector<bool> dropped(g.vertex_count(), false);
  for (std::size_t v : drop) {
    if (v >= g.vertex_count())
      throw std::out_of_range("delete_vertices: vertex index out of range");
    dropped[v] = true;
  }
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (dropped[v]) continue;
    keep.push_back(v);
    names.push_back(g.vertex_name(v));
    weights.push_back(g.weight(v));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<bool> has_in(g.vertex_count(), false),
      has_out(g.vertex_count(), false);
  for (auto [tail, head] : g.edges()) {
    if (dropped[tail] || dropped[head]) continue;
    edges.emplace_back(g.vertex_name(tail), g.vertex_name(head));
    has_out[tail] = true;
    has_in[head] = true;
  }
  // Sources of the subgraph take weight 1 (pre-applied so the constructor's
  // normalization flag stays meaningful for user input only).
  for (std::size_t i = 0; i < keep.size(); ++i) {
    std::size_t v = keep[i];
    if (!has_in[v] && has_out[v]) weights[i] = 1;
  }
  return WeightedOrientedGraph(std::move(names), std::move(weights),
                               std::move(edges));
}

std::vector<bool> Orientation::resolve(std::size_t edge_count) const {
  switch (kind) {
    case Kind::Natural:
      return std::vector<bool>(edge_count, false);
    case Kind::Seeded: {
      SeededRng rng(seed);
      std::vector<bool> out(edge_count);
      for (std::size_t i = 0; i < edge_count; ++i) out[i] = rng.coin();
      return out;
    }
    case Kind::Explicit:
      if (flips.size() != edge_count)
        throw graph_error("orientation flag count " +
                          std::to_string(flips.size()) + " does not match " +
                          std::to_string(edge_count) + " edges");
      return flips;
  }
  throw std::logic_error("unreachable");
}

namespace {

std::vector<std::string> numbered(std::size_t from, std::size_t to,
                                  const std::string& stem) {
  std::vector<std::string> names;
  for (std::size_t i = from; i <= to; ++i)
    names.push_back(stem + std::to_string(i));
  return names;
}

std::pair<std::string, std::string> directed(const std::string& a,
                                             const std::string& b,
                                             bool flip) {
  return flip ? std::make_pair(b, a) : std::make_pair(a, b);
}

}  // namespace

WeightedOrientedGraph make_cycle(std::size_t n, std::vector<int> weights,
                                 const Orientation& orient) {
  if (n < 3) throw graph_error("cycle needs at least 3 vertices");
  if (weights.size() != n)
    throw graph_error("cycle weight list must have length n");
  auto names = numbered(1, n, "x");
  auto flips = orient.resolve(n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back(directed(names[i], names[(i + 1) % n], flips[i]));
  return WeightedOrientedGraph(std::move(names), std::move(weights),
                               std::move(edges));
}

WeightedOrientedGraph make_path(std::size_t length, std::vector<int> weights) {
  if (length < 1) throw graph_error("path needs at least one edge");
  if (weights.size() != length + 1)
    throw graph_error("path weight list must have length n+1");
  auto names = numbered(0, length, "x");
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < length; ++i)
    edges.emplace_back(names[i], names[i + 1]);
  return WeightedOrientedGraph(std::move(names), std::move(weights),
                               std::move(edges));
}

WeightedOrientedGraph make_star(std::size_t n, std::vector<int> weights,
                                const Orientation& orient) {
  if (n < 1) throw graph_error("star needs at least one spoke");
  if (weights.size() != n + 1)
    throw graph_error("star weight list must have length n+1");
  auto names = numbered(0, n, "x");
  auto flips = orient.resolve(n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 1; i <= n; ++i)
    edges.push_back(directed(names[0], names[i], flips[i - 1]));
  return WeightedOrientedGraph(std::move(names), std::move(weights),
                               std::move(edges));
}

WeightedOrientedGraph make_clique_sum(std::size_t n, std::size_t m,
                                      std::vector<int> weights) {
  if (n < 1 || m < 1)
    throw graph_error("clique-sum cycle parameters must be >= 1");
  const std::size_t a = 2 * n + 1, b = 2 * m + 1;
  if (weights.size() != a + b - 1)
    throw graph_error("clique-sum weight list must cover both cycles");
  std::vector<std::string> names = numbered(1, a, "x");
  auto ynames = numbered(2, b, "y");
  names.insert(names.end(), ynames.begin(), ynames.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 1; i < a; ++i)
    edges.emplace_back("x" + std::to_string(i), "x" + std::to_string(i + 1));
  edges.emplace_back("x" + std::to_string(a), "x1");
  edges.emplace_back("x1", "y2");
  for (std::size_t i = 2; i < b; ++i)
    edges.emplace_back("y" + std::to_string(i), "y" + std::to_string(i + 1));
  edges.emplace_back("y" + std::to_string(b), "x1");
  return WeightedOrientedGraph(std::move(names), std::move(weights),
                               std::move(edges));
}

WeightedOrientedGraph make_complete_multipartite(
    std::vector<std::size_t> part_sizes, std::vector<int> weights,
    const Orientation& orient) {
  if (part_sizes.size() < 2)
    throw graph_error("complete multipartite needs at least 2 parts");
  std::size_t total = 0;
  for (std::size_t s : part_sizes) {
    if (s < 1) throw graph_error("every part must be non-empty");
    total += s;
  }
  if (weights.size() != total)
    throw graph_error("multipartite weight list must have one entry per vertex");
  auto names = numbered(1, total, "x");
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p)
    part_of.insert(part_of.end(), part_sizes[p], p);
  std::vector<std::pair<std::size_t, std::size_t>> cross;
  for (std::size_t u = 0; u < total; ++u)
    for (std::size_t v = u + 1; v < total; ++v)
      if (part_of[u] != part_of[v]) cross.emplace_back(u, v);
  auto flips = orient.resolve(cross.size());
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < cross.size(); ++i)
    edges.push_back(
        directed(names[cross[i].first], names[cross[i].second], flips[i]));
  return WeightedOrientedGraph(std::move(names), std::move(weights),
                               std::move(edges));
}

std::pair<WeightedOrientedGraph, std::vector<std::size_t>> sink_weights_to_one(
    const WeightedOrientedGraph& g) {
  std::vector<int> weights(g.weights());
  std::vector<std::size_t> reset;
  for (std::size_t v : g.sinks()) {
    if (weights[v] >= 2) {
      weights[v] = 1;
      reset.push_back(v);
    }
  }
  return {g.with_weights(std::move(weights)), std::move(reset)};
}

WeightedOrientedGraph clamp_weights_to_two(const WeightedOrientedGraph& g) {
  std::vector<int> weights(g.weights());
  for (int& w : weights) w = std::min(w, 2);
  return g.with_weights(std::move(weights));
}

}  // namespace woi
