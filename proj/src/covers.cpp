#include "woi/covers.hpp"

#include <algorithm>

namespace woi {

namespace {

using Mask = std::uint32_t;

struct MaskContext {
  std::size_t n = 0;
  Mask all = 0;
  std::vector<Mask> out, in, nb;
  Mask vplus = 0;
};

MaskContext make_context(const WeightedOrientedGraph& g) {
  MaskContext ctx;
  ctx.n = g.vertex_count();
  ctx.all = ctx.n == 32 ? ~Mask(0) : (Mask(1) << ctx.n) - 1;
  ctx.out.assign(ctx.n, 0);
  ctx.in.assign(ctx.n, 0);
  for (auto [tail, head] : g.edges()) {
    ctx.out[tail] |= Mask(1) << head;
    ctx.in[head] |= Mask(1) << tail;
  }
  ctx.nb.resize(ctx.n);
  for (std::size_t v = 0; v < ctx.n; ++v) ctx.nb[v] = ctx.out[v] | ctx.in[v];
  for (std::size_t v : g.v_plus()) ctx.vplus |= Mask(1) << v;
  return ctx;
}

void check_cap(const WeightedOrientedGraph& g, std::size_t cap,
               const char* where) {
  if (g.vertex_count() > cap || g.vertex_count() > 32)
    throw enumeration_cap_error(
        std::string(where) + ": graph has " +
        std::to_string(g.vertex_count()) +
        " vertices, above the enumeration cap " + std::to_string(cap));
}

bool mask_is_cover(const MaskContext& ctx, Mask c) {
  // C covers every edge iff its complement is independent.
  Mask outside = ctx.all & ~c;
  for (Mask rest = outside; rest;) {
    std::size_t v = std::size_t(__builtin_ctz(rest));
    rest &= rest - 1;
    if (ctx.nb[v] & outside) return false;
  }
  return true;
}

struct MaskPartition {
  Mask cover = 0, l1 = 0, l2 = 0, l3 = 0;
  bool strong = false;
};

MaskPartition mask_partition(const MaskContext& ctx, Mask c) {
  MaskPartition p;
  p.cover = c;
  Mask outside = ctx.all & ~c;
  for (Mask rest = c; rest;) {
    std::size_t v = std::size_t(__builtin_ctz(rest));
    rest &= rest - 1;
    if (ctx.out[v] & outside)
      p.l1 |= Mask(1) << v;
    else if (ctx.in[v] & outside)
      p.l2 |= Mask(1) << v;
    else
      p.l3 |= Mask(1) << v;
  }
  p.strong = true;
  Mask anchor = ctx.vplus & (c & ~p.l1);
  for (Mask rest = p.l3; rest;) {
    std::size_t v = std::size_t(__builtin_ctz(rest));
    rest &= rest - 1;
    if (!(ctx.in[v] & anchor)) {
      p.strong = false;
      break;
    }
  }
  return p;
}

std::vector<std::size_t> mask_to_indices(Mask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(std::size_t(__builtin_ctz(m)));
    m &= m - 1;
  }
  return out;
}

CoverPartition materialize(const MaskPartition& p) {
  CoverPartition out;
  out.cover = mask_to_indices(p.cover);
  out.l1 = mask_to_indices(p.l1);
  out.l2 = mask_to_indices(p.l2);
  out.l3 = mask_to_indices(p.l3);
  out.is_minimal = p.l3 == 0;
  out.is_strong = p.strong;
  return out;
}

MonomialIdeal local_edge_ideal(const WeightedOrientedGraph& g) {
  std::vector<Monomial> gens;
  for (auto [tail, head] : g.edges()) {
    Monomial m = mul_mono(
        Monomial::variable(g.universe(), tail),
        Monomial::variable(g.universe(), head, Exponent(g.weight(head))));
    gens.push_back(std::move(m));
  }
  return MonomialIdeal::of(g.universe(), std::move(gens));
}

}  // namespace

bool is_vertex_cover(const WeightedOrientedGraph& g,
                     const std::vector<std::size_t>& cover) {
  std::vector<bool> in_cover(g.vertex_count(), false);
  for (std::size_t v : cover) {
    if (v >= g.vertex_count())
      throw std::out_of_range("is_vertex_cover: vertex index out of range");
    in_cover[v] = true;
  }
  for (auto [tail, head] : g.edges())
    if (!in_cover[tail] && !in_cover[head]) return false;
  return true;
}

CoverPartition partition_cover(const WeightedOrientedGraph& g,
                               std::vector<std::size_t> cover) {
  if (g.vertex_count() > 32)
    throw enumeration_cap_error("partition_cover: graph too large");
  if (!is_vertex_cover(g, cover))
    throw graph_error("partition_cover: not a vertex cover");
  MaskContext ctx = make_context(g);
  Mask c = 0;
  for (std::size_t v : cover) c |= Mask(1) << v;
  return materialize(mask_partition(ctx, c));
}

bool is_strong(const WeightedOrientedGraph& g, const CoverPartition& p) {
  (void)g;
  return p.is_strong;
}

std::vector<CoverPartition> enumerate_covers(const WeightedOrientedGraph& g,
                                             std::size_t cap) {
  check_cap(g, cap, "enumerate_covers");
  MaskContext ctx = make_context(g);
  std::vector<CoverPartition> out;
  for (std::uint64_t c = 0; c <= ctx.all; ++c)
    if (mask_is_cover(ctx, Mask(c)))
      out.push_back(materialize(mask_partition(ctx, Mask(c))));
  return out;
}

StrongCoverCensus enumerate_strong_covers(const WeightedOrientedGraph& g,
                                          std::size_t cap) {
  check_cap(g, cap, "enumerate_strong_covers");
  MaskContext ctx = make_context(g);
  StrongCoverCensus census;
  std::vector<Mask> masks;
  for (std::uint64_t c = 0; c <= ctx.all; ++c) {
    if (!mask_is_cover(ctx, Mask(c))) continue;
    MaskPartition p = mask_partition(ctx, Mask(c));
    if (!p.strong) continue;
    census.strong_covers.push_back(materialize(p));
    masks.push_back(p.cover);
  }
  for (std::size_t i = 0; i < masks.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (i != j && (masks[i] & ~masks[j]) == 0 && masks[i] != masks[j]) {
        maximal = false;
        break;
      }
    }
    if (maximal) census.maximal.push_back(i);
  }
  for (std::size_t mi : census.maximal) {
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < masks.size(); ++j)
      if ((masks[j] & ~masks[mi]) == 0) members.push_back(j);
    census.groups.push_back(std::move(members));
  }
  return census;
}

bool is_total_cover_strong(const WeightedOrientedGraph& g) {
  // Equivalent formulation: the out-neighborhoods of the weight>=2 vertices
  // cover the whole vertex set.
  std::vector<bool> hit(g.vertex_count(), false);
  for (std::size_t v : g.v_plus())
    for (std::size_t w : g.out_neighbors(v)) hit[w] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool has_minimal_strong_property(const WeightedOrientedGraph& g,
                                 std::size_t cap) {
  StrongCoverCensus census = enumerate_strong_covers(g, cap);
  return std::all_of(
      census.strong_covers.begin(), census.strong_covers.end(),
      [](const CoverPartition& p) { return p.is_minimal; });
}

MonomialIdeal irreducible_ideal(const WeightedOrientedGraph& g,
                                const CoverPartition& p) {
  std::vector<Monomial> gens;
  for (std::size_t v : p.l1)
    gens.push_back(Monomial::variable(g.universe(), v));
  for (std::size_t v : p.l2)
    gens.push_back(
        Monomial::variable(g.universe(), v, Exponent(g.weight(v))));
  for (std::size_t v : p.l3)
    gens.push_back(
        Monomial::variable(g.universe(), v, Exponent(g.weight(v))));
  return MonomialIdeal::of(g.universe(), std::move(gens));
}

std::vector<std::pair<CoverPartition, MonomialIdeal>> irreducible_decomposition(
    const WeightedOrientedGraph& g, std::size_t cap) {
  StrongCoverCensus census = enumerate_strong_covers(g, cap);
  std::vector<std::pair<CoverPartition, MonomialIdeal>> out;
  out.reserve(census.strong_covers.size());
  for (const CoverPartition& p : census.strong_covers)
    out.emplace_back(p, irreducible_ideal(g, p));

  MonomialIdeal check = MonomialIdeal::unit(g.universe());
  for (const auto& [p, ideal] : out) check = intersect(check, ideal);
  if (check != local_edge_ideal(g))
    throw std::logic_error(
        "irreducible_decomposition: intersection does not match edge ideal");
  return out;
}

}  // namespace woi
