#pragma once

// Vertex covers of a weighted oriented graph, their L1/L2/L3 partition,
// strong covers, and the irreducible ideals/decomposition they induce.
//
// For a cover C:  L1 = members with an out-neighbor outside C,
// L2 = remaining members with an in-neighbor outside C, L3 = the rest
// (members whose whole neighborhood lies inside C).  C is minimal iff L3 is
// empty.  C is strong iff every x in L3 has an in-neighbor of weight >= 2
// inside C \ L1.

#include <cstddef>
#include <utility>
#include <vector>

#include "woi/graph.hpp"
#include "woi/ideal.hpp"

namespace woi {

// Subset enumeration refuses graphs larger than this unless overridden.
inline constexpr std::size_t kEnumerationCap = 24;

struct enumeration_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoverPartition {
  std::vector<std::size_t> cover, l1, l2, l3;  // sorted vertex indices
  bool is_minimal = false;                     // <=> l3 empty
  bool is_strong = false;
};

bool is_vertex_cover(const WeightedOrientedGraph& g,
                     const std::vector<std::size_t>& cover);

// Throws graph_error if `cover` is not a vertex cover.
CoverPartition partition_cover(const WeightedOrientedGraph& g,
                               std::vector<std::size_t> cover);

bool is_strong(const WeightedOrientedGraph& g, const CoverPartition& p);

// All vertex covers (diagnostic), in ascending subset-mask order.
std::vector<CoverPartition> enumerate_covers(
    const WeightedOrientedGraph& g, std::size_t cap = kEnumerationCap);

struct StrongCoverCensus {
  std::vector<CoverPartition> strong_covers;  // ascending subset-mask order
  // Indices (into strong_covers) of the inclusion-maximal strong covers.
  std::vector<std::size_t> maximal;
  // groups[i]: indices of every strong cover contained in maximal[i]
  // (including maximal[i] itself).  A cover contained in several maximal
  // covers appears in each of their groups.
  std::vector<std::vector<std::size_t>> groups;
};

StrongCoverCensus enumerate_strong_covers(const WeightedOrientedGraph& g,
                                          std::size_t cap = kEnumerationCap);

// The whole vertex set is a strong cover iff every vertex is an out-neighbor
// of some weight->=2 vertex; agrees with is_strong on the total cover.
bool is_total_cover_strong(const WeightedOrientedGraph& g);

// Every strong cover is minimal.
bool has_minimal_strong_property(const WeightedOrientedGraph& g,
                                 std::size_t cap = kEnumerationCap);

// I_C = (L1 variables, x^w(x) for x in L2 u L3).  Accepts non-strong covers
// (diagnostic use); strongness is not required to form the ideal.
MonomialIdeal irreducible_ideal(const WeightedOrientedGraph& g,
                                const CoverPartition& p);

// One (cover, irreducible ideal) pair per strong cover.  The intersection of
// the ideals is checked against the edge ideal; a mismatch throws
// std::logic_error.
std::vector<std::pair<CoverPartition, MonomialIdeal>> irreducible_decomposition(
    const WeightedOrientedGraph& g, std::size_t cap = kEnumerationCap);

}  // namespace woi
