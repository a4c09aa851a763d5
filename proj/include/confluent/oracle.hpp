#pragma once

#include <span>
#include <vector>

#include "confluent/biclique_cover.hpp"
#include "confluent/curves.hpp"
#include "confluent/graph.hpp"

namespace confluent {

struct Segment {
    Point2 a, b;
};

/// Exact minimum biclique cover size by exhaustive search: enumerate all
/// maximal bicliques, then iterative deepening over the cover size.
/// Guarded to |E| <= 12; throws std::invalid_argument beyond.
int exact_min_biclique_cover(const BipartiteSlice& slice);

/// Exact chromatic number by branch-and-bound backtracking with a greedy
/// clique lower bound.  Guarded to n <= 16.
int exact_chromatic_number(const ConflictGraph& cg);

/// Number of segment pairs intersecting transversally in their interiors.
/// Pairs meeting only at a shared endpoint do not count.  Inputs are
/// expected in general position (caller-filtered).
std::size_t count_segment_crossings(std::span<const Segment> segments);

}  // namespace confluent
