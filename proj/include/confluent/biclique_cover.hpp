#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "confluent/graph.hpp"

namespace confluent {

/// Conflict graph over slice edges: one vertex per edge, adjacency meaning
/// "these two edges must receive different colors".  Irreflexive, symmetric.
class ConflictGraph {
public:
    ConflictGraph() = default;
    explicit ConflictGraph(std::size_t n) : n_(n), adj_(n * n, 0), degree_(n, 0) {}

    std::size_t size() const { return n_; }

    bool conflicts(std::size_t a, std::size_t b) const { return adj_[a * n_ + b] != 0; }

    void add_conflict(std::size_t a, std::size_t b);

    std::size_t degree(std::size_t v) const { return degree_[v]; }

    std::size_t conflict_count() const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::size_t> degree_;
};

/// Edge coloring of a slice: colors[i] in {1..k} for slice edge i.
struct EdgeColoring {
    std::vector<int> colors;
    int k = 0;
};

/// Complete bipartite subgraph of a slice, as sorted index sets into the
/// slice's upper/lower node lists.  Both sides are nonempty and every pair
/// upper x lower is an edge of the originating slice.
struct Biclique {
    std::vector<std::size_t> upper;
    std::vector<std::size_t> lower;

    bool contains(std::size_t u, std::size_t l) const;
};

/// Ordered list of bicliques whose union covers every edge of the slice.
struct BicliqueCover {
    std::vector<Biclique> bicliques;
    BipartiteSlice slice;

    std::size_t size() const { return bicliques.size(); }
    /// Lowest-index biclique containing (u, l); slice edge count if none.
    std::size_t first_covering(std::size_t u, std::size_t l) const;
};

enum class ColoringAlgorithm { Greedy, Dsatur, Rlf };

/// Two slice edges conflict iff they are vertex-disjoint and their four
/// endpoints do not induce a 4-cycle (i.e. at least one of the two cross
/// pairs is a non-edge).  O(|E|^2).
ConflictGraph build_conflict_graph(const BipartiteSlice& slice);

/// First-fit proper coloring scanning vertices in the given order.
/// order must be a permutation of 0..n-1.
EdgeColoring color_greedy(const ConflictGraph& cg, const std::vector<std::size_t>& order);

/// Saturation-driven coloring: pick the uncolored vertex with the most
/// distinct neighbor colors; ties by larger degree, then lowest index.
EdgeColoring color_dsatur(const ConflictGraph& cg);

/// DSATUR with a preference order as the final tie-break instead of the
/// vertex index.  preference must be a permutation of 0..n-1.
EdgeColoring color_dsatur(const ConflictGraph& cg, const std::vector<std::size_t>& preference);

/// Recursive-largest-first coloring.  Builds one color class at a time:
/// seed with the max-degree uncolored vertex, then repeatedly add the
/// non-adjacent vertex with the most neighbors among vertices adjacent to
/// the class.  Ties go to the lowest index.
EdgeColoring color_rlf(const ConflictGraph& cg);

/// Vertex order placing first all conflict-graph vertices whose slice edge
/// has at least one vertex-disjoint compatible partner (such edges can sit
/// in a biclique with >= 2 nodes per side); stable within the two groups.
std::vector<std::size_t> priority_first_order(const BipartiteSlice& slice,
                                              const ConflictGraph& cg);

/// Turns a proper coloring into a cover: one biclique per color class,
/// upper side = class's upper endpoints, lower side = class's lower
/// endpoints.  Verifies completeness (upper x lower subset of E) and throws
/// std::logic_error on violation, which would indicate an improper coloring
/// or an implementation bug.
BicliqueCover extract_bicliques(const BipartiteSlice& slice, const EdgeColoring& coloring);

/// Conflict graph -> coloring -> biclique extraction.  priority_pq reseeds
/// the greedy scan order / DSATUR tie-break with priority_first_order; RLF
/// keeps its own class-building logic.
BicliqueCover cover(const BipartiteSlice& slice, ColoringAlgorithm algorithm,
                    bool priority_pq = false);

}  // namespace confluent
