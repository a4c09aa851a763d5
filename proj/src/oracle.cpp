#include "confluent/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace confluent {

namespace {

constexpr std::size_t kMaxCoverEdges = 12;
constexpr std::size_t kMaxChromaticVertices = 16;

// depth-first search for a cover of `full` using at most `budget` more masks
bool cover_dfs(std::uint32_t covered, std::uint32_t full, int budget,
               const std::vector<std::uint32_t>& masks) {
    if (covered == full) return true;
    if (budget == 0) return false;
    std::uint32_t bit = 1;  // lowest uncovered edge drives the branching
    while (bit & covered) bit <<= 1;
    for (std::uint32_t m : masks) {
        if (!(m & bit)) continue;
        if (cover_dfs(covered | m, full, budget - 1, masks)) return true;
    }
    return false;
}

}  // namespace

int exact_min_biclique_cover(const BipartiteSlice& slice) {
    const std::size_t m = slice.edges.size();
    if (m > kMaxCoverEdges)
        throw std::invalid_argument("exact_min_biclique_cover: more than " +
                                    std::to_string(kMaxCoverEdges) + " edges");
    if (m == 0) return 0;

    // compact the upper endpoints that actually carry edges
    std::vector<std::size_t> uppers;
    for (const SliceEdge& e : slice.edges)
        if (std::find(uppers.begin(), uppers.end(), e.u) == uppers.end()) uppers.push_back(e.u);
    const std::size_t p = uppers.size();

    // per compact upper node: bitmask of adjacent lower nodes, and the edge
    // index for each (upper, lower) pair
    std::map<std::size_t, std::size_t> upper_pos;
    for (std::size_t i = 0; i < p; ++i) upper_pos[uppers[i]] = i;
    std::vector<std::uint32_t> adj(p, 0);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
    for (std::size_t i = 0; i < m; ++i) {
        const SliceEdge& e = slice.edges[i];
        adj[upper_pos[e.u]] |= std::uint32_t{1} << e.l;
        edge_index[{e.u, e.l}] = i;
    }

    // every maximal biclique is the closure of some subset of upper nodes
    std::set<std::uint32_t> edge_masks;
    for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << p); ++subset) {
        std::uint32_t common = ~std::uint32_t{0};
        for (std::size_t i = 0; i < p; ++i)
            if (subset & (std::uint32_t{1} << i)) common &= adj[i];
        if (common == 0) continue;
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < p; ++i) {
            if ((adj[i] & common) != common) continue;  // not in the closure
            for (std::size_t l = 0; l < 32; ++l)
                if (common & (std::uint32_t{1} << l))
                    mask |= std::uint32_t{1} << edge_index.at({uppers[i], l});
        }
        edge_masks.insert(mask);
    }

    std::vector<std::uint32_t> masks(edge_masks.begin(), edge_masks.end());
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) > std::popcount(b);
    });

    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    for (int size = 1; size <= static_cast<int>(m); ++size)
        if (cover_dfs(0, full, size, masks)) return size;
    return static_cast<int>(m);  // unreachable: single edges are bicliques
}

namespace {

struct ColorSearch {
    const ConflictGraph& cg;
    const std::vector<std::size_t>& order;
    std::vector<int> colors;
    int limit;

    bool assign(std::size_t pos, int used) {
        if (pos == order.size()) return true;
        const std::size_t v = order[pos];
        const int try_up_to = std::min(limit, used + 1);
        for (int c = 1; c <= try_up_to; ++c) {
            bool blocked = false;
            for (std::size_t w = 0; w < cg.size(); ++w)
                if (colors[w] == c && cg.conflicts(v, w)) {
                    blocked = true;
                    break;
                }
            if (blocked) continue;
            colors[v] = c;
            if (assign(pos + 1, std::max(used, c))) return true;
            colors[v] = 0;
        }
        return false;
    }
};

}  // namespace

int exact_chromatic_number(const ConflictGraph& cg) {
    const std::size_t n = cg.size();
    if (n > kMaxChromaticVertices)
        throw std::invalid_argument("exact_chromatic_number: more than " +
                                    std::to_string(kMaxChromaticVertices) + " vertices");
    if (n == 0) return 0;

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&cg](std::size_t a, std::size_t b) { return cg.degree(a) > cg.degree(b); });

    // greedy clique along the degree order gives a lower bound
    std::vector<std::size_t> clique;
    for (std::size_t v : order) {
        bool fits = std::all_of(clique.begin(), clique.end(),
                                [&](std::size_t w) { return cg.conflicts(v, w); });
        if (fits) clique.push_back(v);
    }
    const int lower = static_cast<int>(clique.size());

    // greedy coloring along the same order gives an upper bound
    int upper = 0;
    {
        std::vector<int> colors(n, 0);
        for (std::size_t v : order) {
            std::vector<std::uint8_t> used(n + 2, 0);
            for (std::size_t w = 0; w < n; ++w)
                if (colors[w] > 0 && cg.conflicts(v, w)) used[static_cast<std::size_t>(colors[w])] = 1;
            int c = 1;
            while (used[static_cast<std::size_t>(c)]) ++c;
            colors[v] = c;
            upper = std::max(upper, c);
        }
    }

    for (int k = lower; k < upper; ++k) {
        ColorSearch search{cg, order, std::vector<int>(n, 0), k};
        if (search.assign(0, 0)) return k;
    }
    return upper;
}

namespace {

double orient(Point2 a, Point2 b, Point2 c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool properly_cross(const Segment& s, const Segment& t) {
    const double d1 = orient(s.a, s.b, t.a);
    const double d2 = orient(s.a, s.b, t.b);
    const double d3 = orient(t.a, t.b, s.a);
    const double d4 = orient(t.a, t.b, s.b);
    return d1 * d2 < 0.0 && d3 * d4 < 0.0;
}

}  // namespace

std::size_t count_segment_crossings(std::span<const Segment> segments) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < segments.size(); ++i)
        for (std::size_t j = i + 1; j < segments.size(); ++j)
            if (properly_cross(segments[i], segments[j])) ++count;
    return count;
}

}  // namespace confluent
