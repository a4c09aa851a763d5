#include "confluent/biclique_cover.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace confluent {

void ConflictGraph::add_conflict(std::size_t a, std::size_t b) {
    if (a >= n_ || b >= n_) throw std::out_of_range("ConflictGraph::add_conflict: vertex out of range");
    if (a == b) throw std::invalid_argument("ConflictGraph::add_conflict: self conflict");
    if (adj_[a * n_ + b]) return;
    adj_[a * n_ + b] = 1;
    adj_[b * n_ + a] = 1;
    ++degree_[a];
    ++degree_[b];
}

std::size_t ConflictGraph::conflict_count() const {
    std::size_t total = 0;
    for (std::size_t d : degree_) total += d;
    return total / 2;
}

bool Biclique::contains(std::size_t u, std::size_t l) const {
    return std::binary_search(upper.begin(), upper.end(), u) &&
           std::binary_search(lower.begin(), lower.end(), l);
}

std::size_t BicliqueCover::first_covering(std::size_t u, std::size_t l) const {
    for (std::size_t i = 0; i < bicliques.size(); ++i)
        if (bicliques[i].contains(u, l)) return i;
    return slice.edges.size();
}

ConflictGraph build_conflict_graph(const BipartiteSlice& slice) {
    const std::size_t n = slice.edges.size();
    const std::size_t nl = slice.lower.size();
    ConflictGraph cg(n);

    std::vector<std::uint8_t> present(slice.upper.size() * nl, 0);
    for (const SliceEdge& e : slice.edges) present[e.u * nl + e.l] = 1;

    for (std::size_t i = 0; i < n; ++i) {
        const SliceEdge& a = slice.edges[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const SliceEdge& b = slice.edges[j];
            if (a.u == b.u || a.l == b.l) continue;  // share a vertex
            if (present[a.u * nl + b.l] && present[b.u * nl + a.l]) continue;  // induced C4
            cg.add_conflict(i, j);
        }
    }
    return cg;
}

namespace {

void check_permutation(const std::vector<std::size_t>& order, std::size_t n, const char* who) {
    if (order.size() != n)
        throw std::invalid_argument(std::string(who) + ": order size does not match vertex count");
    std::vector<std::uint8_t> seen(n, 0);
    for (std::size_t v : order) {
        if (v >= n || seen[v])
            throw std::invalid_argument(std::string(who) + ": order is not a permutation");
        seen[v] = 1;
    }
}

int first_free_color(const ConflictGraph& cg, const std::vector<int>& colors, std::size_t v) {
    std::vector<std::uint8_t> used(colors.size() + 2, 0);
    for (std::size_t w = 0; w < cg.size(); ++w)
        if (colors[w] > 0 && cg.conflicts(v, w)) used[static_cast<std::size_t>(colors[w])] = 1;
    int c = 1;
    while (used[static_cast<std::size_t>(c)]) ++c;
    return c;
}

EdgeColoring dsatur_impl(const ConflictGraph& cg, const std::vector<std::size_t>* preference) {
    const std::size_t n = cg.size();
    EdgeColoring result;
    result.colors.assign(n, 0);

    std::vector<std::size_t> rank(n);
    std::iota(rank.begin(), rank.end(), 0);
    if (preference) {
        check_permutation(*preference, n, "color_dsatur");
        for (std::size_t pos = 0; pos < n; ++pos) rank[(*preference)[pos]] = pos;
    }

    // saturation[v] counts distinct colors among colored neighbors
    std::vector<std::size_t> saturation(n, 0);
    std::vector<std::vector<std::uint8_t>> neighbor_color(n);
    for (auto& nc : neighbor_color) nc.assign(n + 2, 0);

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (result.colors[v] != 0) continue;
            if (best == n) {
                best = v;
                continue;
            }
            if (saturation[v] != saturation[best]) {
                if (saturation[v] > saturation[best]) best = v;
            } else if (cg.degree(v) != cg.degree(best)) {
                if (cg.degree(v) > cg.degree(best)) best = v;
            } else if (rank[v] < rank[best]) {
                best = v;
            }
        }
        int c = first_free_color(cg, result.colors, best);
        result.colors[best] = c;
        result.k = std::max(result.k, c);
        for (std::size_t w = 0; w < n; ++w) {
            if (w == best || !cg.conflicts(best, w) || result.colors[w] != 0) continue;
            if (!neighbor_color[w][static_cast<std::size_t>(c)]) {
                neighbor_color[w][static_cast<std::size_t>(c)] = 1;
                ++saturation[w];
            }
        }
    }
    return result;
}

}  // namespace

EdgeColoring color_greedy(const ConflictGraph& cg, const std::vector<std::size_t>& order) {
    check_permutation(order, cg.size(), "color_greedy");
    EdgeColoring result;
    result.colors.assign(cg.size(), 0);
    for (std::size_t v : order) {
        int c = first_free_color(cg, result.colors, v);
        result.colors[v] = c;
        result.k = std::max(result.k, c);
    }
    return result;
}

EdgeColoring color_dsatur(const ConflictGraph& cg) { return dsatur_impl(cg, nullptr); }

EdgeColoring color_dsatur(const ConflictGraph& cg, const std::vector<std::size_t>& preference) {
    return dsatur_impl(cg, &preference);
}

EdgeColoring color_rlf(const ConflictGraph& cg) {
    const std::size_t n = cg.size();
    EdgeColoring result;
    result.colors.assign(n, 0);

    std::size_t uncolored = n;
    while (uncolored > 0) {
        const int color = ++result.k;

        // seed: max degree within the uncolored subgraph, lowest index tie-break
        std::size_t seed = n;
        std::size_t seed_deg = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (result.colors[v] != 0) continue;
            std::size_t d = 0;
            for (std::size_t w = 0; w < n; ++w)
                if (result.colors[w] == 0 && w != v && cg.conflicts(v, w)) ++d;
            if (seed == n || d > seed_deg) {
                seed = v;
                seed_deg = d;
            }
        }

        // 0 = candidate, 1 = in class, 2 = adjacent to class (uncolored)
        std::vector<std::uint8_t> state(n, 0);
        auto add_to_class = [&](std::size_t v) {
            state[v] = 1;
            result.colors[v] = color;
            --uncolored;
            for (std::size_t w = 0; w < n; ++w)
                if (result.colors[w] == 0 && state[w] == 0 && cg.conflicts(v, w)) state[w] = 2;
        };
        add_to_class(seed);

        for (;;) {
            std::size_t pick = n;
            std::size_t pick_score = 0;
            for (std::size_t v = 0; v < n; ++v) {
                if (result.colors[v] != 0 || state[v] != 0) continue;
                std::size_t score = 0;  // neighbors among vertices adjacent to the class
                for (std::size_t w = 0; w < n; ++w)
                    if (result.colors[w] == 0 && state[w] == 2 && cg.conflicts(v, w)) ++score;
                if (pick == n || score > pick_score) {
                    pick = v;
                    pick_score = score;
                }
            }
            if (pick == n) break;
            add_to_class(pick);
        }
    }
    return result;
}

std::vector<std::size_t> priority_first_order(const BipartiteSlice& slice,
                                              const ConflictGraph& cg) {
    const std::size_t n = slice.edges.size();
    if (cg.size() != n)
        throw std::invalid_argument("priority_first_order: conflict graph does not match slice");

    // an edge qualifies when some vertex-disjoint partner is compatible with it
    // (the two then fit in a biclique that is not a star)
    std::vector<std::uint8_t> qualifies(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const SliceEdge& a = slice.edges[i];
            const SliceEdge& b = slice.edges[j];
            if (a.u == b.u || a.l == b.l) continue;
            if (!cg.conflicts(i, j)) qualifies[i] = qualifies[j] = 1;
        }
    }

    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t v = 0; v < n; ++v)
        if (qualifies[v]) order.push_back(v);
    for (std::size_t v = 0; v < n; ++v)
        if (!qualifies[v]) order.push_back(v);
    return order;
}

BicliqueCover extract_bicliques(const BipartiteSlice& slice, const EdgeColoring& coloring) {
    const std::size_t n = slice.edges.size();
    if (coloring.colors.size() != n)
        throw std::invalid_argument("extract_bicliques: coloring size does not match slice");
    for (int c : coloring.colors)
        if (c < 1 || c > coloring.k)
            throw std::invalid_argument("extract_bicliques: color out of range 1..k");

    BicliqueCover result;
    result.slice = slice;

    const std::size_t nl = slice.lower.size();
    std::vector<std::uint8_t> present(slice.upper.size() * nl, 0);
    for (const SliceEdge& e : slice.edges) present[e.u * nl + e.l] = 1;

    for (int c = 1; c <= coloring.k; ++c) {
        std::set<std::size_t> uppers, lowers;
        for (std::size_t i = 0; i < n; ++i) {
            if (coloring.colors[i] != c) continue;
            uppers.insert(slice.edges[i].u);
            lowers.insert(slice.edges[i].l);
        }
        if (uppers.empty())
            throw std::invalid_argument("extract_bicliques: empty color class " + std::to_string(c));

        Biclique b;
        b.upper.assign(uppers.begin(), uppers.end());
        b.lower.assign(lowers.begin(), lowers.end());

        // a proper coloring always extends each class to a complete bipartite
        // subgraph; any hole here means the coloring was not proper
        for (std::size_t u : b.upper)
            for (std::size_t l : b.lower)
                if (!present[u * nl + l])
                    throw std::logic_error(
                        "extract_bicliques: color class " + std::to_string(c) +
                        " is not a biclique: (" + slice.upper[u] + ", " + slice.lower[l] +
                        ") is not an edge");
        result.bicliques.push_back(std::move(b));
    }
    return result;
}

BicliqueCover cover(const BipartiteSlice& slice, ColoringAlgorithm algorithm, bool priority_pq) {
    ConflictGraph cg = build_conflict_graph(slice);
    EdgeColoring coloring;
    switch (algorithm) {
        case ColoringAlgorithm::Greedy: {
            std::vector<std::size_t> order;
            if (priority_pq) {
                order = priority_first_order(slice, cg);
            } else {
                order.resize(cg.size());
                std::iota(order.begin(), order.end(), 0);
            }
            coloring = color_greedy(cg, order);
            break;
        }
        case ColoringAlgorithm::Dsatur:
            coloring = priority_pq ? color_dsatur(cg, priority_first_order(slice, cg))
                                   : color_dsatur(cg);
            break;
        case ColoringAlgorithm::Rlf:
            coloring = color_rlf(cg);
            break;
    }
    return extract_bicliques(slice, coloring);
}

}  // namespace confluent
