#include "confluent/layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "confluent/oracle.hpp"

namespace confluent {

namespace {

constexpr double kSeparationSlack = 1e-9;

double node_coordinate(const std::map<NodeId, double>& node_x, const NodeId& id) {
    auto it = node_x.find(id);
    if (it == node_x.end())
        throw std::invalid_argument("no x coordinate for node '" + id + "'");
    return it->second;
}

double biclique_barycenter(const Biclique& b, const BipartiteSlice& slice,
                           const std::map<NodeId, double>& node_x) {
    double sum = 0.0;
    for (std::size_t u : b.upper) sum += node_coordinate(node_x, slice.upper[u]);
    for (std::size_t l : b.lower) sum += node_coordinate(node_x, slice.lower[l]);
    return sum / static_cast<double>(b.upper.size() + b.lower.size());
}

}  // namespace

LayoutConfig LayoutConfig::spanning(double y_top, double y_bottom, double min_separation,
                                    double node_spacing, double delta_y_ratio) {
    LayoutConfig cfg;
    cfg.y_upper = y_top;
    cfg.y_lower = y_bottom;
    cfg.y_center = 0.5 * (y_top + y_bottom);
    cfg.min_separation = min_separation;
    cfg.node_spacing = node_spacing;
    cfg.delta_y = delta_y_ratio * (cfg.y_center - y_top);
    return cfg;
}

CenterPlacement place_centers_barycenter(const BicliqueCover& cover,
                                         const std::map<NodeId, double>& node_x,
                                         const LayoutConfig& cfg) {
    const std::size_t k = cover.size();
    CenterPlacement placement;
    placement.center_y = cfg.y_center;
    placement.center_x.assign(k, 0.0);
    if (k == 0) return placement;

    std::vector<double> bary(k);
    for (std::size_t i = 0; i < k; ++i)
        bary[i] = biclique_barycenter(cover.bicliques[i], cover.slice, node_x);

    std::vector<std::size_t> sorted(k);
    std::iota(sorted.begin(), sorted.end(), 0);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&bary](std::size_t a, std::size_t b) { return bary[a] < bary[b]; });

    const double delta = cfg.min_separation;
    std::vector<double> pos(k, 0.0);  // indexed by sorted rank

    const std::size_t j = std::max<std::size_t>(k / 2, 1);  // 1-based middle start
    pos[j - 1] = bary[sorted[j - 1]];
    for (std::size_t r = j - 1; r-- > 0;) {
        double want = bary[sorted[r]];
        double limit = pos[r + 1] - delta;
        pos[r] = want <= limit ? want : limit;
    }
    for (std::size_t r = j; r < k; ++r) {
        double want = bary[sorted[r]];
        double limit = pos[r - 1] + delta;
        pos[r] = want >= limit ? want : limit;
    }

    for (std::size_t r = 0; r + 1 < k; ++r)
        if (pos[r + 1] - pos[r] < delta - kSeparationSlack)
            throw std::logic_error("place_centers_barycenter: separation invariant violated");

    for (std::size_t r = 0; r < k; ++r) placement.center_x[sorted[r]] = pos[r];
    return placement;
}

std::vector<std::size_t> constraint1_violations(const BicliqueCover& cover,
                                                const std::map<NodeId, double>& node_x,
                                                const CenterPlacement& placement) {
    std::vector<std::size_t> violating;
    for (std::size_t i = 0; i < cover.size(); ++i) {
        const Biclique& b = cover.bicliques[i];
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t u : b.upper) {
            double x = node_coordinate(node_x, cover.slice.upper[u]);
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        for (std::size_t l : b.lower) {
            double x = node_coordinate(node_x, cover.slice.lower[l]);
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        double x = placement.center_x.at(i);
        if (x < lo - kSeparationSlack || x > hi + kSeparationSlack) violating.push_back(i);
    }
    return violating;
}

LayeredGraph build_three_layer(const BipartiteSlice& slice, const BicliqueCover& cover,
                               const std::string& center_prefix) {
    LayeredGraph g;
    std::vector<NodeId> middle;
    middle.reserve(cover.size());
    for (std::size_t i = 0; i < cover.size(); ++i)
        middle.push_back(center_prefix + std::to_string(i));

    g.layers = {slice.upper, middle, slice.lower};
    for (std::size_t i = 0; i < cover.size(); ++i) {
        const Biclique& b = cover.bicliques[i];
        for (std::size_t u : b.upper) g.edges.emplace_back(middle[i], slice.upper[u]);
        for (std::size_t l : b.lower) g.edges.emplace_back(middle[i], slice.lower[l]);
    }
    return g;
}

namespace {

struct LayerAdjacency {
    // neighbors[layer][i] = ids adjacent to node i of that layer in the
    // previous/next layer, depending on the sweep direction
    std::map<NodeId, std::vector<NodeId>> up;    // toward layer-1
    std::map<NodeId, std::vector<NodeId>> down;  // toward layer+1
};

std::vector<NodeId> reorder_by_barycenter(const std::vector<NodeId>& current,
                                          const std::vector<NodeId>& fixed_layer,
                                          const std::map<NodeId, std::vector<NodeId>>& neighbors) {
    std::map<NodeId, std::size_t> rank;
    for (std::size_t i = 0; i < fixed_layer.size(); ++i) rank.emplace(fixed_layer[i], i);

    struct Movable {
        NodeId id;
        double key;
    };
    std::vector<Movable> movable;
    std::vector<std::pair<std::size_t, NodeId>> pinned;  // isolated nodes keep their slot
    for (std::size_t pos = 0; pos < current.size(); ++pos) {
        const NodeId& id = current[pos];
        auto it = neighbors.find(id);
        if (it == neighbors.end() || it->second.empty()) {
            pinned.emplace_back(pos, id);
            continue;
        }
        double sum = 0.0;
        for (const NodeId& nb : it->second) sum += static_cast<double>(rank.at(nb));
        movable.push_back({id, sum / static_cast<double>(it->second.size())});
    }
    std::stable_sort(movable.begin(), movable.end(),
                     [](const Movable& a, const Movable& b) { return a.key < b.key; });

    std::vector<NodeId> result(current.size());
    std::vector<std::uint8_t> taken(current.size(), 0);
    for (const auto& [pos, id] : pinned) {
        result[pos] = id;
        taken[pos] = 1;
    }
    std::size_t slot = 0;
    for (const Movable& m : movable) {
        while (taken[slot]) ++slot;
        result[slot] = m.id;
        taken[slot] = 1;
    }
    return result;
}

}  // namespace

std::size_t count_layered_crossings(const LayeredGraph& graph,
                                    const std::vector<std::vector<NodeId>>& orderings) {
    std::map<NodeId, std::pair<std::size_t, std::size_t>> where;  // id -> (layer, rank)
    for (std::size_t li = 0; li < orderings.size(); ++li)
        for (std::size_t i = 0; i < orderings[li].size(); ++i)
            where.emplace(orderings[li][i], std::make_pair(li, i));

    std::size_t total = 0;
    for (std::size_t li = 0; li + 1 < orderings.size(); ++li) {
        std::vector<Segment> segments;
        for (const auto& [a, b] : graph.edges) {
            auto ia = where.find(a);
            auto ib = where.find(b);
            if (ia == where.end() || ib == where.end()) continue;
            auto [la, ra] = ia->second;
            auto [lb, rb] = ib->second;
            if (la == li && lb == li + 1)
                segments.push_back({{static_cast<double>(ra), 0.0}, {static_cast<double>(rb), 1.0}});
            else if (lb == li && la == li + 1)
                segments.push_back({{static_cast<double>(rb), 0.0}, {static_cast<double>(ra), 1.0}});
        }
        total += count_segment_crossings(segments);
    }
    return total;
}

std::vector<std::vector<NodeId>> reduce_crossings_sweep(const LayeredGraph& graph,
                                                        int max_rounds) {
    if (max_rounds < 1) throw std::invalid_argument("reduce_crossings_sweep: max_rounds must be >= 1");

    std::map<NodeId, std::size_t> layer_of;
    for (std::size_t li = 0; li < graph.layers.size(); ++li)
        for (const NodeId& id : graph.layers[li]) layer_of.emplace(id, li);

    std::vector<LayerAdjacency> adj(graph.layers.size());
    for (const auto& [a, b] : graph.edges) {
        std::size_t la = layer_of.at(a);
        std::size_t lb = layer_of.at(b);
        if (la + 1 == lb) {
            adj[lb].up[b].push_back(a);
            adj[la].down[a].push_back(b);
        } else if (lb + 1 == la) {
            adj[la].up[a].push_back(b);
            adj[lb].down[b].push_back(a);
        }
    }

    std::vector<std::vector<NodeId>> orders = graph.layers;
    std::vector<std::vector<NodeId>> best = orders;
    std::size_t best_count = count_layered_crossings(graph, orders);

    for (int round = 0; round < max_rounds; ++round) {
        auto before = orders;

        for (std::size_t li = 1; li < orders.size(); ++li)
            orders[li] = reorder_by_barycenter(orders[li], orders[li - 1], adj[li].up);
        std::size_t count = count_layered_crossings(graph, orders);
        if (count < best_count) {
            best_count = count;
            best = orders;
        }

        for (std::size_t li = orders.size(); li-- > 1;)
            orders[li - 1] = reorder_by_barycenter(orders[li - 1], orders[li], adj[li - 1].down);
        count = count_layered_crossings(graph, orders);
        if (count < best_count) {
            best_count = count;
            best = orders;
        }

        if (orders == before) break;
    }
    return best;
}

std::map<NodeId, double> orderings_to_coordinates(
    const std::vector<std::vector<NodeId>>& orderings, const LayoutConfig& cfg) {
    std::map<NodeId, double> xs;
    for (const auto& layer : orderings) {
        const double mid = (static_cast<double>(layer.size()) - 1.0) / 2.0;
        for (std::size_t i = 0; i < layer.size(); ++i)
            xs[layer[i]] = (static_cast<double>(i) - mid) * cfg.node_spacing;
    }
    return xs;
}

}  // namespace confluent
