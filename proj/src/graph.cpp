#include "confluent/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace confluent {

std::size_t LayeredGraph::node_count() const {
    std::size_t n = 0;
    for (const auto& layer : layers) n += layer.size();
    return n;
}

std::size_t LayeredGraph::pair_count() const {
    return layers.size() < 2 ? 0 : layers.size() - 1;
}

bool ValidationReport::has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto& v : violations)
        out << violation_code(v.kind) << ": " << v.detail << '\n';
    return out.str();
}

const char* violation_code(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::DuplicateNode: return "duplicate-node";
        case ViolationKind::SelfLoop: return "self-loop";
        case ViolationKind::ParallelEdge: return "parallel-edge";
        case ViolationKind::UnknownEdgeEndpoint: return "unknown-edge-endpoint";
        case ViolationKind::NonAdjacentLayerEdge: return "non-adjacent-layer-edge";
        case ViolationKind::UnknownAttributeNode: return "unknown-attribute-node";
    }
    return "unknown";
}

bool BipartiteSlice::has_edge(std::size_t u, std::size_t l) const {
    return std::find(edges.begin(), edges.end(), SliceEdge{u, l}) != edges.end();
}

ValidationReport validate(const LayeredGraph& graph) {
    ValidationReport report;
    auto add = [&report](ViolationKind kind, std::string detail) {
        report.violations.push_back({kind, std::move(detail)});
    };

    std::map<NodeId, std::size_t> layer_of;  // first occurrence wins
    for (std::size_t li = 0; li < graph.layers.size(); ++li) {
        for (const NodeId& id : graph.layers[li]) {
            auto [it, inserted] = layer_of.emplace(id, li);
            if (!inserted)
                add(ViolationKind::DuplicateNode,
                    "node '" + id + "' appears in layer " + std::to_string(it->second) +
                        " and again in layer " + std::to_string(li));
        }
    }

    std::set<std::pair<NodeId, NodeId>> seen;
    for (const auto& [a, b] : graph.edges) {
        if (a == b) {
            add(ViolationKind::SelfLoop, "self loop at '" + a + "'");
            continue;
        }
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            add(ViolationKind::ParallelEdge, "edge (" + a + ", " + b + ") appears more than once");

        auto ia = layer_of.find(a);
        auto ib = layer_of.find(b);
        bool known = true;
        if (ia == layer_of.end()) {
            add(ViolationKind::UnknownEdgeEndpoint, "edge endpoint '" + a + "' is not in any layer");
            known = false;
        }
        if (ib == layer_of.end()) {
            add(ViolationKind::UnknownEdgeEndpoint, "edge endpoint '" + b + "' is not in any layer");
            known = false;
        }
        if (known) {
            std::size_t la = ia->second, lb = ib->second;
            std::size_t hi = std::max(la, lb), lo = std::min(la, lb);
            if (hi - lo != 1)
                add(ViolationKind::NonAdjacentLayerEdge,
                    "edge (" + a + ", " + b + ") joins layers " + std::to_string(la) + " and " +
                        std::to_string(lb));
        }
    }

    for (const auto& [id, x] : graph.node_x) {
        (void)x;
        if (!layer_of.count(id))
            add(ViolationKind::UnknownAttributeNode, "position given for unknown node '" + id + "'");
    }
    for (const auto& [id, label] : graph.node_labels) {
        (void)label;
        if (!layer_of.count(id))
            add(ViolationKind::UnknownAttributeNode, "label given for unknown node '" + id + "'");
    }
    return report;
}

BipartiteSlice slice(const LayeredGraph& graph, std::size_t pair_index) {
    if (pair_index >= graph.pair_count())
        throw std::out_of_range("slice: pair_index " + std::to_string(pair_index) +
                                " out of range (graph has " +
                                std::to_string(graph.pair_count()) + " layer pairs)");

    BipartiteSlice s;
    s.upper = graph.layers[pair_index];
    s.lower = graph.layers[pair_index + 1];

    std::map<NodeId, std::size_t> up, lo;
    for (std::size_t i = 0; i < s.upper.size(); ++i) up.emplace(s.upper[i], i);
    for (std::size_t i = 0; i < s.lower.size(); ++i) lo.emplace(s.lower[i], i);

    for (const auto& [a, b] : graph.edges) {
        auto ua = up.find(a);
        auto lb = lo.find(b);
        if (ua != up.end() && lb != lo.end()) {
            s.edges.push_back({ua->second, lb->second});
            continue;
        }
        auto ub = up.find(b);
        auto la = lo.find(a);
        if (ub != up.end() && la != lo.end()) s.edges.push_back({ub->second, la->second});
    }
    return s;
}

}  // namespace confluent
