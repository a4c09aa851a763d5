#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace confluent {

using NodeId = std::string;

/// Hierarchical graph: nodes partitioned into ordered layers, edges only
/// between adjacent layers.  Per-node x coordinates and labels are optional;
/// when x is absent, node order within a layer implies uniform spacing.
struct LayeredGraph {
    std::vector<std::vector<NodeId>> layers;
    std::vector<std::pair<NodeId, NodeId>> edges;  // unordered pairs
    std::map<NodeId, double> node_x;
    std::map<NodeId, std::string> node_labels;

    std::size_t node_count() const;
    /// Number of adjacent layer pairs (0 when fewer than two layers).
    std::size_t pair_count() const;
};

enum class ViolationKind {
    DuplicateNode,
    SelfLoop,
    ParallelEdge,
    UnknownEdgeEndpoint,
    NonAdjacentLayerEdge,
    UnknownAttributeNode,
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

/// Outcome of validate().  Violations are data, not exceptions; an empty
/// list means the graph satisfies all LayeredGraph invariants.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(ViolationKind kind) const;
    std::string to_string() const;
};

const char* violation_code(ViolationKind kind);

/// One slice edge as indices into BipartiteSlice::upper / ::lower.
struct SliceEdge {
    std::size_t u = 0;
    std::size_t l = 0;

    friend bool operator==(const SliceEdge&, const SliceEdge&) = default;
};

/// Two adjacent layers and the edges between them.  Edge indices are stable
/// for the lifetime of the slice: index i always names the same pair.
struct BipartiteSlice {
    std::vector<NodeId> upper;
    std::vector<NodeId> lower;
    std::vector<SliceEdge> edges;

    bool has_edge(std::size_t u, std::size_t l) const;  // linear scan
};

/// Checks every LayeredGraph invariant and reports all violations found.
/// Total: never throws on any well-formed structure.
ValidationReport validate(const LayeredGraph& graph);

/// Extracts the bipartite slice of layers pair_index and pair_index+1,
/// preserving node order.  Throws std::out_of_range on a bad index.
BipartiteSlice slice(const LayeredGraph& graph, std::size_t pair_index);

}  // namespace confluent
