#pragma once

#include <optional>
#include <string>
#include <vector>

#include "confluent/biclique_cover.hpp"
#include "confluent/curves.hpp"
#include "confluent/graph.hpp"
#include "confluent/layout.hpp"

namespace confluent {

enum class PlacementStrategy { Barycenter, CrossingReduction };

/// Knobs for the whole pipeline.  All lengths are abstract units.
/// delta_y, when unset, defaults to delta_y_ratio times the gap between
/// adjacent drawing levels (node level to center level).
struct DrawingOptions {
    int depth = 1;  // 1 or 2
    PlacementStrategy placement = PlacementStrategy::Barycenter;
    ColoringAlgorithm coloring = ColoringAlgorithm::Rlf;
    bool priority_pq = false;
    bool smooth_single_edges = false;
    double min_separation = 30.0;
    double node_spacing = 40.0;
    double layer_gap = 120.0;
    std::optional<double> delta_y;
    double delta_y_ratio = 0.35;
    int crossing_rounds = 10;
};

struct NodeGlyph {
    NodeId id;
    Point2 pos;
    std::string label;
};

/// Segment indices realizing one original edge, top to bottom; consecutive
/// segments chain exactly (p3 of one equals p0 of the next).
struct EdgePath {
    NodeId upper;
    NodeId lower;
    std::vector<std::size_t> segments;
};

struct SliceInfo {
    std::size_t pair_index = 0;
    int covers_computed = 0;
    int covers_laid_out = 0;
    std::size_t depth1_cover_size = 0;
    std::vector<std::size_t> laid_out_cover_sizes;
    std::vector<double> level_y;  // node/junction levels, top to bottom
    std::size_t constraint1_count = 0;
    /// Straight-line crossings of the corresponding track edges; equals the
    /// curve crossing count when single-edge smoothing is off.
    std::size_t track_crossings = 0;
};

/// A finished confluent layered drawing: glyphs for the original nodes,
/// cubic track segments grouped by biclique and depth, and one chained
/// segment path per original edge.
struct Drawing {
    std::vector<NodeGlyph> node_glyphs;
    std::vector<CubicBezier> segments;
    std::vector<EdgePath> edge_paths;
    std::vector<SliceInfo> slices;
    std::vector<double> layer_y;
    int depth = 1;
    int covers_computed = 0;  // summed over layer pairs
};

/// Covers every adjacent layer pair and renders the tracks.
///
/// Depth 1: one cover per pair, centers midway between the layers, each
/// edge realized by two chained segments.  Depth 2: the pair's cover forms
/// a middle junction layer; the two induced slices (upper+middle,
/// middle+lower) are covered and laid out on quarter levels, so each edge
/// becomes a four-segment path.  With smooth_single_edges, single-edge
/// bicliques in laid-out covers are drawn as one direct curve (this trades
/// away the straight-line crossing correspondence).
Drawing confluent_layout(const LayeredGraph& graph, const DrawingOptions& options = {});

}  // namespace confluent
