#pragma once

#include <map>
#include <string>
#include <vector>

#include "confluent/biclique_cover.hpp"
#include "confluent/graph.hpp"

namespace confluent {

/// Geometry of one covered layer gap.  y grows downward (SVG convention):
/// y_upper < y_center < y_lower.  delta_y shapes the curves; min_separation
/// keeps tree centers apart.
struct LayoutConfig {
    double y_upper = 0.0;
    double y_lower = 120.0;
    double y_center = 60.0;
    double min_separation = 30.0;
    double delta_y = 21.0;
    double node_spacing = 40.0;

    /// Config spanning [y_top, y_bottom] with the center midway and
    /// delta_y defaulting to delta_y_ratio times the node-to-center gap.
    static LayoutConfig spanning(double y_top, double y_bottom, double min_separation,
                                 double node_spacing, double delta_y_ratio = 0.35);
};

/// x-coordinates of the tree centers of one cover, in cover order, plus the
/// shared center level y.
struct CenterPlacement {
    std::vector<double> center_x;
    double center_y = 0.0;
};

/// Barycenter placement with minimum separation: each center starts at the
/// mean x of its biclique's member nodes; centers are sorted by that value
/// and placed middle-out (j = floor(k/2), then j-1..1 leftward, j+1..k
/// rightward), pushing a violating center exactly min_separation away from
/// the previously placed one.  Output order matches the cover order.
CenterPlacement place_centers_barycenter(const BicliqueCover& cover,
                                         const std::map<NodeId, double>& node_x,
                                         const LayoutConfig& cfg);

/// Indices of bicliques whose placed center lies outside the x-range of its
/// member nodes.  Reported, never enforced: both placement strategies can
/// produce such centers.
std::vector<std::size_t> constraint1_violations(const BicliqueCover& cover,
                                                const std::map<NodeId, double>& node_x,
                                                const CenterPlacement& placement);

/// Node names starting with this prefix are reserved for synthesized tree
/// centers; the input parser rejects them.
inline constexpr char kCenterIdPrefix = '@';

/// Three-layer graph (U, M, L): one middle node per biclique, joined to all
/// of the biclique's members.  Middle node i is named <prefix><i>.
LayeredGraph build_three_layer(const BipartiteSlice& slice, const BicliqueCover& cover,
                               const std::string& center_prefix = "@c");

/// Iterated barycenter sweeps over all layers, alternating downward and
/// upward, keeping the orderings with the fewest straight-line crossings
/// seen.  Stops after max_rounds or when a full round changes nothing.
/// Never returns orderings worse than the input order.
std::vector<std::vector<NodeId>> reduce_crossings_sweep(const LayeredGraph& graph,
                                                        int max_rounds);

/// Straight-line crossing count of the given per-layer orderings, summed
/// over adjacent layer pairs (ranks realized as segment endpoints and fed
/// to the segment-crossing counter).
std::size_t count_layered_crossings(const LayeredGraph& graph,
                                    const std::vector<std::vector<NodeId>>& orderings);

/// Uniform spacing within each layer, every layer centered on x = 0.
std::map<NodeId, double> orderings_to_coordinates(
    const std::vector<std::vector<NodeId>>& orderings, const LayoutConfig& cfg);

}  // namespace confluent
