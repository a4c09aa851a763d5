#pragma once

#include <map>
#include <span>
#include <vector>

#include "confluent/biclique_cover.hpp"
#include "confluent/graph.hpp"
#include "confluent/layout.hpp"

namespace confluent {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Which half of a track a segment draws: node-to-center (upper),
/// center-to-node (lower), or a full single-edge span (direct).
enum class CurveSide { Upper, Lower, Direct };

/// Cubic Bezier segment of a confluent track.  Generated segments have
/// vertical endpoint tangents (p0.x == p1.x and p2.x == p3.x), which is what
/// lets consecutive segments join smoothly.
struct CubicBezier {
    Point2 p0, p1, p2, p3;
    int biclique_id = 0;
    CurveSide side = CurveSide::Upper;
};

/// Bernstein basis value n!/(k!(n-k)!) u^k (1-u)^(n-k).
/// Throws std::out_of_range unless 0 <= k <= n.
double bernstein(int k, int n, double u);

/// C(u) = sum_k P_k B_{k,n}(u) with n = points.size()-1.  Needs >= 2 points.
Point2 bezier_eval(std::span<const Point2> points, double u);

/// Control points for one track segment between a node level and the center
/// level, per the fixed recipe: both endpoint tangents vertical, pulled
/// delta_y into the gap.
CubicBezier control_points(double x_node, double x_center, const LayoutConfig& cfg,
                           CurveSide side, int biclique_id = 0);

/// All segments of one biclique's tree: one upper-side curve per upper
/// member, one lower-side curve per lower member, all sharing the center
/// point exactly.
std::vector<CubicBezier> render_biclique(const Biclique& biclique, const BipartiteSlice& slice,
                                         const std::map<NodeId, double>& node_x, double center_x,
                                         const LayoutConfig& cfg, int biclique_id = 0);

/// Number of transversal interior intersections between two cubics, found by
/// recursive subdivision until control polygons are flat within eps, then
/// segment intersection.  Intersections at a shared endpoint of the two
/// curves are not counted.  General-position inputs assumed (no tangencies,
/// no identical curves).
int bezier_pair_crossings(const CubicBezier& a, const CubicBezier& b, double eps);

}  // namespace confluent
