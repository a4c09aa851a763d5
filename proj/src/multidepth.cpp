#include "confluent/multidepth.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "confluent/oracle.hpp"

namespace confluent {

namespace {

LayoutConfig level_config(double y_top, double y_bottom, const DrawingOptions& opt) {
    LayoutConfig cfg = LayoutConfig::spanning(y_top, y_bottom, opt.min_separation,
                                              opt.node_spacing, opt.delta_y_ratio);
    if (opt.delta_y) cfg.delta_y = *opt.delta_y;
    return cfg;
}

// user-provided coordinates win; missing nodes get centered uniform spacing
std::map<NodeId, double> resolve_coordinates(const LayeredGraph& g, const DrawingOptions& opt) {
    std::map<NodeId, double> xs;
    for (const auto& layer : g.layers) {
        const double mid = (static_cast<double>(layer.size()) - 1.0) / 2.0;
        for (std::size_t i = 0; i < layer.size(); ++i) {
            auto it = g.node_x.find(layer[i]);
            xs[layer[i]] = it != g.node_x.end()
                               ? it->second
                               : (static_cast<double>(i) - mid) * opt.node_spacing;
        }
    }
    return xs;
}

struct BicliqueSegments {
    std::vector<std::size_t> upper;  // aligned with Biclique::upper
    std::vector<std::size_t> lower;  // aligned with Biclique::lower
    std::optional<std::size_t> direct;
};

struct RenderedCover {
    BicliqueCover cover;
    CenterPlacement centers;
    LayoutConfig cfg;
    std::vector<BicliqueSegments> segments;
};

RenderedCover render_cover(BicliqueCover cover, CenterPlacement centers, const LayoutConfig& cfg,
                           const std::map<NodeId, double>& xs, bool smoothing,
                           std::vector<CubicBezier>& out, int& next_biclique_id) {
    RenderedCover rc{std::move(cover), std::move(centers), cfg, {}};
    rc.segments.resize(rc.cover.size());
    for (std::size_t bi = 0; bi < rc.cover.size(); ++bi) {
        const Biclique& b = rc.cover.bicliques[bi];
        const int id = next_biclique_id++;
        const double cx = rc.centers.center_x[bi];
        BicliqueSegments& bs = rc.segments[bi];
        if (smoothing && b.upper.size() == 1 && b.lower.size() == 1) {
            const double xu = xs.at(rc.cover.slice.upper[b.upper[0]]);
            const double xl = xs.at(rc.cover.slice.lower[b.lower[0]]);
            bs.direct = out.size();
            out.push_back(control_points(xu, xl, cfg, CurveSide::Direct, id));
            continue;
        }
        for (std::size_t u : b.upper) {
            bs.upper.push_back(out.size());
            out.push_back(
                control_points(xs.at(rc.cover.slice.upper[u]), cx, cfg, CurveSide::Upper, id));
        }
        for (std::size_t l : b.lower) {
            bs.lower.push_back(out.size());
            out.push_back(
                control_points(xs.at(rc.cover.slice.lower[l]), cx, cfg, CurveSide::Lower, id));
        }
    }
    return rc;
}

// straight counterparts of the (unsmoothed) track edges, for crossing stats
void append_track_segments(const RenderedCover& rc, const std::map<NodeId, double>& xs,
                           std::vector<Segment>& out) {
    for (std::size_t bi = 0; bi < rc.cover.size(); ++bi) {
        const Biclique& b = rc.cover.bicliques[bi];
        const Point2 center{rc.centers.center_x[bi], rc.cfg.y_center};
        for (std::size_t u : b.upper)
            out.push_back({{xs.at(rc.cover.slice.upper[u]), rc.cfg.y_upper}, center});
        for (std::size_t l : b.lower)
            out.push_back({center, {xs.at(rc.cover.slice.lower[l]), rc.cfg.y_lower}});
    }
}

void append_edge_segments(const RenderedCover& rc, std::size_t u_idx, std::size_t l_idx,
                          std::vector<std::size_t>& path) {
    const std::size_t bi = rc.cover.first_covering(u_idx, l_idx);
    if (bi >= rc.cover.size())
        throw std::logic_error("confluent_layout: edge not covered by any biclique");
    const BicliqueSegments& bs = rc.segments[bi];
    if (bs.direct) {
        path.push_back(*bs.direct);
        return;
    }
    const Biclique& b = rc.cover.bicliques[bi];
    const std::size_t up_pos = static_cast<std::size_t>(
        std::lower_bound(b.upper.begin(), b.upper.end(), u_idx) - b.upper.begin());
    const std::size_t lo_pos = static_cast<std::size_t>(
        std::lower_bound(b.lower.begin(), b.lower.end(), l_idx) - b.lower.begin());
    path.push_back(bs.upper[up_pos]);
    path.push_back(bs.lower[lo_pos]);
}

std::string center_prefix(std::size_t pair_index) {
    return "@c" + std::to_string(pair_index) + "_";
}

}  // namespace

Drawing confluent_layout(const LayeredGraph& graph, const DrawingOptions& opt) {
    if (opt.depth != 1 && opt.depth != 2)
        throw std::invalid_argument("unsupported depth " + std::to_string(opt.depth) +
                                    " (supported: 1, 2)");
    if (opt.min_separation <= 0.0 || opt.node_spacing <= 0.0 || opt.layer_gap <= 0.0 ||
        opt.delta_y_ratio <= 0.0 || (opt.delta_y && *opt.delta_y <= 0.0))
        throw std::invalid_argument("layout lengths must be positive");
    if (opt.crossing_rounds < 1)
        throw std::invalid_argument("crossing_rounds must be >= 1");

    ValidationReport report = validate(graph);
    if (!report.ok())
        throw std::invalid_argument("invalid graph:\n" + report.to_string());

    Drawing d;
    d.depth = opt.depth;
    const std::size_t layer_count = graph.layers.size();
    d.layer_y.resize(layer_count);
    for (std::size_t i = 0; i < layer_count; ++i)
        d.layer_y[i] = static_cast<double>(i) * opt.layer_gap;

    const std::size_t pairs = graph.pair_count();
    std::vector<BipartiteSlice> slices;
    std::vector<BicliqueCover> covers;
    std::vector<std::vector<NodeId>> center_ids(pairs);
    slices.reserve(pairs);
    covers.reserve(pairs);
    for (std::size_t p = 0; p < pairs; ++p) {
        slices.push_back(slice(graph, p));
        covers.push_back(cover(slices[p], opt.coloring, opt.priority_pq));
        for (std::size_t i = 0; i < covers[p].size(); ++i)
            center_ids[p].push_back(center_prefix(p) + std::to_string(i));
    }

    // coordinates for original nodes and depth-1 centers
    std::map<NodeId, double> xs;
    std::vector<CenterPlacement> depth1_centers(pairs);
    if (opt.placement == PlacementStrategy::CrossingReduction && pairs > 0) {
        // one sweep over the original layers interleaved with center layers
        LayeredGraph expanded;
        for (std::size_t li = 0; li < layer_count; ++li) {
            expanded.layers.push_back(graph.layers[li]);
            if (li < pairs) expanded.layers.push_back(center_ids[li]);
        }
        for (std::size_t p = 0; p < pairs; ++p)
            for (std::size_t bi = 0; bi < covers[p].size(); ++bi) {
                const Biclique& b = covers[p].bicliques[bi];
                for (std::size_t u : b.upper)
                    expanded.edges.emplace_back(center_ids[p][bi], slices[p].upper[u]);
                for (std::size_t l : b.lower)
                    expanded.edges.emplace_back(center_ids[p][bi], slices[p].lower[l]);
            }
        auto orderings = reduce_crossings_sweep(expanded, opt.crossing_rounds);
        LayoutConfig spacing_cfg;
        spacing_cfg.node_spacing = opt.node_spacing;
        xs = orderings_to_coordinates(orderings, spacing_cfg);
        for (std::size_t p = 0; p < pairs; ++p) {
            depth1_centers[p].center_y = 0.5 * (d.layer_y[p] + d.layer_y[p + 1]);
            for (const NodeId& id : center_ids[p])
                depth1_centers[p].center_x.push_back(xs.at(id));
        }
    } else {
        xs = resolve_coordinates(graph, opt);
        for (std::size_t p = 0; p < pairs; ++p) {
            LayoutConfig cfg = level_config(d.layer_y[p], d.layer_y[p + 1], opt);
            depth1_centers[p] = place_centers_barycenter(covers[p], xs, cfg);
        }
    }

    for (std::size_t li = 0; li < layer_count; ++li)
        for (const NodeId& id : graph.layers[li]) {
            auto lab = graph.node_labels.find(id);
            d.node_glyphs.push_back(
                {id, {xs.at(id), d.layer_y[li]}, lab != graph.node_labels.end() ? lab->second : id});
        }

    // render each pair; keep the rendered covers around for path assembly
    struct PairRender {
        std::optional<RenderedCover> level1;  // depth 1
        std::optional<RenderedCover> um, ml;  // depth 2
    };
    std::vector<PairRender> rendered(pairs);
    int next_biclique_id = 0;

    for (std::size_t p = 0; p < pairs; ++p) {
        SliceInfo info;
        info.pair_index = p;
        info.depth1_cover_size = covers[p].size();
        const double y_top = d.layer_y[p];
        const double y_bottom = d.layer_y[p + 1];
        std::vector<Segment> track;

        if (opt.depth == 1) {
            LayoutConfig cfg = level_config(y_top, y_bottom, opt);
            rendered[p].level1 = render_cover(covers[p], depth1_centers[p], cfg, xs,
                                              opt.smooth_single_edges, d.segments,
                                              next_biclique_id);
            const RenderedCover& rc = *rendered[p].level1;
            info.covers_computed = 1;
            info.covers_laid_out = 1;
            info.laid_out_cover_sizes = {rc.cover.size()};
            info.level_y = {y_top, cfg.y_center, y_bottom};
            info.constraint1_count = constraint1_violations(rc.cover, xs, rc.centers).size();
            append_track_segments(rc, xs, track);
        } else {
            const double y_mid = 0.5 * (y_top + y_bottom);
            for (std::size_t i = 0; i < center_ids[p].size(); ++i)
                xs[center_ids[p][i]] = depth1_centers[p].center_x[i];

            LayeredGraph g3 = build_three_layer(slices[p], covers[p], center_prefix(p));
            BipartiteSlice s_um = slice(g3, 0);
            BipartiteSlice s_ml = slice(g3, 1);
            BicliqueCover cov_um = cover(s_um, opt.coloring, opt.priority_pq);
            BicliqueCover cov_ml = cover(s_ml, opt.coloring, opt.priority_pq);

            LayoutConfig cfg_um = level_config(y_top, y_mid, opt);
            LayoutConfig cfg_ml = level_config(y_mid, y_bottom, opt);
            CenterPlacement pl_um = place_centers_barycenter(cov_um, xs, cfg_um);
            CenterPlacement pl_ml = place_centers_barycenter(cov_ml, xs, cfg_ml);

            rendered[p].um = render_cover(std::move(cov_um), std::move(pl_um), cfg_um, xs,
                                          opt.smooth_single_edges, d.segments, next_biclique_id);
            rendered[p].ml = render_cover(std::move(cov_ml), std::move(pl_ml), cfg_ml, xs,
                                          opt.smooth_single_edges, d.segments, next_biclique_id);

            info.covers_computed = 3;
            info.covers_laid_out = 2;
            info.laid_out_cover_sizes = {rendered[p].um->cover.size(),
                                         rendered[p].ml->cover.size()};
            info.level_y = {y_top, cfg_um.y_center, y_mid, cfg_ml.y_center, y_bottom};
            info.constraint1_count =
                constraint1_violations(covers[p], xs, depth1_centers[p]).size() +
                constraint1_violations(rendered[p].um->cover, xs, rendered[p].um->centers).size() +
                constraint1_violations(rendered[p].ml->cover, xs, rendered[p].ml->centers).size();
            append_track_segments(*rendered[p].um, xs, track);
            append_track_segments(*rendered[p].ml, xs, track);
        }

        info.track_crossings = count_segment_crossings(track);
        d.covers_computed += info.covers_computed;
        d.slices.push_back(std::move(info));
    }

    // one chained path per original edge, in the graph's edge order
    std::map<NodeId, std::size_t> layer_of;
    for (std::size_t li = 0; li < layer_count; ++li)
        for (const NodeId& id : graph.layers[li]) layer_of.emplace(id, li);
    std::vector<std::map<NodeId, std::size_t>> upper_index(pairs), lower_index(pairs);
    for (std::size_t p = 0; p < pairs; ++p) {
        for (std::size_t i = 0; i < slices[p].upper.size(); ++i)
            upper_index[p].emplace(slices[p].upper[i], i);
        for (std::size_t i = 0; i < slices[p].lower.size(); ++i)
            lower_index[p].emplace(slices[p].lower[i], i);
    }

    for (const auto& [a, b] : graph.edges) {
        const std::size_t la = layer_of.at(a);
        const std::size_t lb = layer_of.at(b);
        const std::size_t p = std::min(la, lb);
        const NodeId& up = la < lb ? a : b;
        const NodeId& lo = la < lb ? b : a;
        const std::size_t u_idx = upper_index[p].at(up);
        const std::size_t l_idx = lower_index[p].at(lo);

        EdgePath path{up, lo, {}};
        if (opt.depth == 1) {
            append_edge_segments(*rendered[p].level1, u_idx, l_idx, path.segments);
        } else {
            const std::size_t b1 = covers[p].first_covering(u_idx, l_idx);
            if (b1 >= covers[p].size())
                throw std::logic_error("confluent_layout: edge not covered by any biclique");
            append_edge_segments(*rendered[p].um, u_idx, b1, path.segments);
            append_edge_segments(*rendered[p].ml, b1, l_idx, path.segments);
        }
        d.edge_paths.push_back(std::move(path));
    }
    return d;
}

}  // namespace confluent
