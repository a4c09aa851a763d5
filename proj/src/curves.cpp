#include "confluent/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace confluent {

double bernstein(int k, int n, double u) {
    if (n < 0 || k < 0 || k > n)
        throw std::out_of_range("bernstein: need 0 <= k <= n");
    double binom = 1.0;
    for (int i = 1; i <= k; ++i)
        binom = binom * static_cast<double>(n - k + i) / static_cast<double>(i);
    return binom * std::pow(u, k) * std::pow(1.0 - u, n - k);
}

Point2 bezier_eval(std::span<const Point2> points, double u) {
    if (points.size() < 2)
        throw std::invalid_argument("bezier_eval: need at least 2 control points");
    const int n = static_cast<int>(points.size()) - 1;
    Point2 out;
    for (int k = 0; k <= n; ++k) {
        double w = bernstein(k, n, u);
        out.x += points[static_cast<std::size_t>(k)].x * w;
        out.y += points[static_cast<std::size_t>(k)].y * w;
    }
    return out;
}

CubicBezier control_points(double x_node, double x_center, const LayoutConfig& cfg,
                           CurveSide side, int biclique_id) {
    CubicBezier c;
    c.biclique_id = biclique_id;
    c.side = side;
    const double dy = cfg.delta_y;
    switch (side) {
        case CurveSide::Upper:
            c.p0 = {x_node, cfg.y_upper};
            c.p1 = {x_node, cfg.y_upper + dy};
            c.p2 = {x_center, cfg.y_center - dy};
            c.p3 = {x_center, cfg.y_center};
            break;
        case CurveSide::Lower:
            c.p0 = {x_center, cfg.y_center};
            c.p1 = {x_center, cfg.y_center + dy};
            c.p2 = {x_node, cfg.y_lower - dy};
            c.p3 = {x_node, cfg.y_lower};
            break;
        case CurveSide::Direct:
            // single-edge biclique drawn as one curve spanning the whole gap;
            // x_center doubles as the lower node's x
            c.p0 = {x_node, cfg.y_upper};
            c.p1 = {x_node, cfg.y_upper + dy};
            c.p2 = {x_center, cfg.y_lower - dy};
            c.p3 = {x_center, cfg.y_lower};
            break;
    }
    return c;
}

std::vector<CubicBezier> render_biclique(const Biclique& biclique, const BipartiteSlice& slice,
                                         const std::map<NodeId, double>& node_x, double center_x,
                                         const LayoutConfig& cfg, int biclique_id) {
    auto x_of = [&node_x](const NodeId& id) {
        auto it = node_x.find(id);
        if (it == node_x.end())
            throw std::invalid_argument("render_biclique: no x coordinate for node '" + id + "'");
        return it->second;
    };
    std::vector<CubicBezier> segments;
    segments.reserve(biclique.upper.size() + biclique.lower.size());
    for (std::size_t u : biclique.upper)
        segments.push_back(
            control_points(x_of(slice.upper[u]), center_x, cfg, CurveSide::Upper, biclique_id));
    for (std::size_t l : biclique.lower)
        segments.push_back(
            control_points(x_of(slice.lower[l]), center_x, cfg, CurveSide::Lower, biclique_id));
    return segments;
}

namespace {

struct Cubic {
    Point2 p[4];
};

struct Box {
    double x0, y0, x1, y1;
};

Box box_of(const Cubic& c) {
    Box b{c.p[0].x, c.p[0].y, c.p[0].x, c.p[0].y};
    for (int i = 1; i < 4; ++i) {
        b.x0 = std::min(b.x0, c.p[i].x);
        b.y0 = std::min(b.y0, c.p[i].y);
        b.x1 = std::max(b.x1, c.p[i].x);
        b.y1 = std::max(b.y1, c.p[i].y);
    }
    return b;
}

bool boxes_overlap(const Box& a, const Box& b) {
    return a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1;
}

double cross(Point2 o, Point2 a, Point2 b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double flatness(const Cubic& c) {
    const double dx = c.p[3].x - c.p[0].x;
    const double dy = c.p[3].y - c.p[0].y;
    const double len = std::hypot(dx, dy);
    if (len < 1e-300)
        return std::max({distance(c.p[1], c.p[0]), distance(c.p[2], c.p[0]),
                         distance(c.p[3], c.p[0])});
    const double d1 = std::abs(cross(c.p[0], c.p[3], c.p[1])) / len;
    const double d2 = std::abs(cross(c.p[0], c.p[3], c.p[2])) / len;
    return std::max(d1, d2);
}

void split(const Cubic& c, Cubic& left, Cubic& right) {
    auto mid = [](Point2 a, Point2 b) { return Point2{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; };
    Point2 p01 = mid(c.p[0], c.p[1]);
    Point2 p12 = mid(c.p[1], c.p[2]);
    Point2 p23 = mid(c.p[2], c.p[3]);
    Point2 p012 = mid(p01, p12);
    Point2 p123 = mid(p12, p23);
    Point2 m = mid(p012, p123);
    left = {{c.p[0], p01, p012, m}};
    right = {{m, p123, p23, c.p[3]}};
}

bool segment_intersection(Point2 a0, Point2 a1, Point2 b0, Point2 b1, Point2& out, double& t,
                          double& w) {
    const double rx = a1.x - a0.x, ry = a1.y - a0.y;
    const double sx = b1.x - b0.x, sy = b1.y - b0.y;
    const double denom = rx * sy - ry * sx;
    if (std::abs(denom) < 1e-30) return false;  // parallel; tangential overlaps excluded by caller
    const double qx = b0.x - a0.x, qy = b0.y - a0.y;
    t = (qx * sy - qy * sx) / denom;
    w = (qx * ry - qy * rx) / denom;
    const double lo = -1e-9, hi = 1.0 + 1e-9;
    if (t < lo || t > hi || w < lo || w > hi) return false;
    out = {a0.x + t * rx, a0.y + t * ry};
    return true;
}

}  // namespace

int bezier_pair_crossings(const CubicBezier& a, const CubicBezier& b, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("bezier_pair_crossings: eps must be positive");

    const Cubic ca{{a.p0, a.p1, a.p2, a.p3}};
    const Cubic cb{{b.p0, b.p1, b.p2, b.p3}};
    if (ca.p[0] == cb.p[0] && ca.p[1] == cb.p[1] && ca.p[2] == cb.p[2] && ca.p[3] == cb.p[3])
        return 0;  // identical curves overlap tangentially everywhere

    // shared endpoints, as (param on a, param on b) pairs
    std::vector<std::pair<double, double>> shared;
    for (int ea = 0; ea < 2; ++ea)
        for (int eb = 0; eb < 2; ++eb)
            if (ca.p[ea * 3] == cb.p[eb * 3])
                shared.emplace_back(static_cast<double>(ea), static_cast<double>(eb));

    const Box ba = box_of(ca), bb = box_of(cb);
    const double diag = std::max({1.0, std::hypot(ba.x1 - ba.x0, ba.y1 - ba.y0),
                                  std::hypot(bb.x1 - bb.x0, bb.y1 - bb.y0)});
    const double merge_radius = 1e-6 * diag;
    // curves meeting a shared endpoint with equal tangents converge below the
    // flatness resolution well inside this parameter window, so candidate
    // intersections found there are subdivision noise, not crossings
    constexpr double kSharedParamWindow = 1e-2;
    constexpr int kMaxDepth = 64;

    struct Job {
        Cubic a, b;
        double ta0, ta1, tb0, tb1;
        int depth;
    };
    std::vector<Job> stack;
    stack.push_back({ca, cb, 0.0, 1.0, 0.0, 1.0, 0});

    struct Hit {
        Point2 p;
        double ta, tb;
    };
    std::vector<Hit> hits;
    while (!stack.empty()) {
        Job job = stack.back();
        stack.pop_back();
        if (!boxes_overlap(box_of(job.a), box_of(job.b))) continue;

        const bool flat_a = flatness(job.a) < eps;
        const bool flat_b = flatness(job.b) < eps;
        if ((flat_a && flat_b) || job.depth >= kMaxDepth) {
            Point2 p;
            double t = 0.0, w = 0.0;
            if (segment_intersection(job.a.p[0], job.a.p[3], job.b.p[0], job.b.p[3], p, t, w))
                hits.push_back({p, job.ta0 + t * (job.ta1 - job.ta0),
                                job.tb0 + w * (job.tb1 - job.tb0)});
            continue;
        }
        struct Piece {
            Cubic c;
            double lo, hi;
        };
        Piece a_pieces[2] = {{job.a, job.ta0, job.ta1}, {}};
        Piece b_pieces[2] = {{job.b, job.tb0, job.tb1}, {}};
        int na = 1, nb = 1;
        if (!flat_a) {
            const double mid = 0.5 * (job.ta0 + job.ta1);
            split(job.a, a_pieces[0].c, a_pieces[1].c);
            a_pieces[0] = {a_pieces[0].c, job.ta0, mid};
            a_pieces[1] = {a_pieces[1].c, mid, job.ta1};
            na = 2;
        }
        if (!flat_b) {
            const double mid = 0.5 * (job.tb0 + job.tb1);
            split(job.b, b_pieces[0].c, b_pieces[1].c);
            b_pieces[0] = {b_pieces[0].c, job.tb0, mid};
            b_pieces[1] = {b_pieces[1].c, mid, job.tb1};
            nb = 2;
        }
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j)
                stack.push_back({a_pieces[i].c, b_pieces[j].c, a_pieces[i].lo, a_pieces[i].hi,
                                 b_pieces[j].lo, b_pieces[j].hi, job.depth + 1});
    }

    // merge hits found by neighboring pieces, then drop shared-endpoint noise
    std::vector<Hit> distinct;
    for (const Hit& h : hits) {
        bool dup = false;
        for (const Hit& q : distinct)
            if (distance(h.p, q.p) <= merge_radius) {
                dup = true;
                break;
            }
        if (!dup) distinct.push_back(h);
    }
    int count = 0;
    for (const Hit& h : distinct) {
        bool excluded = false;
        for (const auto& [pa, pb] : shared)
            if (std::abs(h.ta - pa) < kSharedParamWindow && std::abs(h.tb - pb) < kSharedParamWindow) {
                excluded = true;
                break;
            }
        if (!excluded) ++count;
    }
    return count;
}

}  // namespace confluent
