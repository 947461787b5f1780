#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "slt/geom.hpp"
#include "slt/graph.hpp"
#include "slt/instances.hpp"

namespace slt::test {

inline double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

/// Random point of a focal ellipse; on the boundary when `boundary` is set.
inline Point2 sample_ellipse(const FocalEllipse& e, Rng& rng, bool boundary) {
    const double a = 0.5 * e.sum;
    const double c = 0.5 * distance(e.f1, e.f2);
    const double b = std::sqrt((a - c) * (a + c));
    const double phi = std::atan2(e.f2.y - e.f1.y, e.f2.x - e.f1.x);
    const double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const double r = boundary ? 1.0 : std::sqrt(uniform01(rng));
    const double u = a * r * std::cos(theta);
    const double v = b * r * std::sin(theta);
    return {0.5 * (e.f1.x + e.f2.x) + u * std::cos(phi) - v * std::sin(phi),
            0.5 * (e.f1.y + e.f2.y) + u * std::sin(phi) + v * std::cos(phi)};
}

/// Left auxiliary focus: on the horizontal line through p with d(p,a) = d(a,s).
inline Point2 inner_horizontal_focus(Point2 p, Point2 s) {
    const double dx = s.x - p.x;
    const double d = distance(p, s);
    return {p.x + d * d / (2.0 * dx), p.y};
}

/// Points shaped like a canonical tile image: x in [0,1], |slope to (2,0)| <= sqrt(eps)/2.
inline std::vector<Point2> tile_like_points(Rng& rng, double eps, std::size_t n) {
    std::vector<Point2> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = uniform01(rng);
        const double y = uniform(rng, -1.0, 1.0) * (2.0 - x) * 0.5 * std::sqrt(eps);
        pts.push_back({x, y});
    }
    return pts;
}

inline std::vector<std::vector<double>> floyd_warshall(const GeoGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, std::numeric_limits<double>::infinity()));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0.0;
    }
    for (const Edge& e : g.edges()) {
        d[e.u][e.v] = std::min(d[e.u][e.v], e.weight);
        d[e.v][e.u] = std::min(d[e.v][e.u], e.weight);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    return d;
}

inline GeoGraph graph_of(const std::vector<Point2>& pts, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    GeoGraph g;
    for (Point2 p : pts) {
        g.add_vertex(p, VertexKind::input);
    }
    for (auto [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

inline Instance random_instance(Rng& rng, std::size_t n, double eps) {
    Instance inst;
    inst.epsilon = eps;
    inst.source = 0;
    for (std::size_t i = 0; i < n; ++i) {
        inst.points.push_back({uniform01(rng), uniform01(rng)});
    }
    return inst;
}

/// O(n^2) count of separation and covering failures when every point is a net point.
inline std::pair<std::size_t, std::size_t> all_points_net_violations(const Instance& inst) {
    const Point2 s = inst.source_point();
    std::size_t separation = 0;
    std::size_t covering = 0;
    for (std::size_t i = 0; i < inst.points.size(); ++i) {
        if (i == inst.source) {
            continue;
        }
        const double di = distance(inst.points[i], s);
        covering += !(di > 0.0);
        for (std::size_t j = i + 1; j < inst.points.size(); ++j) {
            if (j == inst.source) {
                continue;
            }
            const double dj = distance(inst.points[j], s);
            separation += distance(inst.points[i], inst.points[j]) <= inst.epsilon * std::min(di, dj);
        }
    }
    return {separation, covering};
}

}  // namespace slt::test
