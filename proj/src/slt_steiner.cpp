#include "slt/slt_steiner.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "slt/hitting.hpp"

namespace slt {

double LineKey::x(double eps) const {
    return std::ldexp(static_cast<double>(multiple), 2 * level) * eps;
}

int ladder_depth(double eps) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("ladder_depth requires eps > 0");
    }
    // largest m with 4^m <= 1/(16 eps), or -1 when none
    int m = -1;
    while (16.0 * eps * std::ldexp(1.0, 2 * (m + 1)) <= 1.0) {
        ++m;
    }
    return std::max(1, m + 1);
}

namespace {

std::int64_t floor_div4(std::int64_t v) { return v >= 0 ? v / 4 : -((-v + 3) / 4); }

}  // namespace

Ladder ladder_lines(Point2 p, double eps, int count, std::size_t owner) {
    if (!(eps > 0.0) || count < 1) {
        throw std::invalid_argument("ladder_lines requires eps > 0 and count >= 1");
    }
    Ladder ladder;
    ladder.owner = owner;
    auto j = static_cast<std::int64_t>(std::floor(p.x / eps));
    while (static_cast<double>(j + 1) * eps <= p.x) {
        ++j;
    }
    while (static_cast<double>(j) * eps > p.x) {
        --j;
    }
    LineKey line{0, j + 2};
    for (int i = 0; i < count; ++i) {
        if (i > 0) {
            line = LineKey{i, floor_div4(line.multiple) + 2};
        }
        ladder.lines.push_back(line);
        ladder.xs.push_back(line.x(eps));
    }
    return ladder;
}

Ladder ladder_lines(Point2 p, double eps, std::size_t owner) {
    Ladder ladder = ladder_lines(p, eps, ladder_depth(eps), owner);
    if (!(ladder.xs.back() - p.x < 2.0 / 3.0)) {
        throw std::logic_error("ladder: last line is not within 2/3 of the point");
    }
    return ladder;
}

void check_canonical_box(std::span<const Point2> points, double eps) {
    const double half = 1.1 * std::sqrt(eps);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point2 p = points[i];
        if (!(p.x >= -0.05 && p.x <= 1.05 && std::abs(p.y) <= half)) {
            throw std::invalid_argument("point " + std::to_string(i) + " lies outside the canonical box");
        }
    }
}

namespace {

void check_tile_eps(double eps) {
    if (!(eps > 0.0 && eps <= 1.0 / 16.0)) {
        throw std::invalid_argument("tile algorithms require 0 < eps <= 1/16");
    }
}

}  // namespace

SteinerTileResult steiner_tile_tree_detailed(std::span<const Point2> net, double eps) {
    check_tile_eps(eps);
    check_canonical_box(net, eps);
    SteinerTileResult out;
    out.graph.add_vertex(kCanonicalSource, VertexKind::source);
    for (std::size_t i = 0; i < net.size(); ++i) {
        out.graph.add_vertex(net[i], VertexKind::input, i);
    }
    if (net.empty()) {
        return out;
    }

    std::vector<std::vector<Interval>> own(net.size());
    std::map<LineKey, std::vector<Interval>> by_line;
    for (std::size_t p = 0; p < net.size(); ++p) {
        const FocalEllipse ellipse = sandwich_ellipse(net[p], kCanonicalSource, eps);
        out.ladders.push_back(ladder_lines(net[p], eps, p));
        for (std::size_t i = 0; i < out.ladders[p].lines.size(); ++i) {
            const Interval iv = vertical_cross_section(ellipse, out.ladders[p].xs[i]);
            if (iv.is_empty()) {
                throw std::logic_error("net point " + std::to_string(p) + " has an empty cross-section on L_" +
                                       std::to_string(i));
            }
            own[p].push_back(iv);
            by_line[out.ladders[p].lines[i]].push_back(iv);
        }
    }
    for (const auto& [key, ivs] : by_line) {
        out.piercing.emplace(key, pierce_intervals(ivs));
    }

    std::map<std::pair<double, double>, std::size_t> steiner_ids;
    std::set<std::pair<std::size_t, std::size_t>> edge_set;
    for (std::size_t p = 0; p < net.size(); ++p) {
        std::vector<std::size_t> path{p + 1};
        for (std::size_t i = 0; i < own[p].size(); ++i) {
            const LineKey key = out.ladders[p].lines[i];
            const std::vector<double>& h = out.piercing.at(key);
            // lowest piercing point inside the interval
            auto pick = std::lower_bound(h.begin(), h.end(), own[p][i].lo());
            if (pick == h.end() || !own[p][i].contains(*pick)) {
                throw std::logic_error("piercing set misses an interval");
            }
            const Point2 sp{out.ladders[p].xs[i], *pick};
            auto [it, fresh] = steiner_ids.try_emplace({sp.x, sp.y}, 0);
            if (fresh) {
                it->second = out.graph.add_vertex(sp, VertexKind::steiner);
            }
            if (path.back() != it->second) {
                path.push_back(it->second);
            }
        }
        path.push_back(0);
        for (std::size_t t = 0; t + 1 < path.size(); ++t) {
            const auto e = edge_key(path[t], path[t + 1]);
            if (edge_set.insert(e).second) {
                out.graph.add_edge(e.first, e.second);
            }
        }
        out.paths.push_back(std::move(path));
    }
    return out;
}

GeoGraph steiner_tile_tree(std::span<const Point2> net, double eps) {
    return std::move(steiner_tile_tree_detailed(net, eps).graph);
}

}  // namespace slt
