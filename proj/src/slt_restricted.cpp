#include "slt/slt_restricted.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace slt {

namespace {

bool inside(const StripRect& r, Point2 q) {
    return q.x > r.x_lo && q.x <= r.x_hi && q.y >= r.y_lo && q.y <= r.y_hi;
}

std::vector<std::optional<StripRect>> rectangles_for(Point2 p, double eps, const Ladder& ladder, std::size_t owner) {
    const FocalEllipse ellipse = sandwich_ellipse(p, kCanonicalSource, eps);
    std::vector<std::optional<StripRect>> rects;
    for (std::size_t i = 0; i + 1 < ladder.xs.size(); ++i) {
        const std::optional<Box> box = strip_bounding_box(ellipse, ladder.xs[i], ladder.xs[i + 1]);
        if (box) {
            rects.push_back(StripRect{box->x_lo, box->x_hi, box->y_lo, box->y_hi, owner});
        } else {
            rects.push_back(std::nullopt);
        }
    }
    return rects;
}

}  // namespace

std::vector<std::optional<StripRect>> level_rectangles(Point2 p, double eps, std::size_t owner) {
    const int k = ladder_depth(eps);
    return rectangles_for(p, eps, ladder_lines(p, eps, k + 1, owner), owner);
}

LeveledPath candidate_path(std::size_t p, std::span<const std::optional<StripRect>> rects,
                           std::span<const LineKey> strip_keys, const StripSolutions& solutions,
                           std::span<const Point2> points) {
    if (rects.size() != strip_keys.size()) {
        throw std::invalid_argument("candidate_path: one strip key per rectangle required");
    }
    LeveledPath path;
    path.vertices.push_back(p);
    path.levels.push_back(-1);
    for (std::size_t i = 0; i < rects.size(); ++i) {
        if (!rects[i]) {
            continue;
        }
        auto it = solutions.find(strip_keys[i]);
        if (it == solutions.end()) {
            continue;
        }
        for (std::size_t member : it->second) {
            if (inside(*rects[i], points[member])) {
                if (path.vertices.back() == member) {
                    throw std::logic_error("candidate_path: consecutive levels chose the same point");
                }
                path.vertices.push_back(member);
                path.levels.push_back(static_cast<int>(i));
                break;
            }
        }
    }
    path.vertices.push_back(LeveledPath::kPathSource);
    path.levels.push_back(static_cast<int>(rects.size()) + 1);
    return path;
}

LeveledPath prune_path(const LeveledPath& path) {
    LeveledPath out = path;
    for (;;) {
        bool changed = false;
        // interior vertices occupy positions 1 .. size-2
        for (std::size_t t = 1; t + 2 < out.vertices.size(); ++t) {
            if (out.levels[t + 1] == out.levels[t] + 1) {
                out.vertices.erase(out.vertices.begin() + static_cast<std::ptrdiff_t>(t + 1));
                out.levels.erase(out.levels.begin() + static_cast<std::ptrdiff_t>(t + 1));
                changed = true;
                break;
            }
        }
        if (!changed) {
            return out;
        }
    }
}

RestrictedTileResult restricted_tile_tree_detailed(std::span<const std::size_t> net,
                                                   std::span<const Point2> points, double eps) {
    if (!(eps > 0.0 && eps <= 1.0 / 16.0)) {
        throw std::invalid_argument("tile algorithms require 0 < eps <= 1/16");
    }
    check_canonical_box(points, eps);
    for (std::size_t p : net) {
        if (p >= points.size()) {
            throw std::invalid_argument("restricted_tile_tree: net index out of range");
        }
    }
    RestrictedTileResult out;
    out.graph.add_vertex(kCanonicalSource, VertexKind::source);
    for (std::size_t i = 0; i < points.size(); ++i) {
        out.graph.add_vertex(points[i], VertexKind::input, i);
    }
    if (net.empty()) {
        return out;
    }

    const int k = ladder_depth(eps);
    std::vector<std::vector<LineKey>> keys(net.size());
    std::map<LineKey, std::vector<StripRect>> groups;
    for (std::size_t t = 0; t < net.size(); ++t) {
        const Point2 p = points[net[t]];
        const Ladder ladder = ladder_lines(p, eps, k + 1, t);
        out.rectangles.push_back(rectangles_for(p, eps, ladder, t));
        keys[t].assign(ladder.lines.begin(), ladder.lines.end() - 1);
        for (int i = 0; i < k; ++i) {
            if (out.rectangles[t][i]) {
                groups[keys[t][i]].push_back(*out.rectangles[t][i]);
            }
        }
    }

    std::vector<std::size_t> by_x(points.size());
    std::iota(by_x.begin(), by_x.end(), std::size_t{0});
    std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) {
        return points[a].x != points[b].x ? points[a].x < points[b].x : a < b;
    });

    std::vector<std::vector<char>> nonempty(net.size(), std::vector<char>(k, 0));
    std::vector<std::size_t> cand;
    std::vector<double> ys;
    std::vector<Interval> intervals;
    for (const auto& [key, rects] : groups) {
        const double x_lo = rects.front().x_lo;
        double x_hi = rects.front().x_hi;
        for (const StripRect& r : rects) {
            if (r.x_lo != x_lo) {
                throw std::logic_error("strip rectangles disagree on the left boundary");
            }
            x_hi = std::min(x_hi, r.x_hi);
        }
        auto first = std::upper_bound(by_x.begin(), by_x.end(), x_lo,
                                      [&](double v, std::size_t i) { return v < points[i].x; });
        auto last = std::upper_bound(first, by_x.end(), x_hi,
                                     [&](double v, std::size_t i) { return v < points[i].x; });
        cand.assign(first, last);
        std::sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
            return points[a].y != points[b].y ? points[a].y < points[b].y : a < b;
        });
        ys.clear();
        for (std::size_t c : cand) {
            ys.push_back(points[c].y);
        }
        intervals.clear();
        for (const StripRect& r : rects) {
            auto it = std::lower_bound(ys.begin(), ys.end(), r.y_lo);
            if (it != ys.end() && *it <= r.y_hi) {
                intervals.emplace_back(r.y_lo, r.y_hi);
                nonempty[r.owner][key.level] = 1;
            }
        }
        if (intervals.empty()) {
            continue;
        }
        std::vector<std::size_t> members;
        for (std::size_t pos : hit_intervals_discrete(intervals, ys)) {
            members.push_back(cand[pos]);
        }
        std::sort(members.begin(), members.end());
        out.solutions.emplace(key, std::move(members));
    }

    auto vertex_of = [](std::size_t v) { return v == LeveledPath::kPathSource ? std::size_t{0} : v + 1; };
    std::set<std::pair<std::size_t, std::size_t>> cand_edges;
    std::set<std::pair<std::size_t, std::size_t>> kept_edges;
    for (std::size_t t = 0; t < net.size(); ++t) {
        LeveledPath path = candidate_path(net[t], out.rectangles[t], keys[t], out.solutions, points);
        std::vector<char> visited(k, 0);
        for (std::size_t i = 1; i + 1 < path.levels.size(); ++i) {
            visited[path.levels[i]] = 1;
        }
        if (visited != nonempty[t]) {
            throw std::logic_error("candidate path skips a nonempty rectangle");
        }
        LeveledPath pruned = prune_path(path);
        for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
            cand_edges.insert(edge_key(vertex_of(path.vertices[i]), vertex_of(path.vertices[i + 1])));
        }
        for (std::size_t i = 0; i + 1 < pruned.vertices.size(); ++i) {
            const auto e = edge_key(vertex_of(pruned.vertices[i]), vertex_of(pruned.vertices[i + 1]));
            if (kept_edges.insert(e).second) {
                out.graph.add_edge(e.first, e.second);
            }
        }
        out.candidates.push_back(std::move(path));
        out.pruned.push_back(std::move(pruned));
    }
    out.candidate_edges.assign(cand_edges.begin(), cand_edges.end());
    return out;
}

GeoGraph restricted_tile_tree(std::span<const std::size_t> net, std::span<const Point2> points, double eps) {
    return std::move(restricted_tile_tree_detailed(net, points, eps).graph);
}

}  // namespace slt
