#include "slt/cnet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace slt {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::uint64_t cell_key(std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(cx) << 32) ^ static_cast<std::uint64_t>(cy & 0xffffffff);
}

}  // namespace

CenteredNet build_cnet(std::span<const Point2> points, Point2 source, double eps) {
    if (!(eps > 0.0 && eps < 1.0 / 9.0)) {
        throw std::invalid_argument("build_cnet requires 0 < eps < 1/9");
    }
    const std::size_t n = points.size();
    CenteredNet out;
    out.assignment.assign(n, kNone);
    if (n == 0) {
        return out;
    }
    std::vector<double> dist(n);
    double max_d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        dist[i] = distance(points[i], source);
        if (dist[i] == 0.0) {
            throw std::invalid_argument("build_cnet: point coincides with the source");
        }
        max_d = std::max(max_d, dist[i]);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return dist[a] != dist[b] ? dist[a] < dist[b] : a < b;
    });

    // every covering radius eps*d(a,s) is at most one cell
    const double cell = eps * max_d;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid;
    for (std::size_t p : order) {
        const auto cx = static_cast<std::int64_t>(std::floor(points[p].x / cell));
        const auto cy = static_cast<std::int64_t>(std::floor(points[p].y / cell));
        std::size_t cover_pos = kNone;
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = grid.find(cell_key(cx + dx, cy + dy));
                if (it == grid.end()) {
                    continue;
                }
                for (std::size_t pos : it->second) {
                    const std::size_t a = out.net[pos];
                    if (pos < cover_pos && distance(points[p], points[a]) <= eps * dist[a]) {
                        cover_pos = pos;
                    }
                }
            }
        }
        if (cover_pos == kNone) {
            grid[cell_key(cx, cy)].push_back(out.net.size());
            out.net.push_back(p);
            out.assignment[p] = p;
        } else {
            out.assignment[p] = out.net[cover_pos];
        }
    }
    return out;
}

CnetViolations check_cnet(std::span<const Point2> points, Point2 source, double eps,
                          std::span<const std::size_t> net) {
    CnetViolations v;
    for (std::size_t i = 0; i < net.size(); ++i) {
        const double di = distance(points[net[i]], source);
        for (std::size_t j = i + 1; j < net.size(); ++j) {
            const double dj = distance(points[net[j]], source);
            if (distance(points[net[i]], points[net[j]]) <= eps * std::min(di, dj)) {
                ++v.separation;
            }
        }
    }
    for (std::size_t p = 0; p < points.size(); ++p) {
        const double radius = eps * distance(points[p], source);
        const bool covered = std::any_of(net.begin(), net.end(),
                                         [&](std::size_t a) { return distance(points[p], points[a]) <= radius; });
        if (!covered) {
            ++v.covering;
        }
    }
    return v;
}

namespace {

using Adjacency = std::vector<std::vector<std::pair<std::size_t, double>>>;

/// Distances from u in the current spanner, abandoning paths longer than `limit`.
std::vector<double> bounded_dijkstra(const Adjacency& adj, std::size_t u, double limit) {
    std::vector<double> d(adj.size(), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    d[u] = 0.0;
    heap.emplace(0.0, u);
    while (!heap.empty()) {
        const auto [du, x] = heap.top();
        heap.pop();
        if (du > d[x] || du > limit) {
            continue;
        }
        for (const auto& [y, w] : adj[x]) {
            if (du + w < d[y]) {
                d[y] = du + w;
                heap.emplace(d[y], y);
            }
        }
    }
    return d;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> cluster_spanner(std::span<const Point2> cluster) {
    constexpr double kStretch = 2.0;
    constexpr std::size_t kMatrixLimit = 2000;
    const std::size_t m = cluster.size();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (m < 2) {
        return edges;
    }
    std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
    pairs.reserve(m * (m - 1) / 2);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            pairs.emplace_back(distance(cluster[i], cluster[j]), i, j);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    Adjacency adj(m);
    const bool cached = m <= kMatrixLimit;
    // upper bounds on current spanner distances, refreshed lazily
    std::vector<double> bound(cached ? m * m : 0, std::numeric_limits<double>::infinity());
    for (const auto& [d, u, v] : pairs) {
        const double limit = kStretch * d;
        if (cached) {
            if (bound[u * m + v] <= limit) {
                continue;
            }
            const std::vector<double> du = bounded_dijkstra(adj, u, std::numeric_limits<double>::infinity());
            for (std::size_t x = 0; x < m; ++x) {
                bound[u * m + x] = std::min(bound[u * m + x], du[x]);
                bound[x * m + u] = bound[u * m + x];
            }
            if (bound[u * m + v] <= limit) {
                continue;
            }
            bound[u * m + v] = bound[v * m + u] = d;
        } else if (bounded_dijkstra(adj, u, limit)[v] <= limit) {
            continue;
        }
        adj[u].emplace_back(v, d);
        adj[v].emplace_back(u, d);
        edges.emplace_back(u, v);
    }
    return edges;
}

}  // namespace slt
