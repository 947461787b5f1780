#include "slt/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace slt {

std::vector<std::pair<std::size_t, std::size_t>> prufer_decode(const std::vector<std::size_t>& sequence,
                                                               std::size_t n) {
    if (n < 2 || sequence.size() != n - 2) {
        throw std::invalid_argument("prufer_decode: sequence length must be n-2");
    }
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t v : sequence) {
        if (v >= n) {
            throw std::invalid_argument("prufer_decode: label out of range");
        }
        ++degree[v];
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(n - 1);
    for (std::size_t v : sequence) {
        std::size_t leaf = 0;
        while (degree[leaf] != 1) {
            ++leaf;
        }
        edges.emplace_back(leaf, v);
        --degree[leaf];
        --degree[v];
    }
    std::size_t a = n;
    for (std::size_t v = 0; v < n; ++v) {
        if (degree[v] == 1) {
            if (a == n) {
                a = v;
            } else {
                edges.emplace_back(a, v);
                break;
            }
        }
    }
    return edges;
}

OptimalTree brute_force_opt_st(const Instance& instance, double eps) {
    const std::size_t n = instance.points.size();
    if (n > 8) {
        throw std::invalid_argument("brute_force_opt_st: at most 8 points");
    }
    if (n < 2) {
        throw std::invalid_argument("brute_force_opt_st: at least 2 points");
    }
    if (!(eps >= 0.0)) {
        throw std::invalid_argument("brute_force_opt_st: eps must be nonnegative");
    }
    const auto& pts = instance.points;
    const std::size_t s = instance.source;
    std::vector<std::vector<double>> d(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            d[i][j] = distance(pts[i], pts[j]);
        }
    }
    const double factor = (1.0 + eps) * (1.0 + 1e-9);
    OptimalTree best;
    best.weight = std::numeric_limits<double>::infinity();
    std::vector<std::pair<std::size_t, std::size_t>> best_edges;
    std::vector<std::size_t> seq(n - 2, 0);
    std::vector<std::vector<std::size_t>> adj(n);
    std::vector<double> dist(n);
    std::vector<std::size_t> stack;
    for (;;) {
        const auto edges = prufer_decode(seq, n);
        ++best.trees_checked;
        double w = 0.0;
        for (auto [u, v] : edges) {
            w += d[u][v];
        }
        if (w < best.weight) {
            for (auto& a : adj) {
                a.clear();
            }
            for (auto [u, v] : edges) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
            std::fill(dist.begin(), dist.end(), -1.0);
            dist[s] = 0.0;
            stack.assign(1, s);
            while (!stack.empty()) {
                const std::size_t u = stack.back();
                stack.pop_back();
                for (std::size_t v : adj[u]) {
                    if (dist[v] < 0.0) {
                        dist[v] = dist[u] + d[u][v];
                        stack.push_back(v);
                    }
                }
            }
            bool ok = true;
            for (std::size_t v = 0; v < n && ok; ++v) {
                ok = v == s || dist[v] <= factor * d[v][s];
            }
            if (ok) {
                best.weight = w;
                best_edges = edges;
            }
        }
        // next sequence in lexicographic order
        std::size_t pos = 0;
        while (pos < seq.size() && ++seq[pos] == n) {
            seq[pos++] = 0;
        }
        if (pos == seq.size()) {
            break;
        }
    }
    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i < n; ++i) {
        vertices.push_back(Vertex{pts[i], i == s ? VertexKind::source : VertexKind::input, i});
    }
    best.tree = make_rooted_tree(std::move(vertices), best_edges, s);
    return best;
}

namespace {

bool interiors_overlap(const StripRect& a, const StripRect& b) {
    const double tol_x = 1e-12 * std::max({1.0, std::abs(a.x_hi), std::abs(b.x_hi)});
    const double tol_y = 1e-12 * std::max({1.0, std::abs(a.y_hi), std::abs(b.y_hi)});
    const double ox = std::min(a.x_hi, b.x_hi) - std::max(a.x_lo, b.x_lo);
    const double oy = std::min(a.y_hi, b.y_hi) - std::max(a.y_lo, b.y_lo);
    return ox > tol_x && oy > tol_y;
}

}  // namespace

Certificate steiner_lower_bound_certificate(const Instance& instance, double eps, double strip_width) {
    if (!(strip_width > 0.0)) {
        throw std::invalid_argument("certificate strip width must be positive");
    }
    const Point2 s = instance.source_point();
    const double slope_limit = std::sqrt(eps);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < instance.points.size(); ++i) {
        const Point2 p = instance.points[i];
        if (i != instance.source && p.x + strip_width <= s.x && std::abs((s.y - p.y) / (s.x - p.x)) <= slope_limit) {
            order.push_back(i);
        }
    }
    const auto& pts = instance.points;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pts[a].x != pts[b].x) {
            return pts[a].x < pts[b].x;
        }
        return pts[a].y != pts[b].y ? pts[a].y < pts[b].y : a < b;
    });
    Certificate cert;
    for (std::size_t i : order) {
        const Point2 p = pts[i];
        const FocalEllipse e = sandwich_ellipse(p, s, eps);
        const std::optional<Box> box = strip_bounding_box(e, p.x, p.x + strip_width);
        if (!box) {
            continue;
        }
        const StripRect r{box->x_lo, box->x_hi, box->y_lo, box->y_hi, i};
        const bool clash = std::any_of(cert.boxes.begin(), cert.boxes.end(),
                                       [&](const StripRect& b) { return interiors_overlap(r, b); });
        if (!clash) {
            cert.boxes.push_back(r);
            cert.value += r.x_hi - r.x_lo;
        }
    }
    return cert;
}

}  // namespace slt
