#include "slt/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

namespace slt {

namespace {

std::vector<Vertex> instance_vertices(const Instance& instance) {
    std::vector<Vertex> vertices;
    vertices.reserve(instance.points.size());
    for (std::size_t i = 0; i < instance.points.size(); ++i) {
        vertices.push_back(
            Vertex{instance.points[i], i == instance.source ? VertexKind::source : VertexKind::input, i});
    }
    return vertices;
}

std::vector<std::vector<std::size_t>> mst_adjacency(const Instance& instance) {
    const SpanningTree t = mst(instance.points);
    std::vector<std::vector<std::size_t>> adj(instance.points.size());
    for (auto [u, v] : t.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
    }
    return adj;
}

std::vector<double> source_distances(const Instance& instance) {
    std::vector<double> d;
    d.reserve(instance.points.size());
    for (Point2 p : instance.points) {
        d.push_back(distance(p, instance.source_point()));
    }
    return d;
}

void check_eps(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("baselines require 0 < eps < 1");
    }
}

}  // namespace

RootedTree mst_tree(const Instance& instance) {
    validate(instance);
    return make_rooted_tree(instance_vertices(instance), mst(instance.points).edges, instance.source);
}

RootedTree kry_slt(const Instance& instance, double eps) {
    validate(instance);
    check_eps(eps);
    const std::size_t n = instance.points.size();
    const std::size_t s = instance.source;
    const auto adj = mst_adjacency(instance);
    const std::vector<double> ds = source_distances(instance);
    std::vector<double> d(n, std::numeric_limits<double>::infinity());
    d[s] = 0.0;
    std::vector<std::size_t> spokes;

    struct Frame {
        std::size_t u;
        std::size_t from;
        std::size_t next;
    };
    auto enter = [&](std::size_t u) {
        if (d[u] > (1.0 + eps) * ds[u]) {
            d[u] = ds[u];
            spokes.push_back(u);
        }
    };
    std::vector<Frame> stack{{s, npos, 0}};
    enter(s);
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next == adj[f.u].size()) {
            const std::size_t child = f.u;
            const std::size_t up = f.from;
            stack.pop_back();
            if (up != npos) {
                const double w = distance(instance.points[child], instance.points[up]);
                d[up] = std::min(d[up], d[child] + w);
            }
            continue;
        }
        const std::size_t v = adj[f.u][f.next++];
        if (v == f.from) {
            continue;
        }
        const double w = distance(instance.points[f.u], instance.points[v]);
        d[v] = std::min(d[v], d[f.u] + w);
        const std::size_t u = f.u;
        stack.push_back(Frame{v, u, 0});
        enter(v);
    }

    GeoGraph h;
    for (const Vertex& v : instance_vertices(instance)) {
        h.add_vertex(v.pos, v.kind, v.label);
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v : adj[u]) {
            if (u < v && seen.emplace(u, v).second) {
                h.add_edge(u, v);
            }
        }
    }
    for (std::size_t v : spokes) {
        if (seen.insert(edge_key(v, s)).second) {
            h.add_edge(v, s);
        }
    }
    return shortest_path_tree(h, s);
}

std::vector<std::size_t> hamiltonian_path(const Instance& instance) {
    validate(instance);
    const auto adj = mst_adjacency(instance);
    std::vector<std::size_t> order;
    order.reserve(instance.points.size());
    std::vector<char> seen(instance.points.size(), 0);
    std::vector<std::size_t> stack{instance.source};
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        if (seen[u]) {
            continue;
        }
        seen[u] = 1;
        order.push_back(u);
        for (auto it = adj[u].rbegin(); it != adj[u].rend(); ++it) {
            if (!seen[*it]) {
                stack.push_back(*it);
            }
        }
    }
    return order;
}

std::vector<std::vector<std::size_t>> break_path(const Instance& instance, const std::vector<std::size_t>& path,
                                                 double factor) {
    const std::vector<double> ds = source_distances(instance);
    std::vector<std::vector<std::size_t>> runs;
    double weight = 0.0;
    double nearest = 0.0;
    for (std::size_t v : path) {
        if (v == instance.source) {
            continue;
        }
        if (!runs.empty()) {
            const double w = weight + distance(instance.points[runs.back().back()], instance.points[v]);
            const double m = std::min(nearest, ds[v]);
            if (w <= factor * m) {
                runs.back().push_back(v);
                weight = w;
                nearest = m;
                continue;
            }
        }
        runs.push_back({v});
        weight = 0.0;
        nearest = ds[v];
    }
    return runs;
}

namespace {

std::size_t anchor_of(const std::vector<std::size_t>& run, const std::vector<double>& ds) {
    std::size_t best = run.front();
    for (std::size_t v : run) {
        if (ds[v] < ds[best]) {
            best = v;
        }
    }
    return best;
}

}  // namespace

RootedTree abp_slt(const Instance& instance, double eps) {
    check_eps(eps);
    const std::vector<double> ds = source_distances(instance);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& run : break_path(instance, hamiltonian_path(instance), eps)) {
        for (std::size_t t = 0; t + 1 < run.size(); ++t) {
            edges.emplace_back(run[t], run[t + 1]);
        }
        edges.emplace_back(anchor_of(run, ds), instance.source);
    }
    return make_rooted_tree(instance_vertices(instance), edges, instance.source);
}

RootedTree solomon_slt(const Instance& instance, double eps) {
    check_eps(eps);
    const std::vector<double> ds = source_distances(instance);
    const Point2 s = instance.source_point();
    GeoGraph g;
    for (const Vertex& v : instance_vertices(instance)) {
        g.add_vertex(v.pos, v.kind, v.label);
    }
    for (const auto& run : break_path(instance, hamiltonian_path(instance), std::sqrt(eps))) {
        const std::size_t first_edge = g.edges().size();
        std::vector<std::size_t> level = run;
        while (level.size() > 1) {
            std::vector<std::size_t> next;
            for (std::size_t t = 0; t + 1 < level.size(); t += 2) {
                const Point2 a = g.vertices()[level[t]].pos;
                const Point2 b = g.vertices()[level[t + 1]].pos;
                const Point2 mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
                const double to_source = distance(mid, s);
                const double shift = to_source > 0.0 ? std::min(distance(a, b), 0.5 * to_source) / to_source : 0.0;
                const Point2 q{mid.x + shift * (s.x - mid.x), mid.y + shift * (s.y - mid.y)};
                const std::size_t id = g.add_vertex(q, VertexKind::steiner);
                g.add_edge(level[t], id);
                g.add_edge(level[t + 1], id);
                next.push_back(id);
            }
            if (level.size() % 2 == 1) {
                next.push_back(level.back());
            }
            level = std::move(next);
        }
        g.add_edge(level.front(), instance.source);
        double weight = 0.0;
        for (std::size_t e = first_edge; e < g.edges().size(); ++e) {
            weight += g.edges()[e].weight;
        }
        if (weight > kGadgetFactor * ds[anchor_of(run, ds)]) {
            throw std::logic_error("solomon gadget exceeds its weight bound");
        }
    }
    return prune_steiner_leaves(shortest_path_tree(g, instance.source));
}

}  // namespace slt
