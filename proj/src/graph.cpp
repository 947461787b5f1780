#include "slt/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>
#include <boost/pending/disjoint_sets.hpp>

namespace slt {

std::size_t GeoGraph::add_vertex(Point2 pos, VertexKind kind, std::size_t label) {
    vertices_.push_back(Vertex{pos, kind, label});
    return vertices_.size() - 1;
}

void GeoGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= vertices_.size() || v >= vertices_.size()) {
        throw std::out_of_range("GeoGraph::add_edge: vertex id out of range");
    }
    if (u == v) {
        throw std::invalid_argument("GeoGraph::add_edge: self-loop");
    }
    edges_.push_back(Edge{u, v, distance(vertices_[u].pos, vertices_[v].pos)});
}

double GeoGraph::total_weight() const {
    double w = 0.0;
    for (const Edge& e : edges_) {
        w += e.weight;
    }
    return w;
}

double RootedTree::weight() const {
    double w = 0.0;
    for (std::size_t v = 0; v < parent.size(); ++v) {
        if (parent[v] != npos) {
            w += distance(vertices[v].pos, vertices[parent[v]].pos);
        }
    }
    return w;
}

std::vector<std::pair<std::size_t, std::size_t>> RootedTree::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t v = 0; v < parent.size(); ++v) {
        if (parent[v] != npos) {
            out.emplace_back(parent[v], v);
        }
    }
    return out;
}

RootedTree make_rooted_tree(std::vector<Vertex> vertices, std::span<const std::pair<std::size_t, std::size_t>> edges,
                            std::size_t root) {
    const std::size_t m = vertices.size();
    if (root >= m) {
        throw std::invalid_argument("tree root out of range");
    }
    if (edges.size() + 1 != m) {
        throw std::invalid_argument("tree with " + std::to_string(m) + " vertices needs " + std::to_string(m - 1) +
                                    " edges, got " + std::to_string(edges.size()));
    }
    std::vector<std::vector<std::size_t>> adj(m);
    for (auto [u, v] : edges) {
        if (u >= m || v >= m || u == v) {
            throw std::invalid_argument("tree edge has invalid endpoints");
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    RootedTree tree;
    tree.vertices = std::move(vertices);
    tree.root = root;
    tree.parent.assign(m, npos);
    tree.dist.assign(m, -1.0);
    tree.dist[root] = 0.0;
    std::vector<std::size_t> stack{root};
    std::size_t seen = 1;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : adj[u]) {
            if (v == tree.parent[u]) {
                continue;
            }
            if (tree.dist[v] >= 0.0) {
                throw std::invalid_argument("tree edges contain a cycle");
            }
            tree.parent[v] = u;
            tree.dist[v] = tree.dist[u] + distance(tree.vertices[u].pos, tree.vertices[v].pos);
            ++seen;
            stack.push_back(v);
        }
    }
    if (seen != m) {
        throw std::invalid_argument("tree edges do not connect all vertices");
    }
    return tree;
}

SpanningTree mst_exact(std::span<const Point2> points) {
    const std::size_t n = points.size();
    SpanningTree out;
    if (n <= 1) {
        return out;
    }
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> from(n, npos);
    std::vector<char> done(n, 0);
    best[0] = 0.0;
    for (std::size_t it = 0; it < n; ++it) {
        std::size_t u = npos;
        for (std::size_t v = 0; v < n; ++v) {
            if (!done[v] && (u == npos || best[v] < best[u])) {
                u = v;
            }
        }
        done[u] = 1;
        if (from[u] != npos) {
            out.edges.emplace_back(from[u], u);
            out.weight += best[u];
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (!done[v]) {
                const double d = distance(points[u], points[v]);
                if (d < best[v]) {
                    best[v] = d;
                    from[v] = u;
                }
            }
        }
    }
    return out;
}

namespace {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;
using RPoint = bg::model::point<double, 2, bg::cs::cartesian>;
using RValue = std::pair<RPoint, std::size_t>;

SpanningTree kruskal_knn(std::span<const Point2> points, const bgi::rtree<RValue, bgi::rstar<16>>& index,
                         std::size_t k) {
    const std::size_t n = points.size();
    std::vector<std::tuple<double, std::size_t, std::size_t>> cand;
    cand.reserve(n * k);
    std::vector<RValue> hits;
    for (std::size_t i = 0; i < n; ++i) {
        hits.clear();
        index.query(bgi::nearest(RPoint(points[i].x, points[i].y), static_cast<unsigned>(k + 1)),
                    std::back_inserter(hits));
        for (const RValue& h : hits) {
            if (h.second != i) {
                cand.emplace_back(distance(points[i], points[h.second]), std::min(i, h.second),
                                  std::max(i, h.second));
            }
        }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<std::size_t> rank(n);
    std::vector<std::size_t> parent(n);
    boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
    for (std::size_t i = 0; i < n; ++i) {
        sets.make_set(i);
    }
    SpanningTree out;
    for (const auto& [w, u, v] : cand) {
        if (sets.find_set(u) != sets.find_set(v)) {
            sets.link(sets.find_set(u), sets.find_set(v));
            out.edges.emplace_back(u, v);
            out.weight += w;
            if (out.edges.size() + 1 == n) {
                break;
            }
        }
    }
    return out;
}

}  // namespace

SpanningTree mst(std::span<const Point2> points) {
    const std::size_t n = points.size();
    if (n <= 3000) {
        return mst_exact(points);
    }
    std::vector<RValue> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        values.emplace_back(RPoint(points[i].x, points[i].y), i);
    }
    const bgi::rtree<RValue, bgi::rstar<16>> index(values.begin(), values.end());
    for (std::size_t k = 16;; k *= 2) {
        SpanningTree t = kruskal_knn(points, index, std::min(k, n - 1));
        if (t.edges.size() + 1 == n) {
            return t;
        }
    }
}

RootedTree shortest_path_tree(const GeoGraph& graph, std::size_t root) {
    const std::size_t m = graph.vertex_count();
    if (root >= m) {
        throw std::invalid_argument("shortest_path_tree: root out of range");
    }
    std::vector<std::size_t> offset(m + 1, 0);
    for (const Edge& e : graph.edges()) {
        ++offset[e.u + 1];
        ++offset[e.v + 1];
    }
    for (std::size_t i = 0; i < m; ++i) {
        offset[i + 1] += offset[i];
    }
    std::vector<std::pair<std::size_t, double>> adj(offset[m]);
    {
        std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
        for (const Edge& e : graph.edges()) {
            adj[fill[e.u]++] = {e.v, e.weight};
            adj[fill[e.v]++] = {e.u, e.weight};
        }
    }
    RootedTree tree;
    tree.vertices = graph.vertices();
    tree.root = root;
    tree.parent.assign(m, npos);
    tree.dist.assign(m, std::numeric_limits<double>::infinity());
    tree.dist[root] = 0.0;
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0.0, root);
    std::vector<char> done(m, 0);
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (done[u]) {
            continue;
        }
        done[u] = 1;
        for (std::size_t i = offset[u]; i < offset[u + 1]; ++i) {
            const auto [v, w] = adj[i];
            if (done[v]) {
                continue;
            }
            const double nd = d + w;
            if (nd < tree.dist[v]) {
                tree.dist[v] = nd;
                tree.parent[v] = u;
                heap.emplace(nd, v);
            } else if (nd == tree.dist[v] && u < tree.parent[v]) {
                tree.parent[v] = u;
            }
        }
    }
    std::ostringstream missing;
    std::size_t count = 0;
    for (std::size_t v = 0; v < m; ++v) {
        if (!done[v]) {
            if (count < 20) {
                missing << (count ? "," : "") << v;
            }
            ++count;
        }
    }
    if (count) {
        throw std::runtime_error("shortest_path_tree: " + std::to_string(count) +
                                 " unreachable vertices: " + missing.str() + (count > 20 ? ",..." : ""));
    }
    return tree;
}

RootedTree prune_steiner_leaves(const RootedTree& tree) {
    const std::size_t m = tree.vertices.size();
    std::vector<std::size_t> children(m, 0);
    for (std::size_t v = 0; v < m; ++v) {
        if (tree.parent[v] != npos) {
            ++children[tree.parent[v]];
        }
    }
    std::vector<char> removed(m, 0);
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < m; ++v) {
        if (tree.vertices[v].kind == VertexKind::steiner && children[v] == 0 && v != tree.root) {
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        const std::size_t v = queue.back();
        queue.pop_back();
        removed[v] = 1;
        const std::size_t p = tree.parent[v];
        if (p != npos && --children[p] == 0 && tree.vertices[p].kind == VertexKind::steiner && p != tree.root) {
            queue.push_back(p);
        }
    }
    std::vector<std::size_t> renumber(m, npos);
    RootedTree out;
    for (std::size_t v = 0; v < m; ++v) {
        if (!removed[v]) {
            renumber[v] = out.vertices.size();
            out.vertices.push_back(tree.vertices[v]);
        }
    }
    out.parent.assign(out.vertices.size(), npos);
    out.dist.assign(out.vertices.size(), 0.0);
    for (std::size_t v = 0; v < m; ++v) {
        if (!removed[v]) {
            const std::size_t nv = renumber[v];
            out.parent[nv] = tree.parent[v] == npos ? npos : renumber[tree.parent[v]];
            out.dist[nv] = tree.dist[v];
        }
    }
    out.root = renumber[tree.root];
    return out;
}

RootedTree splice_steiner_passes(const RootedTree& tree) {
    const std::size_t m = tree.vertices.size();
    std::vector<std::size_t> children(m, 0);
    for (std::size_t v = 0; v < m; ++v) {
        if (tree.parent[v] != npos) {
            ++children[tree.parent[v]];
        }
    }
    auto removed = [&](std::size_t v) {
        return v != tree.root && tree.vertices[v].kind == VertexKind::steiner && children[v] == 1;
    };
    std::vector<std::size_t> renumber(m, npos);
    RootedTree out;
    for (std::size_t v = 0; v < m; ++v) {
        if (!removed(v)) {
            renumber[v] = out.vertices.size();
            out.vertices.push_back(tree.vertices[v]);
        }
    }
    const std::size_t k = out.vertices.size();
    out.parent.assign(k, npos);
    out.dist.assign(k, 0.0);
    std::vector<std::vector<std::size_t>> below(k);
    for (std::size_t v = 0; v < m; ++v) {
        if (removed(v) || tree.parent[v] == npos) {
            continue;
        }
        std::size_t p = tree.parent[v];
        while (removed(p)) {
            p = tree.parent[p];
        }
        out.parent[renumber[v]] = renumber[p];
        below[renumber[p]].push_back(renumber[v]);
    }
    out.root = renumber[tree.root];
    std::vector<std::size_t> order{out.root};
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::size_t u = order[i];
        for (std::size_t c : below[u]) {
            out.dist[c] = out.dist[u] + distance(out.vertices[u].pos, out.vertices[c].pos);
            order.push_back(c);
        }
    }
    return out;
}

void check_covers_instance(const RootedTree& tree, const Instance& instance) {
    const std::size_t n = instance.points.size();
    if (tree.vertices.size() < n) {
        throw std::invalid_argument("tree has fewer vertices than the instance has points");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex& v = tree.vertices[i];
        if (v.pos != instance.points[i] || v.kind == VertexKind::steiner) {
            throw std::invalid_argument("tree vertex " + std::to_string(i) + " does not match instance point");
        }
    }
    for (std::size_t i = n; i < tree.vertices.size(); ++i) {
        if (tree.vertices[i].kind != VertexKind::steiner) {
            throw std::invalid_argument("tree vertex " + std::to_string(i) + " beyond the instance is not Steiner");
        }
    }
    if (tree.root != instance.source) {
        throw std::invalid_argument("tree root is not the instance source");
    }
}

double root_stretch(const RootedTree& tree, const Instance& instance) {
    check_covers_instance(tree, instance);
    const Point2 s = instance.source_point();
    double worst = 1.0;
    for (std::size_t i = 0; i < instance.points.size(); ++i) {
        if (i != instance.source) {
            worst = std::max(worst, tree.dist[i] / distance(instance.points[i], s));
        }
    }
    return worst;
}

double lightness(const RootedTree& tree, const Instance& instance) {
    return tree.weight() / mst(instance.points).weight;
}

}  // namespace slt
