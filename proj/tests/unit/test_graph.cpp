#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "slt/graph.hpp"
#include "slt/oracles.hpp"
#include "support.hpp"

using namespace slt;
using slt::test::uniform;

namespace {

std::vector<Vertex> plain_vertices(const std::vector<Point2>& pts) {
    std::vector<Vertex> v;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        v.push_back({pts[i], i == 0 ? VertexKind::source : VertexKind::input, i});
    }
    return v;
}

GeoGraph complete_graph(const std::vector<Point2>& pts) {
    GeoGraph g;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        g.add_vertex(pts[i], i == 0 ? VertexKind::source : VertexKind::input, i);
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            g.add_edge(i, j);
        }
    }
    return g;
}

}  // namespace

TEST_CASE("graph edges carry Euclidean weights") {
    GeoGraph g;
    g.add_vertex({0, 0}, VertexKind::source);
    g.add_vertex({3, 4}, VertexKind::input);
    g.add_edge(0, 1);
    CHECK(g.edges()[0].weight == 5.0);
    CHECK(g.total_weight() == 5.0);
    CHECK_THROWS(g.add_edge(1, 1));
    CHECK_THROWS(g.add_edge(0, 2));
    CHECK(edge_key(7, 3) == std::pair<std::size_t, std::size_t>{3, 7});
}

TEST_CASE("MST examples") {
    const std::vector<Point2> tri{{0, 0}, {3, 0}, {0, 4}};
    CHECK(mst(tri).weight == doctest::Approx(7.0));
    CHECK(mst(tri).edges.size() == 2);

    std::vector<Point2> line;
    for (int i = 0; i < 50; ++i) {
        line.push_back({0.1 * i, 0});
    }
    CHECK(mst(line).weight == doctest::Approx(49 * 0.1));

    for (std::size_t m : {5u, 16u, 100u}) {
        std::vector<Point2> circle;
        for (std::size_t j = 0; j < m; ++j) {
            const double a = 2 * std::numbers::pi * j / m;
            circle.push_back({std::cos(a), std::sin(a)});
        }
        CHECK(mst(circle).weight == doctest::Approx((m - 1) * 2 * std::sin(std::numbers::pi / m)));
    }
    CHECK(mst(std::vector<Point2>{{1, 1}}).weight == 0.0);
}

TEST_CASE("MST agrees with brute-force enumeration") {
    Rng rng(37);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(uniform01(rng) * 6);
        std::vector<Point2> pts;
        for (std::size_t i = 0; i < n; ++i) {
            pts.push_back({uniform01(rng), uniform01(rng)});
        }
        double best = std::numeric_limits<double>::infinity();
        if (n == 2) {
            best = distance(pts[0], pts[1]);
        } else {
            std::vector<std::size_t> seq(n - 2, 0);
            while (true) {
                double w = 0.0;
                for (auto [u, v] : prufer_decode(seq, n)) {
                    w += distance(pts[u], pts[v]);
                }
                best = std::min(best, w);
                std::size_t i = 0;
                while (i < seq.size() && ++seq[i] == n) {
                    seq[i++] = 0;
                }
                if (i == seq.size()) {
                    break;
                }
            }
        }
        CHECK(mst(pts).weight == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("large MST matches exact Prim") {
    Rng rng(41);
    std::vector<Point2> pts;
    for (int i = 0; i < 4000; ++i) {
        pts.push_back({uniform01(rng), uniform01(rng)});
    }
    const SpanningTree fast = mst(pts);
    CHECK(fast.edges.size() == pts.size() - 1);
    CHECK(fast.weight == doctest::Approx(mst_exact(pts).weight).epsilon(1e-12));
}

TEST_CASE("shortest-path tree examples") {
    GeoGraph path;
    path.add_vertex({0, 0}, VertexKind::source);
    path.add_vertex({1, 0}, VertexKind::input);
    path.add_vertex({2, 0}, VertexKind::input);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    const RootedTree t = shortest_path_tree(path, 0);
    CHECK(t.parent == std::vector<std::size_t>{npos, 0, 1});
    CHECK(t.dist == std::vector<double>{0, 1, 2});

    GeoGraph tri;
    tri.add_vertex({0, 0}, VertexKind::source);
    tri.add_vertex({1, 0}, VertexKind::input);
    tri.add_vertex({1, 0.1}, VertexKind::input);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    const RootedTree u = shortest_path_tree(tri, 0);
    CHECK(u.parent[2] == 0);

    // equal distances resolve to the lower parent id
    GeoGraph square;
    square.add_vertex({0, 0}, VertexKind::source);
    square.add_vertex({1, 0}, VertexKind::input);
    square.add_vertex({0, 1}, VertexKind::input);
    square.add_vertex({1, 1}, VertexKind::input);
    square.add_edge(0, 1);
    square.add_edge(0, 2);
    square.add_edge(2, 3);
    square.add_edge(1, 3);
    CHECK(shortest_path_tree(square, 0).parent[3] == 1);

    GeoGraph split;
    split.add_vertex({0, 0}, VertexKind::source);
    split.add_vertex({1, 0}, VertexKind::input);
    split.add_vertex({5, 0}, VertexKind::input);
    split.add_edge(0, 1);
    CHECK_THROWS_WITH(shortest_path_tree(split, 0), doctest::Contains("2"));
}

TEST_CASE("Dijkstra distances equal the all-pairs oracle") {
    Rng rng(43);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(uniform01(rng) * 11);
        GeoGraph g;
        for (std::size_t i = 0; i < n; ++i) {
            g.add_vertex({uniform01(rng), uniform01(rng)}, VertexKind::input);
        }
        for (std::size_t i = 1; i < n; ++i) {
            g.add_edge(static_cast<std::size_t>(uniform01(rng) * i), i);
        }
        for (std::size_t e = 0; e < n; ++e) {
            const auto u = static_cast<std::size_t>(uniform01(rng) * n);
            const auto v = static_cast<std::size_t>(uniform01(rng) * n);
            if (u != v) {
                g.add_edge(u, v);
            }
        }
        const auto d = test::floyd_warshall(g);
        const RootedTree tree = shortest_path_tree(g, 0);
        for (std::size_t v = 0; v < n; ++v) {
            CHECK(tree.dist[v] == doctest::Approx(d[0][v]).epsilon(1e-12));
        }
    }
}

TEST_CASE("rooted tree validation") {
    const std::vector<Point2> pts{{0, 0}, {1, 0}, {2, 0}};
    const std::vector<std::pair<std::size_t, std::size_t>> ok{{0, 2}, {2, 1}};
    const RootedTree t = make_rooted_tree(plain_vertices(pts), ok, 0);
    CHECK(t.dist[1] == 3.0);
    CHECK(t.weight() == 3.0);
    const auto edges = t.edges();
    CHECK(edges == std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {0, 2}});

    const std::vector<std::pair<std::size_t, std::size_t>> short_list{{0, 1}};
    CHECK_THROWS(make_rooted_tree(plain_vertices(pts), short_list, 0));
    const std::vector<std::pair<std::size_t, std::size_t>> cycle{{0, 1}, {1, 0}};
    CHECK_THROWS(make_rooted_tree(plain_vertices(pts), cycle, 0));
}

TEST_CASE("root stretch and lightness") {
    Instance inst{{{0, 0}, {1, 0}, {2, 0}}, 0, 0.5};
    const std::vector<std::pair<std::size_t, std::size_t>> detour{{0, 2}, {2, 1}};
    const RootedTree t = make_rooted_tree(plain_vertices(inst.points), detour, 0);
    CHECK(root_stretch(t, inst) == 3.0);

    Rng rng(47);
    for (int rep = 0; rep < 20; ++rep) {
        Instance r = test::random_instance(rng, 30, 0.1);
        const RootedTree spt = shortest_path_tree(complete_graph(r.points), 0);
        CHECK(root_stretch(spt, r) == 1.0);
        const RootedTree m = make_rooted_tree(plain_vertices(r.points), mst(r.points).edges, 0);
        CHECK(lightness(m, r) == doctest::Approx(1.0));
    }

    // star over a circle: ratio of the two weights computed directly
    Instance circle;
    circle.epsilon = 0.1;
    circle.points.push_back({0, 0});
    const std::size_t m = 32;
    for (std::size_t j = 0; j < m; ++j) {
        const double a = 2 * std::numbers::pi * j / m;
        circle.points.push_back({std::cos(a), std::sin(a)});
    }
    std::vector<std::pair<std::size_t, std::size_t>> star;
    for (std::size_t j = 1; j <= m; ++j) {
        star.emplace_back(0, j);
    }
    const RootedTree st = make_rooted_tree(plain_vertices(circle.points), star, 0);
    CHECK(lightness(st, circle) == doctest::Approx(m / mst(circle.points).weight));
}

TEST_CASE("Steiner leaf pruning") {
    GeoGraph g;
    g.add_vertex({0, 0}, VertexKind::source);
    g.add_vertex({2, 0}, VertexKind::input);
    g.add_vertex({1, 0}, VertexKind::steiner);
    g.add_vertex({1, 1}, VertexKind::steiner);
    g.add_vertex({1, 2}, VertexKind::steiner);
    g.add_edge(0, 2);
    g.add_edge(2, 1);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    const RootedTree pruned = prune_steiner_leaves(shortest_path_tree(g, 0));
    REQUIRE(pruned.vertices.size() == 3);
    CHECK(pruned.vertices[2].pos == Point2{1, 0});
    CHECK(pruned.parent[1] == 2);
    CHECK(pruned.weight() == 2.0);

    Instance inst{{{0, 0}, {2, 0}}, 0, 0.5};
    CHECK_NOTHROW(check_covers_instance(pruned, inst));
    Instance moved{{{0, 0}, {2, 1}}, 0, 0.5};
    CHECK_THROWS(check_covers_instance(pruned, moved));
}

TEST_CASE("splicing Steiner vertices with one child") {
    GeoGraph g;
    g.add_vertex({0, 0}, VertexKind::source);
    g.add_vertex({2, 1}, VertexKind::input);
    g.add_vertex({3, -1}, VertexKind::input);
    g.add_vertex({1, 0.5}, VertexKind::steiner);  // one child: spliced
    g.add_vertex({2, 0}, VertexKind::steiner);    // two children: kept
    g.add_vertex({2.5, -0.5}, VertexKind::steiner);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 1);
    g.add_edge(4, 5);
    g.add_edge(5, 2);
    const RootedTree t = shortest_path_tree(g, 0);
    const RootedTree s = splice_steiner_passes(t);
    REQUIRE(s.vertices.size() == 4);
    CHECK(s.vertices[3].pos == Point2{2, 0});
    CHECK(s.parent[3] == 0);
    CHECK(s.parent[1] == 3);
    CHECK(s.parent[2] == 3);
    CHECK(s.dist[2] == doctest::Approx(2 + std::sqrt(2.0)));
    CHECK(s.weight() <= t.weight());

    Instance inst{{{0, 0}, {2, 1}, {3, -1}}, 0, 0.5};
    CHECK(root_stretch(s, inst) <= root_stretch(t, inst));

    // a chain of Steiner points collapses into one edge
    GeoGraph chain;
    chain.add_vertex({0, 0}, VertexKind::source);
    chain.add_vertex({3, 0}, VertexKind::input);
    chain.add_vertex({1, 0.1}, VertexKind::steiner);
    chain.add_vertex({2, -0.1}, VertexKind::steiner);
    chain.add_edge(0, 2);
    chain.add_edge(2, 3);
    chain.add_edge(3, 1);
    const RootedTree c = splice_steiner_passes(shortest_path_tree(chain, 0));
    REQUIRE(c.vertices.size() == 2);
    CHECK(c.parent[1] == 0);
    CHECK(c.weight() == 3.0);
}
