#include <doctest.h>

#include <map>
#include <vector>

#include "slt/cnet.hpp"
#include "slt/graph.hpp"
#include "support.hpp"

using namespace slt;
using slt::test::uniform;

namespace {

// frozen from measurement; see README
constexpr double kSpannerLightness = 2.5;        // kappa
constexpr double kTotalSpannerLightness = 2.0;   // kappa'

double edges_weight(const std::vector<Point2>& pts, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    double w = 0.0;
    for (auto [u, v] : edges) {
        w += distance(pts[u], pts[v]);
    }
    return w;
}

}  // namespace

TEST_CASE("greedy net on a collinear example") {
    const std::vector<Point2> pts{{1, 0}, {1.05, 0}, {2, 0}};
    const CenteredNet n = build_cnet(pts, {0, 0}, 0.1);
    CHECK(n.net == std::vector<std::size_t>{0, 2});
    CHECK(n.assignment == std::vector<std::size_t>{0, 0, 2});
    const CnetViolations v = check_cnet(pts, {0, 0}, 0.1, n.net);
    CHECK(v.separation == 0);
    CHECK(v.covering == 0);
}

TEST_CASE("trivial nets") {
    const std::vector<Point2> one{{3, 4}};
    const CenteredNet n = build_cnet(one, {0, 0}, 0.05);
    CHECK(n.net == std::vector<std::size_t>{0});
    CHECK(n.assignment == std::vector<std::size_t>{0});

    const std::vector<Point2> spread{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {3, 3}};
    const CenteredNet m = build_cnet(spread, {0, 0}, 0.1);
    CHECK(m.net.size() == spread.size());
    for (std::size_t i = 0; i < spread.size(); ++i) {
        CHECK(m.assignment[i] == i);
    }

    CHECK_THROWS(build_cnet(one, {0, 0}, 0.2));
    CHECK_THROWS(build_cnet(one, {3, 4}, 0.05));
}

TEST_CASE("net invariants and cluster radius on random inputs") {
    Rng rng(23);
    for (double eps : {0.1, 1.0 / 16, 1.0 / 64, 1.0 / 256}) {
        for (int rep = 0; rep < 3; ++rep) {
            std::vector<Point2> pts;
            const Point2 s{uniform(rng, -1, 2), uniform(rng, -1, 2)};
            for (int i = 0; i < 1500; ++i) {
                const Point2 p{uniform01(rng), uniform01(rng)};
                if (p != s) {
                    pts.push_back(p);
                }
            }
            const CenteredNet n = build_cnet(pts, s, eps);
            const CnetViolations v = check_cnet(pts, s, eps, n.net);
            CHECK(v.separation == 0);
            CHECK(v.covering == 0);
            for (std::size_t p = 0; p < pts.size(); ++p) {
                const Point2 a = pts[n.assignment[p]];
                CHECK(n.assignment[n.assignment[p]] == n.assignment[p]);
                CHECK(distance(pts[p], a) <= eps * (1 + 2 * eps) * distance(a, s));
            }
        }
    }
}

TEST_CASE("checker detects broken nets") {
    const std::vector<Point2> pts{{1, 0}, {1.05, 0}, {2, 0}};
    const std::vector<std::size_t> crowded{0, 1, 2};
    CHECK(check_cnet(pts, {0, 0}, 0.1, crowded).separation == 1);
    const std::vector<std::size_t> sparse{0};
    CHECK(check_cnet(pts, {0, 0}, 0.1, sparse).covering == 1);
}

TEST_CASE("cluster spanner examples") {
    CHECK(cluster_spanner(std::vector<Point2>{{0, 0}}).empty());
    const auto two = cluster_spanner(std::vector<Point2>{{0, 0}, {1, 1}});
    REQUIRE(two.size() == 1);
    CHECK(two[0] == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("cluster spanners have stretch two and light weight") {
    Rng rng(29);
    for (std::size_t m : {3u, 10u, 40u, 200u}) {
        for (int rep = 0; rep < 3; ++rep) {
            std::vector<Point2> pts;
            for (std::size_t i = 0; i < m; ++i) {
                pts.push_back({uniform01(rng), uniform01(rng)});
            }
            const auto edges = cluster_spanner(pts);
            const auto d = test::floyd_warshall(test::graph_of(pts, edges));
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = i + 1; j < m; ++j) {
                    CHECK(d[i][j] <= 2.0 * distance(pts[i], pts[j]) * (1 + 1e-12));
                }
            }
            CHECK(edges_weight(pts, edges) <= kSpannerLightness * mst(pts).weight);
        }
    }
}

TEST_CASE("spanners over all clusters stay within a constant of the MST") {
    Rng rng(31);
    for (double eps : {1.0 / 16, 1.0 / 64, 1.0 / 256, 0.01}) {
        const auto pts = test::tile_like_points(rng, eps, 1500);
        const Point2 s{2, 0};
        const CenteredNet n = build_cnet(pts, s, eps);
        std::map<std::size_t, std::vector<Point2>> clusters;
        for (std::size_t p = 0; p < pts.size(); ++p) {
            clusters[n.assignment[p]].push_back(pts[p]);
        }
        double total = 0.0;
        for (const auto& [a, c] : clusters) {
            total += edges_weight(c, cluster_spanner(c));
        }
        auto all = pts;
        all.push_back(s);
        CHECK(total <= kTotalSpannerLightness * mst(all).weight);
    }
}
