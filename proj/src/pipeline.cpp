#include "slt/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "slt/cnet.hpp"
#include "slt/slt_restricted.hpp"
#include "slt/slt_steiner.hpp"

namespace slt {

const char* mode_name(Mode mode) { return mode == Mode::steiner ? "steiner" : "restricted"; }

namespace {

/// Endpoint reference: >= 0 is an instance index, < 0 is -(local Steiner index + 1).
using Ref = std::int64_t;

struct TileOutput {
    std::vector<Point2> steiner;
    std::vector<std::pair<Ref, Ref>> path_edges;
    std::vector<std::pair<Ref, Ref>> spanner_edges;
    std::size_t net = 0;
};

TileOutput run_tile(const Instance& instance, TileId tile, const TilingParams& params,
                    const std::vector<std::size_t>& members, Mode mode) {
    const double eps = instance.epsilon;
    const auto source = static_cast<Ref>(instance.source);
    std::vector<Point2> world;
    world.reserve(members.size());
    for (std::size_t g : members) {
        world.push_back(instance.points[g]);
    }
    const CenteredNet cnet = build_cnet(world, params.source, eps);
    const CanonicalFrame frame = canonical_frame(tile, params);
    std::vector<Point2> canon;
    canon.reserve(world.size());
    for (Point2 q : world) {
        canon.push_back(frame.to_canonical(q));
    }

    TileOutput out;
    out.net = cnet.net.size();
    GeoGraph g;
    // maps a tile-graph input label to a position in `members`
    std::vector<std::size_t> label_to_member;
    if (mode == Mode::steiner) {
        std::vector<Point2> net_pts;
        for (std::size_t i : cnet.net) {
            net_pts.push_back(canon[i]);
        }
        g = steiner_tile_tree(net_pts, eps);
        label_to_member = cnet.net;
    } else {
        g = restricted_tile_tree(cnet.net, canon, eps);
        label_to_member.resize(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            label_to_member[i] = i;
        }
    }
    std::vector<Ref> ref(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const Vertex& vx = g.vertices()[v];
        switch (vx.kind) {
            case VertexKind::source:
                ref[v] = source;
                break;
            case VertexKind::input:
                ref[v] = static_cast<Ref>(members[label_to_member[vx.label]]);
                break;
            case VertexKind::steiner:
                ref[v] = -static_cast<Ref>(out.steiner.size()) - 1;
                out.steiner.push_back(frame.from_canonical(vx.pos));
                break;
        }
    }
    for (const Edge& e : g.edges()) {
        out.path_edges.emplace_back(ref[e.u], ref[e.v]);
    }

    std::vector<std::vector<std::size_t>> clusters(members.size());
    for (std::size_t i : cnet.net) {
        clusters[i].push_back(i);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (cnet.assignment[i] != i) {
            clusters[cnet.assignment[i]].push_back(i);
        }
    }
    std::vector<Point2> cpts;
    for (std::size_t a : cnet.net) {
        const std::vector<std::size_t>& cl = clusters[a];
        if (cl.size() < 2) {
            continue;
        }
        cpts.clear();
        for (std::size_t i : cl) {
            cpts.push_back(world[i]);
        }
        for (auto [u, v] : cluster_spanner(cpts)) {
            out.spanner_edges.emplace_back(static_cast<Ref>(members[cl[u]]), static_cast<Ref>(members[cl[v]]));
        }
    }
    return out;
}

}  // namespace

GeoGraph build_union_graph(const Instance& instance, Mode mode, unsigned threads, BuildReport* report) {
    validate(instance);
    const double eps = instance.epsilon;
    if (!(eps > 0.0 && eps <= 1.0 / 16.0)) {
        throw std::invalid_argument("build_slt requires 0 < eps <= 1/16");
    }
    if (instance.points.size() < 2) {
        throw std::invalid_argument("build_slt requires at least two points");
    }
    const TilingParams params = TilingParams::for_epsilon(eps, instance.source_point());
    std::map<TileId, std::vector<std::size_t>> by_tile;
    for (std::size_t i = 0; i < instance.points.size(); ++i) {
        if (i != instance.source) {
            by_tile[tile_of(instance.points[i], params)].push_back(i);
        }
    }
    std::vector<std::pair<TileId, std::vector<std::size_t>>> tiles(by_tile.begin(), by_tile.end());
    std::vector<TileOutput> outputs(tiles.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tiles.size(); t = next++) {
            outputs[t] = run_tile(instance, tiles[t].first, params, tiles[t].second, mode);
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tiles.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                try {
                    worker();
                } catch (...) {
                    const std::lock_guard lock(failure_mutex);
                    failure = std::current_exception();
                    next = tiles.size();
                }
            });
        }
        for (std::thread& th : pool) {
            th.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    GeoGraph graph;
    for (std::size_t i = 0; i < instance.points.size(); ++i) {
        graph.add_vertex(instance.points[i], i == instance.source ? VertexKind::source : VertexKind::input, i);
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    if (report) {
        report->mode = mode;
        report->tiles.clear();
        report->union_weight = 0.0;
    }
    for (std::size_t t = 0; t < tiles.size(); ++t) {
        const TileOutput& out = outputs[t];
        const std::size_t base = graph.vertex_count();
        for (Point2 q : out.steiner) {
            graph.add_vertex(q, VertexKind::steiner);
        }
        auto resolve = [&](Ref r) { return r >= 0 ? static_cast<std::size_t>(r) : base + static_cast<std::size_t>(-r - 1); };
        auto add = [&](const std::vector<std::pair<Ref, Ref>>& edges) {
            double w = 0.0;
            for (auto [a, b] : edges) {
                const auto e = edge_key(resolve(a), resolve(b));
                if (seen.insert(e).second) {
                    graph.add_edge(e.first, e.second);
                    w += graph.edges().back().weight;
                }
            }
            return w;
        };
        TileStats stats;
        stats.tile = tiles[t].first;
        stats.points = tiles[t].second.size();
        stats.net = out.net;
        stats.steiner = out.steiner.size();
        stats.path_weight = add(out.path_edges);
        stats.spanner_weight = add(out.spanner_edges);
        if (report) {
            report->union_weight += stats.path_weight + stats.spanner_weight;
            report->tiles.push_back(stats);
        }
    }
    return graph;
}

BuildResult build_slt(const Instance& instance, Mode mode, unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    BuildResult result;
    const GeoGraph graph = build_union_graph(instance, mode, threads, &result.report);
    result.tree = splice_steiner_passes(prune_steiner_leaves(shortest_path_tree(graph, instance.source)));
    result.report.total_weight = result.tree.weight();
    result.report.max_stretch = root_stretch(result.tree, instance);
    result.report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace slt
