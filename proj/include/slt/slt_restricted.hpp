#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "slt/geom.hpp"
#include "slt/graph.hpp"
#include "slt/hitting.hpp"
#include "slt/slt_steiner.hpp"

namespace slt {

/// Path from a point to the source. vertices[0] is the start point, the last entry is
/// kPathSource. levels[t] is the strip level of vertices[t]; the start has level -1
/// and the source has level k+1.
struct LeveledPath {
    static constexpr std::size_t kPathSource = npos;

    std::vector<std::size_t> vertices;
    std::vector<int> levels;
};

/// B_i(p) = bounding box of E_p inside the strip [L_i(p), L_{i+1}(p)], for i in [0,k).
/// A strip outside the ellipse yields nullopt.
std::vector<std::optional<StripRect>> level_rectangles(Point2 p, double eps, std::size_t owner = 0);

/// Strip-level minimum hitting sets, keyed by the strip's left line. Members are
/// point indices in ascending order.
using StripSolutions = std::map<LineKey, std::vector<std::size_t>>;

/// For each level, the lowest-index hitting-set member inside B_i(p); levels whose
/// rectangle holds no member are skipped.
LeveledPath candidate_path(std::size_t p, std::span<const std::optional<StripRect>> rects,
                           std::span<const LineKey> strip_keys, const StripSolutions& solutions,
                           std::span<const Point2> points);

/// Repeatedly removes v' from the first pair of consecutive interior vertices (v, v')
/// with level(v') = level(v) + 1, scanning from the start.
LeveledPath prune_path(const LeveledPath& path);

struct RestrictedTileResult {
    GeoGraph graph;  ///< union of pruned paths; vertex 0 is the source, vertex i+1 is point i
    StripSolutions solutions;
    std::vector<std::vector<std::optional<StripRect>>> rectangles;  ///< per net point
    std::vector<LeveledPath> candidates;
    std::vector<LeveledPath> pruned;
    std::vector<std::pair<std::size_t, std::size_t>> candidate_edges;  ///< union of candidate paths
};

/// `net` holds indices into `points`; every vertex of the output is an input point or the source.
RestrictedTileResult restricted_tile_tree_detailed(std::span<const std::size_t> net,
                                                   std::span<const Point2> points, double eps);

GeoGraph restricted_tile_tree(std::span<const std::size_t> net, std::span<const Point2> points, double eps);

}  // namespace slt
