#pragma once

#include <cstddef>
#include <vector>

#include "slt/graph.hpp"
#include "slt/instance.hpp"
#include "slt/tiling.hpp"

namespace slt {

enum class Mode { steiner, restricted };

const char* mode_name(Mode mode);

struct TileStats {
    TileId tile;
    std::size_t points = 0;
    std::size_t net = 0;
    std::size_t steiner = 0;
    double path_weight = 0.0;     ///< tile-algorithm edges
    double spanner_weight = 0.0;  ///< cluster spanner edges not already present
};

struct BuildReport {
    Mode mode = Mode::steiner;
    std::vector<TileStats> tiles;  ///< ascending tile id
    double union_weight = 0.0;     ///< weight of the union graph before the shortest-path tree
    double total_weight = 0.0;     ///< weight of the output tree
    double max_stretch = 0.0;
    double wall_ms = 0.0;
};

struct BuildResult {
    RootedTree tree;
    BuildReport report;
};

/// Union of per-tile paths and cluster spanners. Vertices 0..n-1 are the instance
/// points; Steiner vertices follow in tile order. Output is independent of `threads`.
GeoGraph build_union_graph(const Instance& instance, Mode mode, unsigned threads = 1, BuildReport* report = nullptr);

/// Requires 0 < eps <= 1/16 and at least two points.
BuildResult build_slt(const Instance& instance, Mode mode, unsigned threads = 1);

}  // namespace slt
