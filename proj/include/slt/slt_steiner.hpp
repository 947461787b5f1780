#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "slt/geom.hpp"
#include "slt/graph.hpp"

namespace slt {

/// Vertical line x = multiple * 4^level * eps.
struct LineKey {
    int level;
    std::int64_t multiple;

    double x(double eps) const;
    friend auto operator<=>(const LineKey&, const LineKey&) = default;
};

struct Ladder {
    std::size_t owner = 0;
    std::vector<LineKey> lines;
    std::vector<double> xs;
};

/// k = max{1, floor(log4(1/(16 eps))) + 1}.
int ladder_depth(double eps);

/// Lines L_0..L_{count-1}: L_0 is the second multiple of eps strictly right of x(p),
/// and L_i is the second multiple of 4^i eps strictly right of L_{i-1}.
Ladder ladder_lines(Point2 p, double eps, int count, std::size_t owner = 0);

/// ladder_lines with count = ladder_depth(eps); also asserts dist(p, L_{k-1}) < 2/3.
Ladder ladder_lines(Point2 p, double eps, std::size_t owner = 0);

/// Canonical source position.
inline constexpr Point2 kCanonicalSource{2.0, 0.0};

/// Throws unless every point lies in [-0.05, 1.05] x [-1.1 sqrt(eps), 1.1 sqrt(eps)].
void check_canonical_box(std::span<const Point2> points, double eps);

/// Tile graph layout shared by both tile algorithms: vertex 0 is the source (2,0),
/// vertices 1..n are the given points with label = position, Steiner vertices follow.
struct SteinerTileResult {
    GeoGraph graph;
    std::vector<Ladder> ladders;
    std::map<LineKey, std::vector<double>> piercing;  ///< H(L), ascending y
    std::vector<std::vector<std::size_t>> paths;      ///< per net point, vertex ids ending at 0
};

SteinerTileResult steiner_tile_tree_detailed(std::span<const Point2> net, double eps);

GeoGraph steiner_tile_tree(std::span<const Point2> net, double eps);

}  // namespace slt
