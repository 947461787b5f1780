#pragma once

#include <cstddef>
#include <vector>

#include "slt/geom.hpp"

namespace slt {

/// A point set with a distinguished source point. The source is one of the points.
struct Instance {
    std::vector<Point2> points;
    std::size_t source = 0;
    double epsilon = 0.0;

    Point2 source_point() const { return points.at(source); }
};

/// Throws std::invalid_argument unless 0 < epsilon < 1, the source index is valid,
/// and the points are finite and pairwise distinct.
void validate(const Instance& instance);

}  // namespace slt
