#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "slt/geom.hpp"

namespace slt {

struct CenteredNet {
    std::vector<std::size_t> net;         ///< point indices, in insertion order
    std::vector<std::size_t> assignment;  ///< point index -> point index of its covering net point
};

/// Greedy centered eps-net, scanning points by ascending distance to the source.
/// A point joins the net iff no net point a has d(p,a) <= eps * d(a,s).
CenteredNet build_cnet(std::span<const Point2> points, Point2 source, double eps);

struct CnetViolations {
    std::size_t separation = 0;  ///< net pairs with d(a,b) <= eps * min(d(a,s), d(b,s))
    std::size_t covering = 0;    ///< points with no net point within eps * d(p,s)
};

/// Exhaustive O(n * |net|) check.
CnetViolations check_cnet(std::span<const Point2> points, Point2 source, double eps,
                          std::span<const std::size_t> net);

/// Path-greedy 2-spanner. Edges are index pairs into `cluster`, in insertion order.
std::vector<std::pair<std::size_t, std::size_t>> cluster_spanner(std::span<const Point2> cluster);

}  // namespace slt
