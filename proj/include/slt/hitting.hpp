#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "slt/geom.hpp"

namespace slt {

/// Axis-aligned rectangle attached to the point that produced it.
struct StripRect {
    double x_lo;
    double x_hi;
    double y_lo;
    double y_hi;
    std::size_t owner;
};

/// Minimum set of reals meeting every interval (greedy on right endpoints).
/// Returned points are ascending.
std::vector<double> pierce_intervals(std::span<const Interval> intervals);

/// Minimum subset of `candidates` (sorted ascending) meeting every interval.
/// Returns candidate positions, ascending. Throws if some interval contains no candidate.
std::vector<std::size_t> hit_intervals_discrete(std::span<const Interval> intervals,
                                                std::span<const double> candidates);

/// Exhaustive minimum piercing size; at most 15 intervals.
std::size_t brute_force_min_piercing(std::span<const Interval> intervals);

/// Exhaustive minimum discrete hitting size; at most 15 intervals and 15 candidates.
std::size_t brute_force_min_hitting(std::span<const Interval> intervals, std::span<const double> candidates);

}  // namespace slt
