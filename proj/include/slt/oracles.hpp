#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "slt/graph.hpp"
#include "slt/hitting.hpp"
#include "slt/instance.hpp"

namespace slt {

/// Decodes a Pruefer sequence over vertices 0..n-1 (length n-2) into n-1 edges.
std::vector<std::pair<std::size_t, std::size_t>> prufer_decode(const std::vector<std::size_t>& sequence, std::size_t n);

struct OptimalTree {
    RootedTree tree;
    double weight = 0.0;
    std::size_t trees_checked = 0;
};

/// Minimum-weight spanning tree over the instance points with root-stretch <= 1+eps,
/// by enumeration of all labelled trees. At most 8 points.
OptimalTree brute_force_opt_st(const Instance& instance, double eps);

struct Certificate {
    std::vector<StripRect> boxes;
    double value = 0.0;
};

/// Disjoint boxes B_p = bbox(E_p inside [x(p), x(p)+w]), chosen greedily by ascending (x, y).
/// Every tree whose root-stretch is at most 1+eps, Steiner or not, weighs at least `value`.
/// Points with x(p) + w > x(s) or |slope(p,s)| > sqrt(eps) are skipped.
Certificate steiner_lower_bound_certificate(const Instance& instance, double eps, double strip_width);

}  // namespace slt
