#include "slt/hitting.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace slt {

namespace {

std::vector<std::size_t> order_by_right_endpoint(std::span<const Interval> intervals) {
    for (const Interval& iv : intervals) {
        if (iv.is_empty()) {
            throw std::invalid_argument("hitting: empty interval in input");
        }
    }
    std::vector<std::size_t> order(intervals.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (intervals[a].hi() != intervals[b].hi()) {
            return intervals[a].hi() < intervals[b].hi();
        }
        return intervals[a].lo() < intervals[b].lo();
    });
    return order;
}

bool all_hit(std::span<const Interval> intervals, const std::vector<double>& points) {
    return std::all_of(intervals.begin(), intervals.end(), [&](const Interval& iv) {
        return std::any_of(points.begin(), points.end(), [&](double v) { return iv.contains(v); });
    });
}

std::size_t smallest_hitting_subset(std::span<const Interval> intervals, std::span<const double> pool) {
    if (intervals.empty()) {
        return 0;
    }
    const std::size_t m = pool.size();
    std::size_t best = m + 1;
    std::vector<double> chosen;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size >= best) {
            continue;
        }
        chosen.clear();
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (1u << i)) {
                chosen.push_back(pool[i]);
            }
        }
        if (all_hit(intervals, chosen)) {
            best = size;
        }
    }
    if (best > m) {
        throw std::invalid_argument("brute force hitting: no feasible subset");
    }
    return best;
}

}  // namespace

std::vector<double> pierce_intervals(std::span<const Interval> intervals) {
    std::vector<double> points;
    bool have = false;
    double last = 0.0;
    for (std::size_t idx : order_by_right_endpoint(intervals)) {
        const Interval& iv = intervals[idx];
        if (have && last >= iv.lo()) {
            continue;
        }
        last = iv.hi();
        have = true;
        points.push_back(last);
    }
    return points;
}

std::vector<std::size_t> hit_intervals_discrete(std::span<const Interval> intervals,
                                                std::span<const double> candidates) {
    if (!std::is_sorted(candidates.begin(), candidates.end())) {
        throw std::invalid_argument("hit_intervals_discrete: candidates must be sorted");
    }
    std::vector<std::size_t> chosen;
    bool have = false;
    double last = 0.0;
    for (std::size_t idx : order_by_right_endpoint(intervals)) {
        const Interval& iv = intervals[idx];
        if (have && last >= iv.lo()) {
            continue;
        }
        auto it = std::upper_bound(candidates.begin(), candidates.end(), iv.hi());
        if (it == candidates.begin() || *std::prev(it) < iv.lo()) {
            throw std::invalid_argument("hit_intervals_discrete: interval " + std::to_string(idx) +
                                        " contains no candidate");
        }
        // lowest position among equal values
        it = std::lower_bound(candidates.begin(), it, *std::prev(it));
        const auto pos = static_cast<std::size_t>(it - candidates.begin());
        last = candidates[pos];
        have = true;
        chosen.push_back(pos);
    }
    return chosen;
}

std::size_t brute_force_min_piercing(std::span<const Interval> intervals) {
    if (intervals.size() > 15) {
        throw std::invalid_argument("brute_force_min_piercing: more than 15 intervals");
    }
    std::vector<double> pool;
    for (const Interval& iv : intervals) {
        if (iv.is_empty()) {
            throw std::invalid_argument("hitting: empty interval in input");
        }
        pool.push_back(iv.hi());
    }
    return smallest_hitting_subset(intervals, pool);
}

std::size_t brute_force_min_hitting(std::span<const Interval> intervals, std::span<const double> candidates) {
    if (intervals.size() > 15 || candidates.size() > 15) {
        throw std::invalid_argument("brute_force_min_hitting: more than 15 intervals or candidates");
    }
    return smallest_hitting_subset(intervals, candidates);
}

}  // namespace slt
