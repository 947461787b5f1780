#include "slt/instance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace slt {

void validate(const Instance& instance) {
    if (!(instance.epsilon > 0.0 && instance.epsilon < 1.0)) {
        throw std::invalid_argument("instance epsilon must lie in (0,1)");
    }
    if (instance.source >= instance.points.size()) {
        throw std::invalid_argument("instance source index out of range");
    }
    std::vector<std::size_t> order(instance.points.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Point2 p = instance.points[i];
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw std::invalid_argument("instance point " + std::to_string(i) + " is not finite");
        }
        order[i] = i;
    }
    const auto& pts = instance.points;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (pts[order[i]] == pts[order[i - 1]]) {
            throw std::invalid_argument("instance points " + std::to_string(order[i - 1]) + " and " +
                                        std::to_string(order[i]) + " coincide");
        }
    }
}

}  // namespace slt
