#include "slt/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slt/cnet.hpp"

namespace slt {

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

const char* kind_name(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::circle:
            return "circle";
        case InstanceKind::comb:
            return "comb";
        case InstanceKind::cnet_comb:
            return "cnet-comb";
        case InstanceKind::sector_lb:
            return "sector-lb";
        case InstanceKind::uniform:
            return "uniform";
    }
    return "?";
}

InstanceKind parse_kind(const std::string& name) {
    for (InstanceKind k : {InstanceKind::circle, InstanceKind::comb, InstanceKind::cnet_comb, InstanceKind::sector_lb,
                           InstanceKind::uniform}) {
        if (name == kind_name(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown instance kind: " + name);
}

namespace {

constexpr Point2 kSource{2.0, 0.0};

std::size_t steps_within(double length, double step) {
    return static_cast<std::size_t>(std::floor(length / step + 1e-9));
}

/// Samples of the bottom edge [0,1] x {0} at `step`, skipping samples that coincide
/// with a foot x = foot_offset + j * foot_spacing.
void add_bottom(std::vector<Point2>& pts, double step, double foot_offset, double foot_spacing) {
    const std::size_t last = steps_within(1.0, step);
    auto near_foot = [&](double x) {
        const double j = std::nearbyint((x - foot_offset) / foot_spacing);
        return std::abs(x - (foot_offset + j * foot_spacing)) <= 1e-12;
    };
    for (std::size_t l = 0; l <= last; ++l) {
        const double x = static_cast<double>(l) * step;
        if (!near_foot(x)) {
            pts.push_back({x, 0.0});
        }
    }
    if (static_cast<double>(last) * step < 1.0 - 1e-12 && !near_foot(1.0)) {
        pts.push_back({1.0, 0.0});
    }
}

void add_vertical(std::vector<Point2>& pts, double x, double height, double step) {
    pts.push_back({x, 0.0});
    const std::size_t count = steps_within(height, step);
    for (std::size_t m = 1; m <= count; ++m) {
        pts.push_back({x, static_cast<double>(m) * step});
    }
}

Instance circle(double eps, const GenParams& params) {
    const auto m = params.n.value_or(static_cast<std::size_t>(std::ceil(1.0 / eps - 1e-9)));
    if (m < 2) {
        throw std::invalid_argument("circle needs at least 2 points");
    }
    Instance inst;
    inst.epsilon = eps;
    for (std::size_t j = 0; j < m; ++j) {
        const double a = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
        inst.points.push_back(j == 0 ? Point2{1.0, 0.0} : Point2{std::cos(a), std::sin(a)});
    }
    return inst;
}

Instance comb(double eps, const GenParams& params) {
    const int k = params.k.value_or(4);
    if (k < 1) {
        throw std::invalid_argument("comb needs k >= 1");
    }
    const double limit = 1.0 / (2.0 * k);
    const double delta = params.delta.value_or(std::min(limit, eps / 4.0));
    if (!(delta > 0.0) || delta > limit * (1.0 + 1e-12)) {
        throw std::invalid_argument("comb requires 0 < delta <= 1/(2k)");
    }
    Instance inst;
    inst.epsilon = eps;
    inst.points.push_back(kSource);
    add_bottom(inst.points, delta, 0.5 / k, 1.0 / k);
    for (int j = 0; j < k; ++j) {
        add_vertical(inst.points, (j + 0.5) / k, 1.0, delta);
    }
    return inst;
}

Instance cnet_comb(double eps) {
    const double h = std::sqrt(eps);
    const double step = 2.5 * eps;
    const double spacing = 2.0 * h;
    Instance inst;
    inst.epsilon = eps;
    inst.points.push_back(kSource);
    const std::size_t lines = steps_within(1.0, spacing);
    for (std::size_t j = 0; j <= lines; ++j) {
        const double x0 = static_cast<double>(j) * spacing;
        add_vertical(inst.points, x0, h, step);
        const double gap = j < lines ? spacing : std::max(0.0, 1.0 - x0);
        const std::size_t parts = static_cast<std::size_t>(std::floor(gap / step));
        const std::size_t fill = j < lines ? parts - 1 : parts;
        for (std::size_t t = 1; t <= fill && parts > 0; ++t) {
            inst.points.push_back({x0 + gap * static_cast<double>(t) / static_cast<double>(parts), 0.0});
        }
    }
    std::vector<Point2> others(inst.points.begin() + 1, inst.points.end());
    std::vector<std::size_t> all(others.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    const CnetViolations v = check_cnet(others, kSource, eps, all);
    if (v.separation != 0 || v.covering != 0) {
        throw std::logic_error("cnet-comb output is not a centered eps-net");
    }
    return inst;
}

Instance sector_lb(double eps, const GenParams& params) {
    const double h = std::sqrt(eps);
    const double delta = params.delta.value_or(eps);
    if (!(delta > 0.0) || delta > h) {
        throw std::invalid_argument("sector-lb requires 0 < delta <= sqrt(eps)");
    }
    Instance inst;
    inst.epsilon = eps;
    inst.points.push_back(kSource);
    add_bottom(inst.points, delta, 0.0, h);
    const std::size_t lines = steps_within(1.0, h);
    for (std::size_t i = 0; i <= lines; ++i) {
        add_vertical(inst.points, static_cast<double>(i) * h, h, delta);
    }
    return inst;
}

Instance uniform(double eps, const GenParams& params, std::uint64_t seed) {
    const std::size_t n = params.n.value_or(1000);
    Rng rng(seed);
    Instance inst;
    inst.epsilon = eps;
    inst.points.push_back(kSource);
    std::set<std::pair<double, double>> seen;
    while (inst.points.size() < n + 1) {
        const double x = uniform01(rng);
        const double y = uniform01(rng);
        if (seen.emplace(x, y).second) {
            inst.points.push_back({x, y});
        }
    }
    return inst;
}

}  // namespace

Instance generate(InstanceKind kind, double eps, const GenParams& params, std::uint64_t seed) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("generate requires 0 < eps < 1");
    }
    Instance inst;
    switch (kind) {
        case InstanceKind::circle:
            inst = circle(eps, params);
            break;
        case InstanceKind::comb:
            inst = comb(eps, params);
            break;
        case InstanceKind::cnet_comb:
            inst = cnet_comb(eps);
            break;
        case InstanceKind::sector_lb:
            inst = sector_lb(eps, params);
            break;
        case InstanceKind::uniform:
            inst = uniform(eps, params, seed);
            break;
    }
    inst.source = 0;
    validate(inst);
    return inst;
}

}  // namespace slt
