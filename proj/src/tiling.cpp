#include "slt/tiling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace slt {

int polygon_sides(double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) {
        throw std::invalid_argument("polygon_sides requires 0 < eps <= 1");
    }
    const double target = std::sqrt(eps);
    int k = 3;
    while (!(2.0 * std::tan(std::numbers::pi / k) < target)) {
        ++k;
    }
    return k;
}

TilingParams TilingParams::for_epsilon(double eps, Point2 source) {
    return TilingParams{polygon_sides(eps), source};
}

double face_normal_angle(int sector, int sides) {
    return (2.0 * sector + 1.0) * std::numbers::pi / sides;
}

TileId tile_of(Point2 p, const TilingParams& params) {
    const double dx = p.x - params.source.x;
    const double dy = p.y - params.source.y;
    if (dx == 0.0 && dy == 0.0) {
        throw std::invalid_argument("tile_of: point coincides with the source");
    }
    const int k = params.sides;
    double phi = std::atan2(dy, dx);
    if (phi < 0.0) {
        phi += 2.0 * std::numbers::pi;
    }
    double t = phi * k / (2.0 * std::numbers::pi);
    // points on a sector ray belong to the sector starting there
    const double nearest = std::nearbyint(t);
    if (std::abs(t - nearest) <= 1e-10) {
        t = nearest;
    }
    int sector = static_cast<int>(std::floor(t)) % k;
    if (sector < 0) {
        sector += k;
    }
    const double normal = face_normal_angle(sector, k);
    const double proj = dx * std::cos(normal) + dy * std::sin(normal);
    if (!(proj > 0.0)) {
        throw std::logic_error("tile_of: nonpositive projection onto face normal");
    }
    int exponent = 0;
    std::frexp(proj, &exponent);
    return TileId{exponent - 1, sector};
}

CanonicalFrame::CanonicalFrame(Point2 source, double rotation, double scale)
    : source_(source), rotation_(rotation), scale_(scale), ex_(std::cos(rotation)), ey_(std::sin(rotation)) {
    if (!(scale > 0.0)) {
        throw std::invalid_argument("canonical frame requires positive scale");
    }
}

Point2 CanonicalFrame::to_canonical(Point2 q) const {
    const double dx = q.x - source_.x;
    const double dy = q.y - source_.y;
    const double along = dx * ex_ + dy * ey_;
    const double across = -dx * ey_ + dy * ex_;
    return Point2{2.0 - scale_ * along, -scale_ * across};
}

Point2 CanonicalFrame::from_canonical(Point2 c) const {
    const double along = (2.0 - c.x) / scale_;
    const double across = -c.y / scale_;
    return Point2{source_.x + along * ex_ - across * ey_, source_.y + along * ey_ + across * ex_};
}

CanonicalFrame canonical_frame(TileId tile, const TilingParams& params) {
    return CanonicalFrame(params.source, face_normal_angle(tile.sector, params.sides),
                          std::ldexp(1.0, static_cast<int>(-tile.ring)));
}

}  // namespace slt
