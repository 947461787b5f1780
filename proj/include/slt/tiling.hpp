#pragma once

#include <compare>
#include <cstdint>

#include "slt/geom.hpp"

namespace slt {

/// Smallest k >= 3 with 2 tan(pi/k) < sqrt(eps).
int polygon_sides(double eps);

/// Nested k-gons around the source. The polygon of ring i has inscribed radius 2^i,
/// vertices at angles 2*pi*j/k scaled outward, and face normals at (2j+1)*pi/k.
struct TilingParams {
    int sides;
    Point2 source;

    static TilingParams for_epsilon(double eps, Point2 source);
};

struct TileId {
    std::int64_t ring;
    int sector;

    friend auto operator<=>(const TileId&, const TileId&) = default;
};

TileId tile_of(Point2 p, const TilingParams& params);

/// Angle of the face normal of a sector.
double face_normal_angle(int sector, int sides);

/// Similarity q -> (2 - sigma <q-s,e>, -sigma <q-s,e_perp>) with sigma = scale.
class CanonicalFrame {
public:
    CanonicalFrame(Point2 source, double rotation, double scale);

    Point2 to_canonical(Point2 q) const;
    Point2 from_canonical(Point2 c) const;

    double rotation() const { return rotation_; }
    double scale() const { return scale_; }
    Point2 source() const { return source_; }

private:
    Point2 source_;
    double rotation_;
    double scale_;
    double ex_;
    double ey_;
};

CanonicalFrame canonical_frame(TileId tile, const TilingParams& params);

}  // namespace slt
