#pragma once

#include <cmath>
#include <optional>

namespace slt {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline double distance(Point2 a, Point2 b) { return std::hypot(b.x - a.x, b.y - a.y); }

/// Closed interval of reals. The empty interval is an explicit state.
class Interval {
public:
    Interval() = default;
    Interval(double lo, double hi);

    static Interval empty() { return Interval(); }

    bool is_empty() const { return empty_; }
    double lo() const;
    double hi() const;
    double width() const { return empty_ ? 0.0 : hi_ - lo_; }
    bool contains(double v) const { return !empty_ && lo_ <= v && v <= hi_; }

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
    bool empty_ = true;
};

/// Shape of the segment ab relative to the horizontal axis.
struct SegmentShape {
    double slope;  ///< +infinity for vertical segments
    double proj;   ///< |x(b) - x(a)|
    double slack;  ///< d(a,b) - proj
};

SegmentShape slope_proj_slack(Point2 a, Point2 b);

/// {q : d(f1,q) + d(q,f2) <= sum}
struct FocalEllipse {
    Point2 f1;
    Point2 f2;
    double sum;

    FocalEllipse(Point2 f1, Point2 f2, double sum);
};

/// E_{ab,eps} = {q : d(a,q) + d(q,b) <= (1+eps) d(a,b)}, requires a != b and eps > 0.
FocalEllipse stretch_ellipse(Point2 a, Point2 b, double eps);

/// Membership with relative tolerance 1e-12 on the focal-distance sum.
bool ellipse_contains(const FocalEllipse& e, Point2 q);

/// Intersection with the vertical line x. Foci must share a y coordinate.
Interval vertical_cross_section(const FocalEllipse& e, double x);

/// Horizontal extent [left vertex, right vertex] of an ellipse with horizontal foci.
Interval horizontal_extent(const FocalEllipse& e);

/// Reflection of p through the vertical line x = x(s).
Point2 outer_horizontal_focus(Point2 p, Point2 s);

/// E_{pb,2eps} with b = outer_horizontal_focus(p, s).
/// Requires 0 < eps < 1/9 and |slope(p,s)| <= sqrt(eps).
FocalEllipse sandwich_ellipse(Point2 p, Point2 s, double eps);

struct Box {
    double x_lo;
    double x_hi;
    double y_lo;
    double y_hi;
};

/// Bounding box of e intersected with the strip x_lo <= x <= x_hi. Foci must be horizontal.
std::optional<Box> strip_bounding_box(const FocalEllipse& e, double x_lo, double x_hi);

}  // namespace slt
