#include "slt/geom.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace slt {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi), empty_(false) {
    if (!(lo <= hi)) {
        throw std::invalid_argument("interval requires lo <= hi");
    }
}

double Interval::lo() const {
    if (empty_) {
        throw std::logic_error("lo() of empty interval");
    }
    return lo_;
}

double Interval::hi() const {
    if (empty_) {
        throw std::logic_error("hi() of empty interval");
    }
    return hi_;
}

SegmentShape slope_proj_slack(Point2 a, Point2 b) {
    if (a == b) {
        throw std::invalid_argument("slope_proj_slack: coincident endpoints");
    }
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double proj = std::abs(dx);
    const double len = std::hypot(dx, dy);
    // len - proj computed without cancellation
    const double slack = dy * dy / (len + proj);
    const double slope = dx == 0.0 ? std::numeric_limits<double>::infinity() : dy / dx;
    return SegmentShape{slope, proj, slack};
}

FocalEllipse::FocalEllipse(Point2 a, Point2 b, double s) : f1(a), f2(b), sum(s) {
    if (!(sum > distance(f1, f2))) {
        throw std::invalid_argument("focal ellipse requires sum > d(f1,f2)");
    }
}

FocalEllipse stretch_ellipse(Point2 a, Point2 b, double eps) {
    if (a == b || !(eps > 0.0)) {
        throw std::invalid_argument("stretch_ellipse requires a != b and eps > 0");
    }
    return FocalEllipse(a, b, (1.0 + eps) * distance(a, b));
}

bool ellipse_contains(const FocalEllipse& e, Point2 q) {
    return distance(e.f1, q) + distance(q, e.f2) <= e.sum * (1.0 + 1e-12);
}

namespace {

struct HorizontalAxes {
    double xc;
    double yc;
    double a;
    double b;
};

HorizontalAxes horizontal_axes(const FocalEllipse& e) {
    if (e.f1.y != e.f2.y) {
        throw std::invalid_argument("ellipse foci are not horizontal");
    }
    const double a = 0.5 * e.sum;
    const double c = 0.5 * std::abs(e.f2.x - e.f1.x);
    return HorizontalAxes{0.5 * (e.f1.x + e.f2.x), e.f1.y, a, std::sqrt((a - c) * (a + c))};
}

}  // namespace

Interval vertical_cross_section(const FocalEllipse& e, double x) {
    const HorizontalAxes h = horizontal_axes(e);
    const double u = (x - h.xc) / h.a;
    if (std::abs(u) > 1.0) {
        return Interval::empty();
    }
    const double half = h.b * std::sqrt((1.0 - u) * (1.0 + u));
    return Interval(h.yc - half, h.yc + half);
}

Interval horizontal_extent(const FocalEllipse& e) {
    const HorizontalAxes h = horizontal_axes(e);
    return Interval(h.xc - h.a, h.xc + h.a);
}

Point2 outer_horizontal_focus(Point2 p, Point2 s) {
    if (p.x == s.x) {
        throw std::invalid_argument("outer_horizontal_focus: x(p) == x(s)");
    }
    return Point2{2.0 * s.x - p.x, p.y};
}

FocalEllipse sandwich_ellipse(Point2 p, Point2 s, double eps) {
    if (!(eps > 0.0 && eps < 1.0 / 9.0)) {
        throw std::invalid_argument("sandwich_ellipse requires 0 < eps < 1/9");
    }
    if (p == s) {
        throw std::invalid_argument("sandwich_ellipse requires p != s");
    }
    const SegmentShape shape = slope_proj_slack(p, s);
    if (!(std::abs(shape.slope) <= std::sqrt(eps) * (1.0 + 1e-12))) {
        throw std::invalid_argument("sandwich_ellipse requires |slope(p,s)| <= sqrt(eps)");
    }
    const Point2 b = outer_horizontal_focus(p, s);
    return FocalEllipse(p, b, (1.0 + 2.0 * eps) * distance(p, b));
}

std::optional<Box> strip_bounding_box(const FocalEllipse& e, double x_lo, double x_hi) {
    const HorizontalAxes h = horizontal_axes(e);
    const double lo = std::max(x_lo, h.xc - h.a);
    const double hi = std::min(x_hi, h.xc + h.a);
    if (lo > hi) {
        return std::nullopt;
    }
    // widest vertical section inside [lo, hi]
    const double widest = std::clamp(h.xc, lo, hi);
    const Interval ys = vertical_cross_section(e, widest);
    if (ys.is_empty()) {
        return Box{lo, hi, h.yc, h.yc};
    }
    return Box{lo, hi, ys.lo(), ys.hi()};
}

}  // namespace slt
