#include "slt/svg.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "slt/io.hpp"

namespace slt {

void write_svg(std::ostream& out, const Instance& instance, const RootedTree* tree) {
    double x0 = std::numeric_limits<double>::infinity();
    double y0 = x0;
    double x1 = -x0;
    double y1 = -x0;
    auto extend = [&](Point2 p) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    };
    for (Point2 p : instance.points) {
        extend(p);
    }
    if (tree) {
        for (const Vertex& v : tree->vertices) {
            extend(v.pos);
        }
    }
    const double span = std::max({x1 - x0, y1 - y0, 1e-9});
    const double size = 1000.0;
    const double margin = 20.0;
    const double scale = (size - 2 * margin) / span;
    auto sx = [&](double x) { return format_double(margin + (x - x0) * scale); };
    auto sy = [&](double y) { return format_double(margin + (y1 - y) * scale); };
    const double w = 2 * margin + (x1 - x0) * scale;
    const double h = 2 * margin + (y1 - y0) * scale;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(w) << "\" height=\""
        << format_double(h) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (tree) {
        out << "<g stroke=\"#3465a4\" stroke-width=\"0.8\">\n";
        for (auto [u, v] : tree->edges()) {
            const Point2 a = tree->vertices[u].pos;
            const Point2 b = tree->vertices[v].pos;
            out << "<line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x) << "\" y2=\""
                << sy(b.y) << "\"/>\n";
        }
        out << "</g>\n<g fill=\"none\" stroke=\"#cc0000\" stroke-width=\"0.8\">\n";
        for (const Vertex& v : tree->vertices) {
            if (v.kind == VertexKind::steiner) {
                out << "<circle cx=\"" << sx(v.pos.x) << "\" cy=\"" << sy(v.pos.y) << "\" r=\"2\"/>\n";
            }
        }
        out << "</g>\n";
    }
    out << "<g fill=\"black\">\n";
    for (std::size_t i = 0; i < instance.points.size(); ++i) {
        if (i != instance.source) {
            const Point2 p = instance.points[i];
            out << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"1.5\"/>\n";
        }
    }
    const Point2 s = instance.source_point();
    out << "</g>\n<circle cx=\"" << sx(s.x) << "\" cy=\"" << sy(s.y) << "\" r=\"5\" fill=\"#4e9a06\"/>\n";
    out << "</svg>\n";
}

}  // namespace slt
