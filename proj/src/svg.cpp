#include "frontier/svg.h"

#include <algorithm>
#include <sstream>

namespace frontier {

namespace {

struct Mapper {
    double xmin, ymax, scale;
    double margin;
    double x(double v) const { return (v - xmin) * scale + margin; }
    double y(double v) const { return (ymax - v) * scale + margin; }  // y grows down
};

void fmt(std::ostringstream& out) { out.precision(3); out << std::fixed; }

}  // namespace

std::string render_svg(const AuxStructure& aux, const ImplicitFront* front) {
    const auto& rs = aux.ts.regions;
    double xmin = rs.front().xmin, xmax = rs.front().xmax;
    double ymin = rs.front().ymin, ymax = rs.front().ymax;
    for (const Region& r : rs) {
        xmin = std::min(xmin, r.xmin);
        xmax = std::max(xmax, r.xmax);
        ymin = std::min(ymin, r.ymin);
        ymax = std::max(ymax, r.ymax);
    }
    const double span = std::max(xmax - xmin, ymax - ymin);
    const double scale = span > 0 ? 640.0 / span : 1.0;
    const Mapper m{xmin, ymax, scale, 24.0};
    const double w = (xmax - xmin) * scale + 48.0, h = (ymax - ymin) * scale + 48.0;

    std::ostringstream out;
    fmt(out);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\">\n";

    // regions, in truncated order
    for (std::size_t t = 0; t < rs.size(); ++t) {
        const Region& r = rs[t];
        const char* fill = "#9ecae1";  // plain survivor
        if (r.kind == RegionKind::sentinel) fill = "#bdbdbd";
        else if (aux.ts.flagged[t]) fill = "#fdae6b";
        if (r.is_degenerate()) {
            out << "  <circle cx=\"" << m.x(r.xmin) << "\" cy=\"" << m.y(r.ymin)
                << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
        } else {
            out << "  <rect x=\"" << m.x(r.xmin) << "\" y=\"" << m.y(r.ymax) << "\" width=\""
                << (r.xmax - r.xmin) * scale << "\" height=\"" << (r.ymax - r.ymin) * scale
                << "\" fill=\"" << fill << "\" fill-opacity=\"0.55\" stroke=\"#636363\"/>\n";
        }
        out << "  <text x=\"" << m.x(r.xmin) + 2 << "\" y=\"" << m.y(r.ymax) + 12
            << "\" font-size=\"10\">" << r.id << "</text>\n";
    }

    // guaranteed boundary
    if (!aux.ts.boundary.vertices.empty()) {
        out << "  <polyline fill=\"none\" stroke=\"#31a354\" stroke-width=\"2\" points=\"";
        for (std::size_t t = 0; t < aux.ts.boundary.vertices.size(); ++t) {
            const Point& p = aux.ts.boundary.vertices[t];
            if (t) out << " ";
            out << m.x(p.x) << "," << m.y(p.y);
        }
        out << "\"/>\n";
    }

    // arrows of the truncated graph: vertical blue, horizontal red
    const auto center = [&](int t) {
        const Region& r = rs[t];
        return Point{(r.xmin + r.xmax) / 2, (r.ymin + r.ymax) / 2};
    };
    for (std::size_t s = 0; s < aux.g_trunc.V.size(); ++s) {
        for (std::size_t k = 1; k < aux.g_trunc.V[s].size(); ++k) {
            const Point a = center(static_cast<int>(s)), b = center(aux.g_trunc.V[s][k]);
            out << "  <line x1=\"" << m.x(a.x) << "\" y1=\"" << m.y(a.y) << "\" x2=\""
                << m.x(b.x) << "\" y2=\"" << m.y(b.y)
                << "\" stroke=\"#3182bd\" stroke-dasharray=\"4 2\"/>\n";
        }
        const auto& H = aux.g_trunc.H[s];
        for (std::size_t k = 0; k + 1 < H.size(); ++k) {
            const Point a = center(static_cast<int>(s)), b = center(H[k]);
            out << "  <line x1=\"" << m.x(a.x) << "\" y1=\"" << m.y(a.y) << "\" x2=\""
                << m.x(b.x) << "\" y2=\"" << m.y(b.y)
                << "\" stroke=\"#de2d26\" stroke-dasharray=\"4 2\"/>\n";
        }
    }

    // reconstructed front: retrieval marks on retrieved entries
    if (front) {
        for (const FrontEntry& e : front->entries) {
            if (e.kind == FrontEntry::Kind::retrieved) {
                out << "  <circle cx=\"" << m.x(e.point.x) << "\" cy=\"" << m.y(e.point.y)
                    << "\" r=\"4\" fill=\"#756bb1\"/>\n";
            } else {
                for (int t = e.first; t <= e.last; ++t) {
                    const Region& r = rs[t];
                    out << "  <rect x=\"" << m.x(r.xmin) << "\" y=\"" << m.y(r.ymax)
                        << "\" width=\"" << (r.xmax - r.xmin) * scale << "\" height=\""
                        << (r.ymax - r.ymin) * scale
                        << "\" fill=\"none\" stroke=\"#756bb1\" stroke-width=\"2\"/>\n";
                }
            }
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace frontier
