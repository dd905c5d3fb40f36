#include "minlink/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace minlink {

namespace {

std::string dec(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// SVG y grows downwards; every y is negated so the figure reads y-up.
std::string sx(const Rational& x) { return dec(x.to_double()); }
std::string sy(const Rational& y) { return dec(-y.to_double()); }

const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"};

}  // namespace

std::string emit_svg(const Instance& inst, const Tour& tour, const Ledger* ledger) {
    std::vector<Point> pts{inst.s, inst.t};
    for (const Segment& e : inst.segments) {
        pts.push_back(e.geom.p);
        pts.push_back(e.geom.q);
    }
    pts.insert(pts.end(), tour.vertices.begin(), tour.vertices.end());
    double x0 = pts[0].x.to_double(), x1 = x0, y0 = pts[0].y.to_double(), y1 = y0;
    for (const Point& p : pts) {
        x0 = std::min(x0, p.x.to_double());
        x1 = std::max(x1, p.x.to_double());
        y0 = std::min(y0, p.y.to_double());
        y1 = std::max(y1, p.y.to_double());
    }
    const double w = std::max(x1 - x0, 1.0);
    const double h = std::max(y1 - y0, 1.0);
    const double mx = 0.1 * w;
    const double my = 0.1 * h;
    const double unit = std::max(w, h) / 200.0;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << dec(x0 - mx) << ' '
       << dec(-y1 - my) << ' ' << dec(w + 2 * mx) << ' ' << dec(h + 2 * my) << "\">\n"
       << "<!-- y axis flipped: drawn at -y so that y points up -->\n";

    os << "<g id=\"segments\" stroke=\"#000\" stroke-width=\"" << dec(unit) << "\" font-size=\"" << dec(4 * unit)
       << "\">\n";
    for (std::size_t i = 0; i < inst.segments.size(); ++i) {
        const SegmentGeom& g = inst.segments[i].geom;
        os << "<line x1=\"" << sx(g.p.x) << "\" y1=\"" << sy(g.p.y) << "\" x2=\"" << sx(g.q.x) << "\" y2=\""
           << sy(g.q.y) << "\"/>\n";
        os << "<text x=\"" << sx(g.p.x) << "\" y=\"" << sy(g.p.y) << "\" stroke=\"none\">e_" << i + 1
           << "</text>\n";
    }
    os << "</g>\n";

    if (ledger) {
        os << "<g id=\"families\" stroke-width=\"" << dec(3 * unit) << "\" stroke-opacity=\"0.5\">\n";
        for (const LayerRecord& r : ledger->layers) {
            const SegmentGeom layer = inst.layer(r.index);
            for (std::size_t j = 0; j < r.base.orientations(); ++j) {
                if (r.base[j].empty() && r.plus[j].empty()) {
                    continue;
                }
                os << "<g class=\"family\" data-layer=\"" << r.index << "\" data-orient=\"" << j << "\" stroke=\""
                   << kPalette[j % 8] << "\">\n";
                for (const auto* fam : {&r.base[j], &r.plus[j]}) {
                    for (const Interval& a : *fam) {
                        const SegmentGeom g = layer.sub(a.range);
                        os << "<line data-links=\"" << a.links << "\" x1=\"" << sx(g.p.x) << "\" y1=\"" << sy(g.p.y)
                           << "\" x2=\"" << sx(g.q.x) << "\" y2=\"" << sy(g.q.y) << "\"/>\n";
                    }
                }
                os << "</g>\n";
            }
        }
        os << "</g>\n";
    }

    os << "<polyline id=\"tour\" fill=\"none\" stroke=\"#c00\" stroke-width=\"" << dec(unit) << "\" points=\"";
    for (std::size_t k = 0; k < tour.vertices.size(); ++k) {
        os << (k ? " " : "") << sx(tour.vertices[k].x) << ',' << sy(tour.vertices[k].y);
    }
    os << "\"/>\n";

    os << "<g id=\"visits\" fill=\"#c00\">\n";
    for (const VisitPoint& v : tour.visits) {
        os << "<circle cx=\"" << sx(v.point.x) << "\" cy=\"" << sy(v.point.y) << "\" r=\"" << dec(1.5 * unit)
           << "\"/>\n";
    }
    os << "</g>\n";
    os << "<circle id=\"s\" cx=\"" << sx(inst.s.x) << "\" cy=\"" << sy(inst.s.y) << "\" r=\"" << dec(2 * unit)
       << "\" fill=\"#00c\"/>\n";
    os << "<circle id=\"t\" cx=\"" << sx(inst.t.x) << "\" cy=\"" << sy(inst.t.y) << "\" r=\"" << dec(2 * unit)
       << "\" fill=\"#0a0\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace minlink
