#include "polytuple/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "polytuple/errors.hpp"
#include "polytuple/exact.hpp"

namespace polytuple {
namespace {

constexpr std::array<const char*, 8> kPalette = {
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
    "#9467bd", "#8c564b", "#e377c2", "#17becf",
};

// Fixed-precision formatting keeps the document byte-stable across platforms.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

struct Transform {
    double min_x = 0, min_y = 0, scale = 1, margin = 0;
    double canvas = 0;

    double x(double wx) const { return margin + (wx - min_x) * scale; }
    double y(double wy) const { return canvas - (margin + (wy - min_y) * scale); }
};

Transform fit(const PointSet& points, double canvas) {
    Transform tr;
    tr.canvas = canvas;
    tr.margin = canvas * 0.06;
    if (points.coords.empty()) return tr;
    double min_x = points.coords[0][0], max_x = min_x;
    double min_y = points.coords[0][1], max_y = min_y;
    for (const auto& p : points.coords) {
        min_x = std::min(min_x, double(p[0]));
        max_x = std::max(max_x, double(p[0]));
        min_y = std::min(min_y, double(p[1]));
        max_y = std::max(max_y, double(p[1]));
    }
    tr.min_x = min_x;
    tr.min_y = min_y;
    const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
    tr.scale = (canvas - 2 * tr.margin) / span;
    return tr;
}

void append_circle(std::string& out, const Transform& tr, double cx, double cy,
                   double r, const char* style) {
    out += "<circle cx=\"" + fmt(tr.x(cx)) + "\" cy=\"" + fmt(tr.y(cy)) +
           "\" r=\"" + fmt(r * tr.scale) + "\" " + style + "/>\n";
}

void append_segment(std::string& out, const Transform& tr, const double* a,
                    const double* b, const char* color) {
    out += "<line x1=\"" + fmt(tr.x(a[0])) + "\" y1=\"" + fmt(tr.y(a[1])) +
           "\" x2=\"" + fmt(tr.x(b[0])) + "\" y2=\"" + fmt(tr.y(b[1])) +
           "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
}

// The defining shape, drawn beneath everything else from the generator points.
void append_range_shape(std::string& out, const Transform& tr,
                        const PointSet& points, const SvgHighlight& h) {
    std::vector<const Coord*> gens;
    for (const uint32_t g : h.generator) {
        if (g >= points.size()) throw input_error("generator index out of range");
        gens.push_back(points.point(g));
    }
    if (gens.empty()) return;
    const char* style =
        "fill=\"#1f77b4\" fill-opacity=\"0.12\" stroke=\"#1f77b4\" stroke-width=\"1.5\"";
    switch (h.kind) {
        case RangeKind::disks2d:
        case RangeKind::balls: {
            if (gens.size() >= 3) {
                const auto sphere = sphere_through({gens[0], gens[1], gens[2]}, 2);
                if (!sphere) throw input_error("generator points define no circle");
                const double den = sphere->den.convert_to<double>();
                const double cx = sphere->center_num[0].convert_to<double>() / den;
                const double cy = sphere->center_num[1].convert_to<double>() / den;
                const double r =
                    std::sqrt(sphere->radius2_scaled.convert_to<double>()) / std::abs(den);
                append_circle(out, tr, cx, cy, r, style);
            } else if (gens.size() == 2) {
                const double cx = (double(gens[0][0]) + double(gens[1][0])) / 2;
                const double cy = (double(gens[0][1]) + double(gens[1][1])) / 2;
                const double r = std::hypot(double(gens[0][0]) - double(gens[1][0]),
                                            double(gens[0][1]) - double(gens[1][1])) / 2;
                append_circle(out, tr, cx, cy, r, style);
            } else {
                append_circle(out, tr, double(gens[0][0]), double(gens[0][1]),
                              2.0 / tr.scale, style);
            }
            break;
        }
        case RangeKind::halfplanes2d: {
            if (gens.size() < 2) break;
            // Boundary line through the two witnesses, stretched well past the
            // data so the viewport clips it.
            double ax = gens[0][0], ay = gens[0][1];
            double bx = gens[1][0], by = gens[1][1];
            const double dx = bx - ax, dy = by - ay;
            const double len = std::max(std::hypot(dx, dy), 1e-9);
            const double reach = 4 * tr.canvas / tr.scale;
            const double p[2] = {ax - dx / len * reach, ay - dy / len * reach};
            const double q[2] = {ax + dx / len * reach, ay + dy / len * reach};
            append_segment(out, tr, p, q, "#1f77b4");
            break;
        }
        default: {
            double lo_x = gens[0][0], hi_x = lo_x, lo_y = gens[0][1], hi_y = lo_y;
            for (const Coord* g : gens) {
                lo_x = std::min(lo_x, double(g[0]));
                hi_x = std::max(hi_x, double(g[0]));
                lo_y = std::min(lo_y, double(g[1]));
                hi_y = std::max(hi_y, double(g[1]));
            }
            if (h.kind == RangeKind::squares2d) {
                const double side = std::max(hi_x - lo_x, hi_y - lo_y);
                const double cx = (lo_x + hi_x) / 2, cy = (lo_y + hi_y) / 2;
                lo_x = cx - side / 2;
                hi_x = cx + side / 2;
                lo_y = cy - side / 2;
                hi_y = cy + side / 2;
            }
            out += "<rect x=\"" + fmt(tr.x(lo_x)) + "\" y=\"" + fmt(tr.y(hi_y)) +
                   "\" width=\"" + fmt((hi_x - lo_x) * tr.scale) + "\" height=\"" +
                   fmt((hi_y - lo_y) * tr.scale) + "\" " + style + "/>\n";
            break;
        }
    }
}

}  // namespace

std::string emit_svg(const PointSet& points,
                     const std::optional<SvgHighlight>& highlight,
                     const SvgOptions& options) {
    if (points.dim != 2) throw input_error("SVG plots need 2-D points");
    const Transform tr = fit(points, options.canvas);
    const std::string size = std::to_string(options.canvas);
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size +
                      "\" height=\"" + size + "\" viewBox=\"0 0 " + size + " " +
                      size + "\">\n";
    out += "<rect width=\"" + size + "\" height=\"" + size + "\" fill=\"#ffffff\"/>\n";

    std::vector<bool> in_edge(points.size(), false);
    if (highlight) {
        append_range_shape(out, tr, points, *highlight);
        for (const Vertex v : highlight->edge) {
            if (v >= points.size()) throw input_error("edge vertex out of range");
            in_edge[v] = true;
        }
        uint32_t drawn = 0;
        const Edge& e = highlight->edge;
        for (size_t i = 0; i < e.size() && drawn < options.max_pair_overlays; ++i) {
            for (size_t j = i + 1; j < e.size() && drawn < options.max_pair_overlays; ++j) {
                const double a[2] = {double(points.point(e[i])[0]),
                                     double(points.point(e[i])[1])};
                const double b[2] = {double(points.point(e[j])[0]),
                                     double(points.point(e[j])[1])};
                append_segment(out, tr, a, b, kPalette[drawn % kPalette.size()]);
                ++drawn;
            }
        }
    }

    for (uint32_t i = 0; i < points.size(); ++i) {
        const Coord* p = points.point(i);
        const char* fill = in_edge[i] ? "#d62728" : "#333344";
        const double r = in_edge[i] ? 5.0 : 3.0;
        out += "<circle cx=\"" + fmt(tr.x(double(p[0]))) + "\" cy=\"" +
               fmt(tr.y(double(p[1]))) + "\" r=\"" + fmt(r) + "\" fill=\"" + fill +
               "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace polytuple
