#include "dtsp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "dtsp/dubins.hpp"

namespace dtsp {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Instance& instance, const TourConfig& config,
                       const TourEvaluation& eval) {
    double min_x = instance.points[0].x, max_x = min_x;
    double min_y = instance.points[0].y, max_y = min_y;
    for (const auto& p : instance.points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double margin = 2.5 * instance.rho;
    min_x -= margin;
    min_y -= margin;
    max_x += margin;
    max_y += margin;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(min_x) + " " +
           fmt(min_y) + " " + fmt(max_x - min_x) + " " + fmt(max_y - min_y) + "\">\n";
    // Flip the y axis so the plot uses mathematical orientation.
    out += "<g transform=\"translate(0 " + fmt(min_y + max_y) + ") scale(1 -1)\">\n";

    for (const auto& edge : eval.edges) {
        const bool straight_only = edge.arc1_angle < 1e-12 && edge.arc2_angle < 1e-12;
        if (straight_only) {
            out += "  <line x1=\"" + fmt(edge.t1.x) + "\" y1=\"" + fmt(edge.t1.y) + "\" x2=\"" +
                   fmt(edge.t2.x) + "\" y2=\"" + fmt(edge.t2.y) +
                   "\" stroke=\"#1f77b4\" stroke-width=\"" + fmt(0.08 * instance.rho) +
                   "\" fill=\"none\"/>\n";
            continue;
        }
        const int k = std::max(2, static_cast<int>(
                                      std::ceil(8.0 * edge.total_length / instance.rho)));
        const auto pts = sample_path(edge, k);
        out += "  <path d=\"M " + fmt(pts[0].x) + " " + fmt(pts[0].y);
        for (size_t i = 1; i < pts.size(); ++i)
            out += " L " + fmt(pts[i].x) + " " + fmt(pts[i].y);
        out += "\" stroke=\"#1f77b4\" stroke-width=\"" + fmt(0.08 * instance.rho) +
               "\" fill=\"none\"/>\n";
    }

    for (size_t i = 0; i < instance.points.size(); ++i) {
        const Vec2 p = instance.points[i];
        const Vec2 tip = p + 0.9 * instance.rho * direction(config.angles[i]);
        out += "  <line x1=\"" + fmt(p.x) + "\" y1=\"" + fmt(p.y) + "\" x2=\"" + fmt(tip.x) +
               "\" y2=\"" + fmt(tip.y) + "\" stroke=\"#d62728\" stroke-width=\"" +
               fmt(0.05 * instance.rho) + "\"/>\n";
        out += "  <circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) + "\" r=\"" +
               fmt(0.15 * instance.rho) + "\" fill=\"#000000\"/>\n";
    }

    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace dtsp
