#include "hmdisk/render.hpp"

#include <cstdio>

namespace hmdisk {

namespace {
// fixed decimals keep the byte output reproducible across platforms
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v + 0.0); // +0.0 folds -0 into 0
    return buf;
}

// SVG y axis points down; flip the imaginary axis
std::string xy(const Point& p) { return fmt(p.re) + " " + fmt(-p.im); }
} // namespace

std::string render_scene_svg(const Configuration& cfg) {
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
           "viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
    svg += "<rect x=\"-1.1\" y=\"-1.1\" width=\"2.2\" height=\"2.2\" fill=\"#ffffff\"/>\n";
    svg += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#9a9a9a\" "
           "stroke-width=\"0.008\"/>\n";

    for (const Segment& s : cfg.continuum.segments)
        svg += "<path d=\"M " + xy(s.p0) + " L " + xy(s.p1) +
               "\" fill=\"none\" stroke=\"#20507a\" stroke-width=\"0.014\" "
               "stroke-linecap=\"round\"/>\n";

    // arcs as dense polylines; 96 chords keep the sagitta below half the
    // stroke width for any radius that fits in the disk
    for (const CircularArc& a : cfg.continuum.arcs) {
        std::string d = "M " + xy(a.at(0.0));
        for (int i = 1; i <= 96; ++i) d += " L " + xy(a.at(i / 96.0));
        svg += "<path d=\"" + d +
               "\" fill=\"none\" stroke=\"#20507a\" stroke-width=\"0.014\" "
               "stroke-linecap=\"round\"/>\n";
    }

    for (const Point& p : cfg.points)
        svg += "<circle cx=\"" + fmt(p.re) + "\" cy=\"" + fmt(-p.im) +
               "\" r=\"0.022\" fill=\"#b03131\"/>\n";

    svg += "</svg>\n";
    return svg;
}

} // namespace hmdisk
