#include "weakrep/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace weakrep {

namespace {

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", x);
    return buf;
}

const char* kSolid = "stroke=\"#1f4e8c\" stroke-width=\"2\"";
const char* kDashed = "stroke=\"#c0392b\" stroke-width=\"2\" stroke-dasharray=\"6 4\"";

std::string svg_open(double w, double h) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w)
        << "\" height=\"" << num(h) << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h)
        << "\">\n";
    return out.str();
}

}  // namespace

std::string interval_rep_to_svg(const LabeledGraph& g, const IntervalRep& rep) {
    if (!verify_interval(g, rep).ok)
        throw std::invalid_argument("interval_rep_to_svg: representation is invalid");
    if (g.vertex_count() == 0)
        return svg_open(10, 10) + "</svg>\n";

    const double scale = 40.0;
    const double row = 30.0;
    const double margin = 20.0;
    double lo = 0, hi = 0;
    bool first = true;
    for (auto& [v, c] : rep.coord) {
        if (v >= g.vertex_count()) continue;
        double x = c.to_double();
        if (first || x < lo) lo = x;
        if (first || x > hi) hi = x;
        first = false;
    }
    double d = rep.diameter.to_double();
    double width = (hi - lo + d) * scale + 2 * margin;
    double height = g.vertex_count() * row + 2 * margin;

    std::ostringstream out;
    out << svg_open(width, height);
    auto seg_x = [&](double c) { return margin + (c - lo) * scale; };
    for (int v = 0; v < g.vertex_count(); ++v) {
        double c = rep.coord.at(v).to_double();
        double y = margin + v * row + row / 2;
        out << "  <line x1=\"" << num(seg_x(c)) << "\" y1=\"" << num(y) << "\" x2=\""
            << num(seg_x(c) + d * scale) << "\" y2=\"" << num(y) << "\" " << kSolid
            << " stroke-linecap=\"round\"/>\n";
        out << "  <text x=\"" << num(seg_x(c) - 14) << "\" y=\"" << num(y + 4)
            << "\" font-size=\"12\">" << v << "</text>\n";
    }
    // Edge markers between the interval left endpoints, as thin connectors.
    for (const Edge& e : g.edges()) {
        double cu = rep.coord.at(e.u).to_double();
        double cv = rep.coord.at(e.v).to_double();
        double yu = margin + e.u * row + row / 2;
        double yv = margin + e.v * row + row / 2;
        out << "  <line x1=\"" << num(seg_x(cu)) << "\" y1=\"" << num(yu) << "\" x2=\""
            << num(seg_x(cv)) << "\" y2=\"" << num(yv) << "\" "
            << (e.label == EdgeLabel::Near ? kSolid : kDashed)
            << " stroke-opacity=\"0.4\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string disk_rep_to_svg(const LabeledGraph& g, const DiskRep& rep) {
    if (!verify_disk(g, rep).ok)
        throw std::invalid_argument("disk_rep_to_svg: representation is invalid");
    if (g.vertex_count() == 0)
        return svg_open(10, 10) + "</svg>\n";

    const double scale = 40.0;
    const double margin = 60.0;
    long long xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    bool first = true;
    for (auto& [v, p] : rep.point) {
        if (v >= g.vertex_count()) continue;
        if (first || p.x < xlo) xlo = p.x;
        if (first || p.x > xhi) xhi = p.x;
        if (first || p.y < ylo) ylo = p.y;
        if (first || p.y > yhi) yhi = p.y;
        first = false;
    }
    double width = double(xhi - xlo) * scale + 2 * margin;
    double height = double(yhi - ylo) * scale + 2 * margin;
    auto px = [&](long long x) { return margin + double(x - xlo) * scale; };
    auto py = [&](long long y) { return height - margin - double(y - ylo) * scale; };

    std::ostringstream out;
    out << svg_open(width, height);
    for (const Edge& e : g.edges()) {
        auto& a = rep.point.at(e.u);
        auto& b = rep.point.at(e.v);
        out << "  <line x1=\"" << num(px(a.x)) << "\" y1=\"" << num(py(a.y))
            << "\" x2=\"" << num(px(b.x)) << "\" y2=\"" << num(py(b.y)) << "\" "
            << (e.label == EdgeLabel::Near ? kSolid : kDashed) << "/>\n";
    }
    double r = double(rep.diameter) / 2.0 * scale;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto& p = rep.point.at(v);
        out << "  <circle cx=\"" << num(px(p.x)) << "\" cy=\"" << num(py(p.y))
            << "\" r=\"" << num(r)
            << "\" fill=\"#1f4e8c\" fill-opacity=\"0.15\" stroke=\"#1f4e8c\"/>\n";
        out << "  <circle cx=\"" << num(px(p.x)) << "\" cy=\"" << num(py(p.y))
            << "\" r=\"3\" fill=\"#1f4e8c\"/>\n";
        out << "  <text x=\"" << num(px(p.x) + 6) << "\" y=\"" << num(py(p.y) - 6)
            << "\" font-size=\"12\">" << v << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace weakrep
