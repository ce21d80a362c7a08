#include "atl/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace atl::render {

namespace {

constexpr double inner_radius = 34.0;
constexpr double outer_radius = 96.0;
constexpr double panel = 220.0;
constexpr int samples = 24;

struct Xy {
    double x, y;
};

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
    return buf;
}

/// Position in the cut rectangle [0,1]^2, bottom = inner boundary.
Xy rect_point(const AnnularDiagram& d, Point p) {
    switch (p.side) {
    case Side::inner: return {(p.index + 1.0) / (d.dom() + 1.0), 0.0};
    case Side::outer: return {(p.index + 1.0) / (d.cod() + 1.0), 1.0};
    case Side::left: return {0.0, (p.index + 1.0) / (d.seam() + 1.0)};
    case Side::right: return {1.0, (p.index + 1.0) / (d.seam() + 1.0)};
    }
    return {0, 0};
}

Xy inward(Side s) {
    switch (s) {
    case Side::inner: return {0, 1};
    case Side::outer: return {0, -1};
    case Side::left: return {1, 0};
    case Side::right: return {-1, 0};
    }
    return {0, 0};
}

/// Clockwise from the base-point arc, which points straight down.
Xy annulus(Xy r) {
    const double theta = -std::numbers::pi / 2 - 2 * std::numbers::pi * r.x;
    const double rad = inner_radius + (outer_radius - inner_radius) * r.y;
    return {rad * std::cos(theta), -rad * std::sin(theta)};
}

/// Sampled curve of one rectangle arc, already mapped into the annulus.
std::vector<Xy> arc_curve(const AnnularDiagram& d, Point a, Point b) {
    const Xy p = rect_point(d, a), q = rect_point(d, b);
    const Xy na = inward(a.side), nb = inward(b.side);
    double pull;
    if (a.side == b.side) {
        const int total = d.point_count();
        const int gap = std::abs(d.cycle_position(a) - d.cycle_position(b));
        const int enclosed = std::min(gap - 1, total - gap - 1);
        pull = std::min(0.42, 0.12 + 0.05 * enclosed / 2.0);
    } else {
        pull = 0.3;
    }
    const Xy c1{p.x + pull * na.x, p.y + pull * na.y}, c2{q.x + pull * nb.x, q.y + pull * nb.y};
    std::vector<Xy> out;
    for (int s = 0; s <= samples; ++s) {
        const double t = static_cast<double>(s) / samples, u = 1 - t;
        const double w0 = u * u * u, w1 = 3 * u * u * t, w2 = 3 * u * t * t, w3 = t * t * t;
        out.push_back(annulus({w0 * p.x + w1 * c1.x + w2 * c2.x + w3 * q.x, w0 * p.y + w1 * c1.y + w2 * c2.y + w3 * q.y}));
    }
    return out;
}

double ess_radius(int k, int count) {
    const double y = 0.5 + 0.18 * ((k + 1.0) / (count + 1.0) - 0.5);
    return inner_radius + (outer_radius - inner_radius) * y;
}

} // namespace

std::string svg(const Morphism& x) {
    const std::size_t panels = std::max<std::size_t>(1, x.size());
    const double width = panel * static_cast<double>(panels), height = panel + 24;
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed(width) << "\" height=\""
      << fixed(height) << "\" viewBox=\"0 0 " << fixed(width) << ' ' << fixed(height) << "\">\n";
    if (x.is_zero()) {
        o << "  <text x=\"" << fixed(panel / 2) << "\" y=\"" << fixed(height / 2)
          << "\" text-anchor=\"middle\" font-family=\"serif\" font-size=\"18\">0</text>\n</svg>\n";
        return o.str();
    }
    for (std::size_t t = 0; t < x.size(); ++t) {
        const auto& [d, c] = x.terms()[t];
        const double cx = panel * (static_cast<double>(t) + 0.5), cy = panel / 2 + 24;
        o << "  <g transform=\"translate(" << fixed(cx) << ',' << fixed(cy) << ")\">\n";
        o << "    <text x=\"0\" y=\"" << fixed(-outer_radius - 8)
          << "\" text-anchor=\"middle\" font-family=\"serif\" font-size=\"14\">" << format_scalar(c) << "</text>\n";
        o << "    <circle cx=\"0\" cy=\"0\" r=\"" << fixed(outer_radius) << "\" fill=\"none\" stroke=\"#888\"/>\n";
        o << "    <circle cx=\"0\" cy=\"0\" r=\"" << fixed(inner_radius) << "\" fill=\"none\" stroke=\"#888\"/>\n";
        o << "    <line x1=\"0\" y1=\"" << fixed(inner_radius) << "\" x2=\"0\" y2=\"" << fixed(outer_radius)
          << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
        for (int k = 0; k < d.ess(); ++k)
            o << "    <circle cx=\"0\" cy=\"0\" r=\"" << fixed(ess_radius(k, d.ess()))
              << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        for (const auto& [a, b] : d.arcs()) {
            auto pts = arc_curve(d, a, b);
            o << "    <path d=\"M";
            for (std::size_t s = 0; s < pts.size(); ++s) o << (s ? " L" : "") << fixed(pts[s].x) << ',' << fixed(pts[s].y);
            o << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        }
        o << "  </g>\n";
    }
    o << "</svg>\n";
    return o.str();
}

std::string tikz(const Morphism& x) {
    constexpr double scale = 1.0 / 40.0; // pt-ish units to cm
    std::ostringstream o;
    o << "\\begin{tikzpicture}\n";
    if (x.is_zero()) o << "  \\node at (0,0) {$0$};\n";
    for (std::size_t t = 0; t < x.size(); ++t) {
        const auto& [d, c] = x.terms()[t];
        const double cx = panel * scale * static_cast<double>(t);
        auto at = [&](Xy p) { return "(" + fixed(cx + p.x * scale) + "," + fixed(-p.y * scale) + ")"; };
        o << "  \\node at " << at({0, -outer_radius - 12}) << " {$" << format_scalar(c) << "$};\n";
        o << "  \\draw[gray] " << at({0, 0}) << " circle (" << fixed(outer_radius * scale) << ");\n";
        o << "  \\draw[gray] " << at({0, 0}) << " circle (" << fixed(inner_radius * scale) << ");\n";
        o << "  \\draw[gray, dashed] " << at({0, inner_radius}) << " -- " << at({0, outer_radius}) << ";\n";
        for (int k = 0; k < d.ess(); ++k)
            o << "  \\draw[thick] " << at({0, 0}) << " circle (" << fixed(ess_radius(k, d.ess()) * scale) << ");\n";
        for (const auto& [a, b] : d.arcs()) {
            auto pts = arc_curve(d, a, b);
            o << "  \\draw[thick] ";
            for (std::size_t s = 0; s < pts.size(); ++s) o << (s ? " -- " : "") << at(pts[s]);
            o << ";\n";
        }
    }
    o << "\\end{tikzpicture}\n";
    return o.str();
}

std::string ascii(const Morphism& x) {
    std::ostringstream o;
    o << "hom(" << x.dom() << ", " << x.cod() << "), " << x.size() << (x.size() == 1 ? " term\n" : " terms\n");
    for (std::size_t t = 0; t < x.size(); ++t) {
        const auto& [d, c] = x.terms()[t];
        o << '[' << t + 1 << "] " << format_scalar(c) << "  (seam " << d.seam() << ", essential circles " << d.ess()
          << ")\n";
        std::vector<bool> seen(static_cast<std::size_t>(d.point_count()), false);
        auto start = [&](Point p) {
            if (seen[static_cast<std::size_t>(d.id(p))]) return;
            std::string path = point_label(p);
            int crossings = 0;
            Point cur = p;
            while (true) {
                seen[static_cast<std::size_t>(d.id(cur))] = true;
                Point next = d.partner(cur);
                seen[static_cast<std::size_t>(d.id(next))] = true;
                if (next.side == Side::inner || next.side == Side::outer) {
                    path += " -- " + point_label(next);
                    break;
                }
                ++crossings;
                cur = {next.side == Side::left ? Side::right : Side::left, next.index};
            }
            const bool through = path.find(" -- O") != std::string::npos;
            const char* kind = p.side == Side::outer ? "cup" : through ? "through" : "cap";
            o << "    " << path << "  " << kind;
            if (crossings) o << ", crosses the base point " << crossings << (crossings == 1 ? " time" : " times");
            o << '\n';
        };
        for (int j = 0; j < d.dom(); ++j) start({Side::inner, j});
        for (int j = 0; j < d.cod(); ++j) start({Side::outer, j});
        for (int k = 0; k < d.ess(); ++k) o << "    essential circle\n";
    }
    return o.str();
}

} // namespace atl::render
