#include "wallscope/walls.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace wallscope {

WallLocus WallLocus::circle(Rat center, Rat radius_sq) {
    if (radius_sq <= 0) throw std::domain_error("WallLocus::circle: radius_sq must be positive");
    WallLocus w;
    w.kind = WallKind::Circle;
    w.center = std::move(center);
    w.radius_sq = std::move(radius_sq);
    return w;
}

WallLocus WallLocus::vertical_line(Rat beta) {
    WallLocus w;
    w.kind = WallKind::VerticalLine;
    w.beta = std::move(beta);
    return w;
}

WallLocus WallLocus::degenerate(DegenerateReason r) {
    WallLocus w;
    w.kind = WallKind::Degenerate;
    w.reason = r;
    return w;
}

std::ostream& operator<<(std::ostream& os, const WallLocus& w) {
    switch (w.kind) {
        case WallKind::Circle:
            return os << "Circle(center=" << rat_str(w.center) << ", radius_sq=" << rat_str(w.radius_sq)
                      << ")";
        case WallKind::VerticalLine:
            return os << "VerticalLine(beta=" << rat_str(w.beta) << ")";
        case WallKind::Degenerate:
            return os << "Degenerate("
                      << (w.reason == DegenerateReason::ProportionalClasses ? "ProportionalClasses"
                                                                            : "EmptyLocus")
                      << ")";
    }
    return os;
}

WallLocus numerical_wall(const Char3& v, const Char3& w) {
    const Rat quad = (v.ch1 * w.ch0 - w.ch1 * v.ch0) / 2;       // (beta^2+alpha^2) coefficient
    const Rat lin = -(v.ch2 * w.ch0 - w.ch2 * v.ch0);           // beta coefficient
    const Rat cst = v.ch2 * w.ch1 - w.ch2 * v.ch1;
    if (quad != 0) {
        const Rat center = -lin / (2 * quad);
        const Rat radius_sq = center * center - cst / quad;
        if (radius_sq <= 0) return WallLocus::degenerate(DegenerateReason::EmptyLocus);
        return WallLocus::circle(center, radius_sq);
    }
    if (lin != 0) return WallLocus::vertical_line(-cst / lin);
    return WallLocus::degenerate(DegenerateReason::ProportionalClasses);
}

HyperbolaLocus hyperbola_locus(const Char3& v) {
    return {v.ch0, -2 * v.ch1, 2 * v.ch2};
}

Apex wall_apex(const WallLocus& w) {
    if (w.kind != WallKind::Circle) throw std::domain_error("wall_apex: not a circle");
    return {w.center, w.radius_sq};
}

bool apex_on_locus(const WallLocus& w, const HyperbolaLocus& h) {
    const Apex a = wall_apex(w);
    return h.eval(a.beta, a.alpha_sq) == 0;
}

NestingReport sort_and_check_nesting(std::vector<WallLocus> walls) {
    for (const WallLocus& w : walls)
        if (w.kind != WallKind::Circle)
            throw std::domain_error("sort_and_check_nesting: all inputs must be circles");
    std::sort(walls.begin(), walls.end(), [](const WallLocus& x, const WallLocus& y) {
        if (x.radius_sq != y.radius_sq) return x.radius_sq < y.radius_sq;
        return x.center < y.center;
    });
    NestingReport report;
    for (std::size_t i = 0; i + 1 < walls.size(); ++i) {
        for (std::size_t j = i + 1; j < walls.size(); ++j) {
            const WallLocus& small = walls[i];
            const WallLocus& big = walls[j];
            const Rat gap = small.center - big.center;
            const Rat s = small.radius_sq + big.radius_sq - gap * gap;
            const bool inside = s >= 0 && s * s >= 4 * small.radius_sq * big.radius_sq;
            if (!inside) {
                std::ostringstream os;
                os << small << " not nested inside " << big;
                report.nested = false;
                report.violations.push_back(os.str());
            }
        }
    }
    report.sorted = std::move(walls);
    return report;
}

namespace {

std::string fmt6(double v) {
    if (v == 0.0) v = 0.0;  // canonical zero, no "-0.000000"
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

constexpr double kScale = 60.0;   // px per unit
constexpr double kMargin = 40.0;  // px

struct Frame {
    const ViewRect& view;
    double x(double beta) const { return kMargin + (beta - view.beta_min) * kScale; }
    double y(double alpha) const { return kMargin + (view.alpha_max - alpha) * kScale; }
};

}  // namespace

std::string render_svg(const std::vector<WallLocus>& walls, const HyperbolaLocus& h,
                       const ViewRect& view, int samples) {
    if (!(view.beta_min < view.beta_max) || !(view.alpha_min < view.alpha_max))
        throw std::domain_error("render_svg: empty view rectangle");
    if (samples < 2) throw std::domain_error("render_svg: samples must be >= 2");

    const Frame f{view};
    const double width = 2 * kMargin + (view.beta_max - view.beta_min) * kScale;
    const double height = 2 * kMargin + (view.alpha_max - view.alpha_min) * kScale;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt6(width) << "\" height=\""
        << fmt6(height) << "\" viewBox=\"0 0 " << fmt6(width) << " " << fmt6(height) << "\">\n";

    // axes
    if (view.alpha_min <= 0.0 && 0.0 <= view.alpha_max)
        svg << "  <line x1=\"" << fmt6(f.x(view.beta_min)) << "\" y1=\"" << fmt6(f.y(0.0))
            << "\" x2=\"" << fmt6(f.x(view.beta_max)) << "\" y2=\"" << fmt6(f.y(0.0))
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (view.beta_min <= 0.0 && 0.0 <= view.beta_max)
        svg << "  <line x1=\"" << fmt6(f.x(0.0)) << "\" y1=\"" << fmt6(f.y(view.alpha_min))
            << "\" x2=\"" << fmt6(f.x(0.0)) << "\" y2=\"" << fmt6(f.y(view.alpha_max))
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "  <text x=\"" << fmt6(f.x(view.beta_max) - 14.0) << "\" y=\"" << fmt6(f.y(0.0) - 6.0)
        << "\" font-size=\"12\">beta</text>\n";
    svg << "  <text x=\"" << fmt6(f.x(0.0) + 6.0) << "\" y=\"" << fmt6(f.y(view.alpha_max) + 12.0)
        << "\" font-size=\"12\">alpha</text>\n";

    // hyperbola branch: for a != 0, beta(alpha) = (ch1 - sqrt(D + ch0^2 alpha^2)) / ch0
    // with D = ch1^2 - 2 ch0 ch2 and (a, b, c) = (ch0, -2 ch1, 2 ch2);
    // for a = 0, b != 0 the locus is the vertical line beta = -c/b.
    const double a = h.a.get_d();
    const double b = h.b.get_d();
    const double c = h.c.get_d();
    if (a != 0.0 || b != 0.0) {
        svg << "  <polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\" points=\"";
        const double alpha_lo = std::max(view.alpha_min, 0.0);
        for (int i = 0; i < samples; ++i) {
            const double alpha = alpha_lo + (view.alpha_max - alpha_lo) * i / (samples - 1);
            double beta;
            if (a != 0.0) {
                const double disc = b * b - 4.0 * a * (c - a * alpha * alpha);
                beta = (-b - std::sqrt(std::max(disc, 0.0))) / (2.0 * a);
            } else {
                beta = -c / b;
            }
            if (i) svg << " ";
            svg << fmt6(f.x(beta)) << "," << fmt6(f.y(alpha));
        }
        svg << "\"/>\n";
    }

    // semicircles, smallest first
    std::vector<WallLocus> circles;
    for (const WallLocus& w : walls)
        if (w.kind == WallKind::Circle) circles.push_back(w);
    std::sort(circles.begin(), circles.end(), [](const WallLocus& x, const WallLocus& y) {
        if (x.radius_sq != y.radius_sq) return x.radius_sq < y.radius_sq;
        return x.center < y.center;
    });
    for (const WallLocus& w : circles) {
        const double z = w.center.get_d();
        const double r = std::sqrt(w.radius_sq.get_d());
        // left base point -> right base point over the top; y points down on
        // screen, so the upper half is the sweep-1 arc
        svg << "  <path fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" d=\"M "
            << fmt6(f.x(z - r)) << " " << fmt6(f.y(0.0)) << " A " << fmt6(r * kScale) << " "
            << fmt6(r * kScale) << " 0 0 1 " << fmt6(f.x(z + r)) << " " << fmt6(f.y(0.0))
            << "\"/>\n";
        svg << "  <text x=\"" << fmt6(f.x(z) + 3.0) << "\" y=\"" << fmt6(f.y(r) - 5.0)
            << "\" font-size=\"10\">(" << rat_str(w.center) << ", " << rat_str(w.radius_sq)
            << ")</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace wallscope
