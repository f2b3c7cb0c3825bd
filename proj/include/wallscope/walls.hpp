#pragma once

#include <string>
#include <vector>

#include "wallscope/chern.hpp"

namespace wallscope {

enum class WallKind { Circle, VerticalLine, Degenerate };
enum class DegenerateReason { ProportionalClasses, EmptyLocus };

// A numerical wall in the (beta, alpha) upper half-plane. Circles are stored
// as (center on the beta axis, radius squared) so everything stays rational.
struct WallLocus {
    WallKind kind = WallKind::Degenerate;
    Rat center;     // Circle
    Rat radius_sq;  // Circle
    Rat beta;       // VerticalLine
    DegenerateReason reason = DegenerateReason::ProportionalClasses;

    static WallLocus circle(Rat center, Rat radius_sq);
    static WallLocus vertical_line(Rat beta);
    static WallLocus degenerate(DegenerateReason r);

    friend bool operator==(const WallLocus&, const WallLocus&) = default;
};

std::ostream& operator<<(std::ostream& os, const WallLocus& w);

// Im Z = 0 as an implicit quadratic
//   q(beta, alpha) = a beta^2 + b beta + c - a alpha^2,
// with q = 2 (ch2 - beta ch1 + (beta^2/2) ch0 - (alpha^2/2) ch0),
// so a = ch0, b = -2 ch1, c = 2 ch2.
struct HyperbolaLocus {
    Rat a, b, c;

    Rat eval(const Rat& beta, const Rat& alpha_sq) const {
        return a * beta * beta + b * beta + c - a * alpha_sq;
    }
};

// Locus where the two classes share tilt slope.
//
// With (r, c, d) the first three entries of each class, cross-multiplying
// nu(v) = nu(w) and collecting terms gives
//   (beta^2 + alpha^2)/2 (c_v r_w - c_w r_v)
//     - beta (d_v r_w - d_w r_v) + (d_v c_w - d_w c_v) = 0.
// Nonzero quadratic coefficient: a circle centered on the beta axis.
// Zero quadratic coefficient, nonzero linear one: a vertical line.
// All zero: the classes are proportional in (r, c, d).
WallLocus numerical_wall(const Char3& v, const Char3& w);

HyperbolaLocus hyperbola_locus(const Char3& v);

struct Apex {
    Rat beta;      // = center
    Rat alpha_sq;  // = radius^2
};

// Top of a semicircular wall, kept as (beta, alpha^2). Non-circles are a
// domain error.
Apex wall_apex(const WallLocus& w);

// Substitutes the apex into q and tests exact vanishing.
bool apex_on_locus(const WallLocus& w, const HyperbolaLocus& h);

struct NestingReport {
    std::vector<WallLocus> sorted;  // ascending radius_sq, ties by center
    bool nested = true;
    std::vector<std::string> violations;
};

// All inputs must be circles. Containment of circle (z1, R1) in (z2, R2)
// with R1 <= R2 means |z1 - z2| <= r2 - r1; squared twice this becomes
// S >= 0 and S^2 >= 4 R1 R2 for S = R1 + R2 - (z1 - z2)^2, keeping the
// test inside Q.
NestingReport sort_and_check_nesting(std::vector<WallLocus> walls);

struct ViewRect {
    double beta_min, beta_max;
    double alpha_min, alpha_max;
};

// Deterministic SVG: one arc path per circle (upper half), one polyline for
// the hyperbola branch with `samples` vertices, axes and labels. Numbers are
// printed with fixed 6-digit precision; this is the only floating-point
// boundary of the library.
std::string render_svg(const std::vector<WallLocus>& walls, const HyperbolaLocus& h,
                       const ViewRect& view, int samples);

}  // namespace wallscope
