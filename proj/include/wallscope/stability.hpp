#pragma once

#include <iosfwd>

#include "wallscope/chern.hpp"

namespace wallscope {

// A point (alpha, beta) of the upper half-plane plus the extra parameter s
// entering the rank-3 central charge. s only shows up in Re Z, never in the
// wall geometry, so it defaults to 1.
struct StabPoint {
    Rat alpha;
    Rat beta;
    Rat s;

    StabPoint(Rat a, Rat b, Rat s_ = rat(1)) : alpha(std::move(a)), beta(std::move(b)), s(std::move(s_)) {
        if (alpha <= 0) throw std::domain_error("StabPoint: alpha must be positive");
        if (s <= 0) throw std::domain_error("StabPoint: s must be positive");
    }
};

struct ChargeValue {
    Rat re, im;

    friend bool operator==(const ChargeValue&, const ChargeValue&) = default;
};

// A slope value in Q union {+inf}; +inf is a value, not an error.
struct Slope {
    bool finite;
    Rat value;  // meaningful only when finite

    static Slope inf() { return {false, rat(0)}; }
    static Slope of(Rat v) { return {true, std::move(v)}; }

    friend bool operator==(const Slope& x, const Slope& y) {
        if (x.finite != y.finite) return false;
        return !x.finite || x.value == y.value;
    }
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

// Z^tilt = -ch2^b + (alpha^2/2) ch0 + i ch1^b   (ch0^b = ch0)
ChargeValue tilt_charge(const Char3& c, const StabPoint& p);

// nu = (ch2^b - (alpha^2/2) ch0) / ch1^b, +inf when ch1^b = 0.
Slope tilt_slope(const Char3& c, const StabPoint& p);

// Z = -ch3^b + (s + 1/6) alpha^2 ch1^b + i (ch2^b - (alpha^2/2) ch0)
ChargeValue bridgeland_charge(const Char3& c, const StabPoint& p);

// lambda = -Re Z / Im Z, +inf when Im Z = 0.
Slope bridgeland_slope(const Char3& c, const StabPoint& p);

// Bogomolov-Gieseker discriminant ch1^2 - 2 ch0 ch2; twist-invariant and
// non-negative on tilt-semistable classes.
Rat bg_discriminant(const Char3& c);

// alpha^2 [ (ch1^b)^2 - 2 ch0^b ch2^b ] + 4 (ch2^b)^2 - 6 ch1^b ch3^b,
// evaluated exactly; >= 0 on tilt-semistable classes. Callers pass
// alpha^2 through p.alpha.
Rat bmt_quantity(const Char3& c, const StabPoint& p);

// Same quantity with alpha^2 supplied directly, so wall apexes
// (beta = center, alpha^2 = radius^2) stay rational.
Rat bmt_quantity_alpha_sq(const Char3& c, const Rat& alpha_sq, const Rat& beta);

}  // namespace wallscope
