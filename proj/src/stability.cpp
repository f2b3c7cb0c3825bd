#include "wallscope/stability.hpp"

#include <ostream>

namespace wallscope {

std::ostream& operator<<(std::ostream& os, const Slope& s) {
    if (!s.finite) return os << "+inf";
    return os << rat_str(s.value);
}

ChargeValue tilt_charge(const Char3& c, const StabPoint& p) {
    const Char3 t = twist(c, p.beta);
    return {-t.ch2 + p.alpha * p.alpha / 2 * c.ch0, t.ch1};
}

Slope tilt_slope(const Char3& c, const StabPoint& p) {
    const ChargeValue z = tilt_charge(c, p);
    if (z.im == 0) return Slope::inf();
    return Slope::of(-z.re / z.im);
}

ChargeValue bridgeland_charge(const Char3& c, const StabPoint& p) {
    const Char3 t = twist(c, p.beta);
    const Rat a2 = p.alpha * p.alpha;
    return {-t.ch3 + (p.s + Rat(1, 6)) * a2 * t.ch1, t.ch2 - a2 / 2 * c.ch0};
}

Slope bridgeland_slope(const Char3& c, const StabPoint& p) {
    const ChargeValue z = bridgeland_charge(c, p);
    if (z.im == 0) return Slope::inf();
    return Slope::of(-z.re / z.im);
}

Rat bg_discriminant(const Char3& c) {
    return c.ch1 * c.ch1 - 2 * c.ch0 * c.ch2;
}

Rat bmt_quantity_alpha_sq(const Char3& c, const Rat& alpha_sq, const Rat& beta) {
    const Char3 t = twist(c, beta);
    return alpha_sq * (t.ch1 * t.ch1 - 2 * t.ch0 * t.ch2) + 4 * t.ch2 * t.ch2 -
           6 * t.ch1 * t.ch3;
}

Rat bmt_quantity(const Char3& c, const StabPoint& p) {
    return bmt_quantity_alpha_sq(c, p.alpha * p.alpha, p.beta);
}

}  // namespace wallscope
