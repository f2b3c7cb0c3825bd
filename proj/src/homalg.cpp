#include "wallscope/homalg.hpp"

#include <algorithm>

namespace wallscope {

namespace {

// td(P^3) = (1, 2, 11/6, 1): from (H/(1-e^{-H}))^4 truncated at H^3, or by
// matching chi(O(n)) = C(n+3,3) on four values of n.
const Rat kTodd[4] = {Rat(1), Rat(2), Rat(11, 6), Rat(1)};

}  // namespace

Rat euler_pairing(const Char3& E, const Char3& F) {
    const Char3 p = mul3(dual3(E), F);
    return p.ch3 * kTodd[0] + p.ch2 * kTodd[1] + p.ch1 * kTodd[2] + p.ch0 * kTodd[3];
}

long expected_ext1(const Char3& B, const Char3& A) {
    const Rat chi = euler_pairing(B, A);
    if (chi >= 0) return 0;
    if (!is_integer(chi)) throw std::domain_error("expected_ext1: non-integral Euler pairing");
    return to_long(Rat(-chi));
}

PlaneCohomology points_plane_cohomology(const PointConfig& cfg, long d) {
    if (d < 0) throw std::domain_error("points_plane_cohomology: negative degree");
    long h0 = 0;
    switch (cfg.position) {
        case PointPosition::Generic:
            h0 = std::max(0L, binom(d + 2, 2) - cfg.n);
            break;
        case PointPosition::Collinear:
            h0 = binom(d + 1, 2) + std::max(0L, d + 1 - cfg.n);
            break;
        case PointPosition::OnSmoothConic:
            h0 = binom(d, 2) + std::max(0L, 2 * d + 1 - cfg.n);
            break;
    }
    const long chi = binom(d + 2, 2) - cfg.n;
    return {h0, h0 - chi};
}

WallId parse_wall_id(const std::string& name) {
    if (name == "green") return WallId::Green;
    if (name == "purple1") return WallId::Purple1;
    if (name == "purple2") return WallId::Purple2;
    if (name == "purple3") return WallId::Purple3;
    if (name == "pink") return WallId::Pink;
    throw std::domain_error("unknown wall id: '" + name + "'");
}

std::string wall_id_str(WallId id) {
    switch (id) {
        case WallId::Green: return "green";
        case WallId::Purple1: return "purple1";
        case WallId::Purple2: return "purple2";
        case WallId::Purple3: return "purple3";
        case WallId::Pink: return "pink";
    }
    return "?";
}

std::string ext_direction_str(ExtDirection d) {
    switch (d) {
        case ExtDirection::BA: return "BA";
        case ExtDirection::AB: return "AB";
        case ExtDirection::AA: return "AA";
        case ExtDirection::BB: return "BB";
    }
    return "?";
}

std::vector<ExtTableEntry> curated_ext_table(WallId id) {
    using W = WallId;
    using D = ExtDirection;
    switch (id) {
        case W::Green:
            return {
                {W::Green, D::AA, "generic", 8},
                {W::Green, D::BB, "generic", 3},
                {W::Green, D::BA, "generic", 13},
                {W::Green, D::AB, "generic", 1},
            };
        case W::Purple1:
            return {
                {W::Purple1, D::AA, "generic", 4},
                {W::Purple1, D::BB, "generic", 7},
                {W::Purple1, D::BA, "generic", 18},
                {W::Purple1, D::AB, "span_Z2_meets_L_equal", 2},
                {W::Purple1, D::AB, "span_Z2_meets_L_not_equal", 1},
                {W::Purple1, D::AB, "span_Z2_disjoint_from_L", 0},
            };
        case W::Purple2:
            return {
                {W::Purple2, D::AA, "generic", 5},
                {W::Purple2, D::BB, "generic", 5},
                {W::Purple2, D::BA, "at_Z1", 21},
                {W::Purple2, D::BA, "in_P_not_Z1", 20},
                {W::Purple2, D::BA, "not_in_P", 19},
                {W::Purple2, D::AB, "at_Z1", 2},
                {W::Purple2, D::AB, "in_P_not_Z1", 1},
                {W::Purple2, D::AB, "not_in_P", 0},
            };
        case W::Purple3:
            return {
                {W::Purple3, D::AA, "generic", 6},
                {W::Purple3, D::BB, "generic", 3},
                {W::Purple3, D::BA, "L_in_P", 22},
                {W::Purple3, D::BA, "zero_contains_intersection", 21},
                {W::Purple3, D::BA, "otherwise", 20},
                {W::Purple3, D::AB, "L_in_P", 2},
                {W::Purple3, D::AB, "zero_contains_intersection", 1},
                {W::Purple3, D::AB, "otherwise", 0},
            };
        case W::Pink:
            return {
                {W::Pink, D::AA, "generic", 0},
                {W::Pink, D::BB, "generic", 15},
                {W::Pink, D::BA, "generic", 22},
                {W::Pink, D::AB, "six_on_line", 3},
                {W::Pink, D::AB, "five_on_line", 2},
                {W::Pink, D::AB, "six_on_conic", 1},
                {W::Pink, D::AB, "generic", 0},
            };
    }
    throw std::domain_error("curated_ext_table: unknown wall id");
}

std::vector<ExtTableEntry> full_ext_table() {
    std::vector<ExtTableEntry> all;
    for (WallId id : {WallId::Green, WallId::Purple1, WallId::Purple2, WallId::Purple3, WallId::Pink}) {
        auto t = curated_ext_table(id);
        all.insert(all.end(), t.begin(), t.end());
    }
    return all;
}

WallPairChars wall_pair_chars(WallId id) {
    // A = sub, B = quot; plane factors via pushforward, rank-1 factors via
    // twisted ideal characters. A two-term section object O(-1) -> O_L(j)
    // has the character of I_{L + (j+1) points}(-1).
    const auto ideal_line_points = [](long points) {
        Char3 c = ideal_sheaf_char(1, 0) - Char3{rat(0), rat(0), rat(0), rat(points)};
        return tensor_line(c, -1);
    };
    const auto plane_dual_points = [](long length, long twist) {
        return pushforward_plane(
            tensor_line_plane(dual_plane(plane_points_ideal(length)), twist));
    };
    switch (id) {
        case WallId::Green: {
            const Char3 A = tensor_line(ideal_sheaf_char(2, 0), -1);
            const Char3 B = pushforward_plane(tensor_line_plane(plane_structure_sheaf(), -4));
            return {A, B};
        }
        case WallId::Purple1:
            return {ideal_line_points(0), plane_dual_points(2, -5)};
        case WallId::Purple2:
            return {ideal_line_points(1), plane_dual_points(1, -5)};
        case WallId::Purple3:
            return {ideal_line_points(2),
                    pushforward_plane(tensor_line_plane(plane_structure_sheaf(), -5))};
        case WallId::Pink:
            return {tensor_line(Char3{rat(1), rat(0), rat(0), rat(0)}, -1),
                    plane_dual_points(6, -6)};
    }
    throw std::domain_error("wall_pair_chars: unknown wall id");
}

bool ghs_bound_check(long ext1FF, long ext1GG, long ext1FG, long ext1GF, long ext1EE) {
    return ext1EE <= ext1FF + ext1GG + ext1FG + ext1GF - 1;
}

}  // namespace wallscope
