#pragma once

#include <string>
#include <vector>

#include "wallscope/chern.hpp"

namespace wallscope {

// Euler pairing chi(E, F) = sum_k deg_k(ch(E)^dual . ch(F)) td_{3-k} with
// td(P^3) = (1, 2, 11/6, 1). Integral on the sublattice spanned by
// line-bundle classes.
Rat euler_pairing(const Char3& E, const Char3& F);

// max(0, -chi(B, A)). Equals dim Ext^1(B, A) exactly when Hom, Ext^2 and
// Ext^3 vanish, which holds at the generic strata of the curated tables but
// not in general (plane-supported self-Ext is the standard failure).
long expected_ext1(const Char3& B, const Char3& A);

enum class PointPosition { Generic, Collinear, OnSmoothConic };

// n points in a plane, in one of three positions.
struct PointConfig {
    long n;
    PointPosition position;

    PointConfig(long n_, PointPosition p) : n(n_), position(p) {
        if (n < 1) throw std::domain_error("PointConfig: need at least one point");
    }
};

struct PlaneCohomology {
    long h0, h1;
};

// h^0 and h^1 of the degree-d ideal of the configuration inside its plane.
// Generic: h0 = max(0, C(d+2,2) - n).
// Collinear: the line L splits off, I_Z(d) -> O(d-1) + (sections of O_L(d)
//   vanishing on Z), so h0 = C(d+1,2) + max(0, d+1-n).
// On a smooth conic C: I_Z(d) -> O(d-2) + (sections of O_{P^1}(2d) vanishing
//   on Z), so h0 = C(d,2) + max(0, 2d+1-n).
// Always h1 = h0 - (C(d+2,2) - n).
PlaneCohomology points_plane_cohomology(const PointConfig& cfg, long d);

enum class WallId { Green, Purple1, Purple2, Purple3, Pink };
enum class ExtDirection { BA, AB, AA, BB };

WallId parse_wall_id(const std::string& name);  // "green", "purple1", ...
std::string wall_id_str(WallId id);
std::string ext_direction_str(ExtDirection d);

struct ExtTableEntry {
    WallId wall_id;
    ExtDirection direction;
    std::string stratum;  // case label; "generic" rows are chi-checkable
    long dim;
};

// The stratified Ext^1 tables of the five hyperbola-adjacent walls, shipped
// as static data. Generic BA rows and all AA/BB rows on non-plane factors
// reproduce from the Euler pairing; special strata are curated.
std::vector<ExtTableEntry> curated_ext_table(WallId id);
std::vector<ExtTableEntry> full_ext_table();

// Destabilizing pair (A, B) = (sub, quot) characters for each wall.
struct WallPairChars {
    Char3 sub, quot;
};
WallPairChars wall_pair_chars(WallId id);

// ext^1(E,E) <= ext^1(F,F) + ext^1(G,G) + ext^1(F,G) + ext^1(G,F) - 1 for an
// extension E of distinct stable G by F of the same slope.
bool ghs_bound_check(long ext1FF, long ext1GG, long ext1FG, long ext1GF, long ext1EE);

}  // namespace wallscope
