#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wallscope/chern.hpp"
#include "wallscope/walls.hpp"

namespace wallscope {

struct unsupported_regime : std::domain_error {
    using std::domain_error::domain_error;
};

// Factor shapes recognized on walls of a rank-1 class: twisted ideals of
// points or of a rational curve of degree <= 2 (rank 1), plane-supported
// point sheaves (rank 0, ch1 = 1), quadric-supported sheaves (rank 0,
// ch1 = 2). Splittings whose sides fit no shape are discarded.
enum class FactorType {
    LineBundle,          // O(n)
    IdealOfPointsTwist,  // I_Z(n), |Z| = length
    IdealOfCurveTwist,   // I_{C_D + points}(n), C_D rational of degree D
    PlaneSheaf,          // O_P(n)
    PlanePointsSheaf,    // iota_P* (I_Z)^dual (-i), |Z| = length
    QuadricSheaf,        // O_Q(n)
    QuadricPointsSheaf,  // O_Q(n) lowered by `length` points
};

struct FactorKind {
    FactorType type;
    long n = 0;       // line-bundle twist (for PlanePointsSheaf, n = -i)
    long degree = 0;  // curve degree D (IdealOfCurveTwist only)
    long length = 0;  // point length (k, l, l', quadric deficit)

    // Annotation text: LineBundle(n), IdealOfPointsTwist(k),
    // IdealOfCurveTwist(D,l), PlaneSheaf(n), PlanePointsSheaf(i,l'),
    // QuadricSheaf(n), QuadricPointsSheaf(n,m).
    std::string text() const;
};

// One splitting v = sub + quot at a numerical wall, with factor shapes and
// the side(s) of the Im Z = 0 hyperbola where the pair occurs.
struct DestabPair {
    Char3 sub, quot;
    WallLocus wall;
    FactorKind sub_kind, quot_kind;
    std::string side_note;  // "left" or "left+right"
};

struct EnumBounds {
    int rank_min = 0;
    int rank_max = 1;
    Rat delta_cap;               // 0 <= Delta(sub), Delta(quot) <= delta_cap
    bool beta_negative = true;   // restrict to circles with center < 0

    static EnumBounds defaults_for(const Char3& v);
};

// First three entries of a candidate subobject.
struct Sub3 {
    Rat ch0, ch1, ch2;

    friend bool operator==(const Sub3&, const Sub3&) = default;
};

struct WallCandidate {
    Sub3 sub;  // canonical representative: the rank-1 side
    WallLocus wall;
};

// Scans (rank, ch1, ch2) triples within the bounds, keeps splittings where
// both sides have a recognized factor shape and the shared-slope locus is a
// genuine semicircle in the requested region, dedups sub against quotient
// (preferring the rank-1 side), and sorts by radius.
// Accepts only v with ch0 = 1 on the sheaf lattice.
std::vector<WallCandidate> truncated_wall_candidates(const Char3& v, const EnumBounds& b);

// Enumerates ch3 over the factor-shape lattice: each side's top ch3 value is
// fixed by its shape, point lengths march down from it, and a pair is kept
// exactly when both lengths are non-negative integers and both full
// characters satisfy the Bogomolov-Gieseker-type quadratic inequality at the
// wall apex.
std::vector<DestabPair> refine_ch3(const Char3& v, const WallCandidate& candidate);

std::vector<DestabPair> enumerate_destab_pairs(const Char3& v, const EnumBounds& b);
std::vector<DestabPair> enumerate_destab_pairs(const Char3& v);

struct DtptSplitting {
    Char3 ideal;          // (1, 0, -d, e + i)
    long torsion_length;  // i
};

// Splittings of an ideal-sheaf class across the Im Z = 0 wall: ideal of a
// deeper curve of the same degree plus torsion of length i, for
// 1 <= i <= g_max(d) - g(v).
std::vector<DtptSplitting> dtpt_splittings(const Char3& v);

// Maximal arithmetic genus of a degree-d curve in P^3. Planar allowed:
// (d-1)(d-2)/2; otherwise (d-2)(d-3)/2 (requires d >= 3).
long genus_bound(long d, bool planar_allowed);

}  // namespace wallscope
