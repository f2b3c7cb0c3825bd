#include "wallscope/destab.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "wallscope/stability.hpp"

namespace wallscope {

std::string FactorKind::text() const {
    std::ostringstream os;
    switch (type) {
        case FactorType::LineBundle: os << "LineBundle(" << n << ")"; break;
        case FactorType::IdealOfPointsTwist: os << "IdealOfPointsTwist(" << length << ")"; break;
        case FactorType::IdealOfCurveTwist:
            os << "IdealOfCurveTwist(" << degree << "," << length << ")";
            break;
        case FactorType::PlaneSheaf: os << "PlaneSheaf(" << n << ")"; break;
        case FactorType::PlanePointsSheaf:
            os << "PlanePointsSheaf(" << -n << "," << length << ")";
            break;
        case FactorType::QuadricSheaf: os << "QuadricSheaf(" << n << ")"; break;
        case FactorType::QuadricPointsSheaf:
            os << "QuadricPointsSheaf(" << n << "," << length << ")";
            break;
    }
    return os.str();
}

EnumBounds EnumBounds::defaults_for(const Char3& v) {
    EnumBounds b;
    b.delta_cap = bg_discriminant(v);
    return b;
}

namespace {

// A factor shape fixes the whole ch3 ladder of the factor: ch3 = top - length
// for integer length >= 0.
struct FactorShape {
    FactorType type;
    long n = 0;
    long degree = 0;
    Rat top;  // ch3 at length 0
};

// Rank-1 factors. On a wall crossing an integral vertical line beta = c - 1,
// the twisted character has ch1^beta = 1 and ch2^beta = (1 - Delta)/2; tilt
// semistability forces ch2^beta = 1/2 - D with D in {0, 1, 2}:
//   D = 0: I_Z(c),          ch3 = c^3/6 - |Z|
//   D = 1, 2: I_{C_D}(c) for a rational degree-D curve plus points,
//             ch3 = c^3/6 - cD + 2D - 1 - #points.
std::optional<FactorShape> classify_rank1(const Rat& c1, const Rat& c2) {
    if (!is_integer(c1)) return std::nullopt;
    const Rat delta = c1 * c1 - 2 * c2;
    if (delta < 0 || delta > 4 || !is_integer(delta) || !is_integer(Rat(delta / 2)))
        return std::nullopt;
    const long c = to_long(c1);
    const long D = to_long(Rat(delta / 2));
    FactorShape s;
    s.n = c;
    s.degree = D;
    const Rat c3 = Rat(c) * Rat(c) * Rat(c) / 6;
    if (D == 0) {
        s.type = FactorType::IdealOfPointsTwist;  // LineBundle at length 0
        s.top = c3;
    } else {
        s.type = FactorType::IdealOfCurveTwist;
        s.top = c3 - Rat(c) * D + 2 * D - 1;
    }
    return s;
}

// Rank-0 factors.
//   ch1 = 1: plane-supported, ch2 = -i - 1/2 for an integer i; the stable
//   objects are iota_P*(I_Z)^dual(-i) with ch3 = 1/6 + (i/2)(i+1) - |Z|.
//   ch1 = 2: quadric-supported, ch2 = 2n - 2 for an integer n; O_Q(n) has
//   ch3 = n^2 - 2n + 4/3 and points can only lower it.
std::optional<FactorShape> classify_rank0(const Rat& c1, const Rat& c2) {
    FactorShape s;
    if (c1 == 1) {
        const Rat i = -c2 - Rat(1, 2);
        if (!is_integer(i)) return std::nullopt;
        const long ii = to_long(i);
        s.type = FactorType::PlanePointsSheaf;  // PlaneSheaf at length 0
        s.n = -ii;
        s.top = Rat(1, 6) + Rat(ii) * (ii + 1) / 2;
        return s;
    }
    if (c1 == 2) {
        const Rat n = c2 / 2 + 1;
        if (!is_integer(n)) return std::nullopt;
        const long nn = to_long(n);
        s.type = FactorType::QuadricPointsSheaf;
        s.n = nn;
        s.top = Rat(nn) * nn - 2 * nn + Rat(4, 3);
        return s;
    }
    return std::nullopt;
}

std::optional<FactorShape> classify(const Rat& rank, const Rat& c1, const Rat& c2) {
    if (rank == 1) return classify_rank1(c1, c2);
    if (rank == 0) return classify_rank0(c1, c2);
    return std::nullopt;
}

FactorKind kind_at_length(const FactorShape& s, long length) {
    FactorKind k{s.type, s.n, s.degree, length};
    if (length == 0) {
        if (s.type == FactorType::IdealOfPointsTwist) k.type = FactorType::LineBundle;
        if (s.type == FactorType::PlanePointsSheaf) k.type = FactorType::PlaneSheaf;
        if (s.type == FactorType::QuadricPointsSheaf) k.type = FactorType::QuadricSheaf;
    }
    return k;
}

// Quadratic with rational coefficients, for the ch1 scan bound.
struct Poly2 {
    Rat a2, a1, a0;

    Poly2 operator-(const Poly2& o) const { return {a2 - o.a2, a1 - o.a1, a0 - o.a0}; }
};

// d-window [lo, hi] from 0 <= gamma^2 - 2 rho delta <= cap, as polynomials in
// the scanned ch1 value; gamma = g1 * x + g0, delta the side's ch2.
struct Window {
    Poly2 lo, hi;
};

Window delta_window(long rho, const Rat& g1, const Rat& g0, const Rat& cap) {
    // 2 rho delta in [gamma^2 - cap, gamma^2]
    const Poly2 gamma_sq{g1 * g1, 2 * g1 * g0, g0 * g0};
    const Rat den = rat(2 * rho);
    const Poly2 upper{gamma_sq.a2 / den, gamma_sq.a1 / den, gamma_sq.a0 / den};
    const Poly2 lower{gamma_sq.a2 / den, gamma_sq.a1 / den, (gamma_sq.a0 - cap) / den};
    if (rho > 0) return {lower, upper};
    return {upper, lower};
}

// Cauchy-style bound: roots of a monic-normalized quadratic with a2 > 0 lie
// in [-M, M], M = 1 + max(|a1|, |a0|) / a2.
long scan_bound(const Poly2& m) {
    const Rat bound = 1 + std::max(Rat(abs(m.a1)), Rat(abs(m.a0))) / m.a2;
    mpz_class z;
    mpz_cdiv_q(z.get_mpz_t(), Rat(bound).get_num().get_mpz_t(), Rat(bound).get_den().get_mpz_t());
    return z.get_si();
}

Rat half_ceil(const Rat& x) {  // smallest element of (1/2)Z that is >= x
    mpz_class z;
    const Rat twox = 2 * x;
    mpz_cdiv_q(z.get_mpz_t(), twox.get_num().get_mpz_t(), twox.get_den().get_mpz_t());
    return Rat(z) / 2;
}

bool pair_lex_less(const DestabPair& p, const DestabPair& q) {
    if (p.wall.radius_sq != q.wall.radius_sq) return p.wall.radius_sq < q.wall.radius_sq;
    if (p.sub.ch0 != q.sub.ch0) return p.sub.ch0 < q.sub.ch0;
    if (p.sub.ch1 != q.sub.ch1) return p.sub.ch1 < q.sub.ch1;
    if (p.sub.ch2 != q.sub.ch2) return p.sub.ch2 < q.sub.ch2;
    return p.sub.ch3 > q.sub.ch3;  // point length ascending
}

}  // namespace

std::vector<WallCandidate> truncated_wall_candidates(const Char3& v, const EnumBounds& b) {
    if (v.ch0 != 1)
        throw unsupported_regime("truncated_wall_candidates: only rank-1 classes are supported");
    if (!lattice_valid(v))
        throw unsupported_regime("truncated_wall_candidates: class must lie on the sheaf lattice");
    const Rat cap = b.delta_cap;
    if (cap < 0) throw std::domain_error("truncated_wall_candidates: negative delta cap");

    const long cv = to_long(v.ch1);
    std::map<std::string, WallCandidate> seen;  // canonical sub triple -> candidate

    for (int r = b.rank_min; r <= b.rank_max; ++r) {
        const int rq = 1 - r;
        if (r == 0 && rq == 0) continue;

        // ch1 scan range
        long clo, chi;
        if (r == 0) {
            // Delta(sub) = c^2 <= cap
            long m = 0;
            while (Rat(m + 1) * (m + 1) <= cap) ++m;
            clo = -m;
            chi = m;
        } else if (rq == 0) {
            long m = 0;
            while (Rat(m + 1) * (m + 1) <= cap) ++m;
            clo = cv - m;
            chi = cv + m;
        } else {
            // both windows constrain d; they separate quadratically in c
            const Window ws = delta_window(r, rat(1), rat(0), cap);
            Window wq = delta_window(rq, rat(-1), rat(cv), cap);
            // quot window is on d_v - d; flip to a window on d
            wq = {{-wq.hi.a2, -wq.hi.a1, v.ch2 - wq.hi.a0}, {-wq.lo.a2, -wq.lo.a1, v.ch2 - wq.lo.a0}};
            const Poly2 m1 = ws.lo - wq.hi;
            const Poly2 m2 = wq.lo - ws.hi;
            const Poly2& pos = (m1.a2 > 0) ? m1 : m2;
            if (pos.a2 <= 0) throw std::logic_error("truncated_wall_candidates: unbounded scan");
            const long m = scan_bound(pos);
            clo = -m;
            chi = m;
        }

        for (long c = clo; c <= chi; ++c) {
            // d-interval from both discriminant windows
            Rat lo, hi;
            bool has_lo = false, has_hi = false;
            auto tighten = [&](long rho, const Rat& gamma, const Rat& base, int sign) {
                // 0 <= gamma^2 - 2 rho delta <= cap for delta = sign*(d - base)
                if (rho == 0) return;
                const Rat w_lo = (gamma * gamma - cap) / (2 * rho);
                const Rat w_hi = gamma * gamma / Rat(2 * rho);
                Rat dlo = rho > 0 ? w_lo : w_hi;
                Rat dhi = rho > 0 ? w_hi : w_lo;
                // delta in [dlo, dhi]; d = base + sign*delta
                Rat nlo = sign > 0 ? Rat(base + dlo) : Rat(base - dhi);
                Rat nhi = sign > 0 ? Rat(base + dhi) : Rat(base - dlo);
                if (!has_lo || nlo > lo) lo = nlo, has_lo = true;
                if (!has_hi || nhi < hi) hi = nhi, has_hi = true;
            };
            tighten(r, rat(c), rat(0), 1);                    // sub: d
            tighten(rq, Rat(v.ch1 - c), v.ch2, -1);           // quot: d = v.ch2 - d_q
            if (r == 0 && Rat(c) * c > cap) continue;
            if (rq == 0 && Rat(cv - c) * (cv - c) > cap) continue;
            if (!has_lo || !has_hi || lo > hi) continue;

            for (Rat d = half_ceil(lo); d <= hi; d += Rat(1, 2)) {
                const Sub3 sub{rat(r), rat(c), d};
                const Sub3 quot{v.ch0 - sub.ch0, v.ch1 - sub.ch1, v.ch2 - sub.ch2};
                const Rat ds = sub.ch1 * sub.ch1 - 2 * sub.ch0 * sub.ch2;
                const Rat dq = quot.ch1 * quot.ch1 - 2 * quot.ch0 * quot.ch2;
                if (ds < 0 || ds > cap || dq < 0 || dq > cap) continue;
                if (!classify(sub.ch0, sub.ch1, sub.ch2)) continue;
                if (!classify(quot.ch0, quot.ch1, quot.ch2)) continue;

                const WallLocus wall =
                    numerical_wall(v, Char3{sub.ch0, sub.ch1, sub.ch2, rat(0)});
                if (wall.kind != WallKind::Circle) continue;
                if (b.beta_negative && wall.center >= 0) continue;

                // canonical representative: the rank-1 side, else lexicographic
                Sub3 rep = sub;
                if (sub.ch0 != 1) {
                    if (quot.ch0 == 1)
                        rep = quot;
                    else {
                        const Char3 s{sub.ch0, sub.ch1, sub.ch2, rat(0)};
                        const Char3 q{quot.ch0, quot.ch1, quot.ch2, rat(0)};
                        rep = lex_less(s, q) ? quot : sub;
                    }
                }
                const std::string key =
                    rat_str(rep.ch0) + "," + rat_str(rep.ch1) + "," + rat_str(rep.ch2);
                seen.emplace(key, WallCandidate{rep, wall});
            }
        }
    }

    std::vector<WallCandidate> out;
    out.reserve(seen.size());
    for (auto& [key, cand] : seen) out.push_back(cand);
    std::sort(out.begin(), out.end(), [](const WallCandidate& x, const WallCandidate& y) {
        if (x.wall.radius_sq != y.wall.radius_sq) return x.wall.radius_sq < y.wall.radius_sq;
        const Char3 a{x.sub.ch0, x.sub.ch1, x.sub.ch2, rat(0)};
        const Char3 b2{y.sub.ch0, y.sub.ch1, y.sub.ch2, rat(0)};
        return lex_less(a, b2);
    });
    return out;
}

std::vector<DestabPair> refine_ch3(const Char3& v, const WallCandidate& candidate) {
    const Sub3& s3 = candidate.sub;
    const Sub3 q3{v.ch0 - s3.ch0, v.ch1 - s3.ch1, v.ch2 - s3.ch2};
    const auto sub_shape = classify(s3.ch0, s3.ch1, s3.ch2);
    const auto quot_shape = classify(q3.ch0, q3.ch1, q3.ch2);
    if (!sub_shape || !quot_shape)
        throw std::domain_error("refine_ch3: candidate sides carry no recognized factor shape");

    std::vector<DestabPair> out;
    // lengths trade off one-for-one: l_sub + l_quot = top_sub + top_quot - ch3(v)
    const Rat total = sub_shape->top + quot_shape->top - v.ch3;
    if (total < 0 || !is_integer(total)) return out;
    const long budget = to_long(total);

    const Apex apex = wall_apex(candidate.wall);
    for (long ls = 0; ls <= budget; ++ls) {
        const long lq = budget - ls;
        const Char3 sub{s3.ch0, s3.ch1, s3.ch2, sub_shape->top - ls};
        const Char3 quot = v - sub;
        // factors are semistable along the whole wall, so the
        // Bogomolov-Gieseker-type quadratic must be non-negative at its apex
        if (bmt_quantity_alpha_sq(sub, apex.alpha_sq, apex.beta) < 0) continue;
        if (bmt_quantity_alpha_sq(quot, apex.alpha_sq, apex.beta) < 0) continue;

        DestabPair pair;
        pair.sub = sub;
        pair.quot = quot;
        pair.wall = candidate.wall;
        pair.sub_kind = kind_at_length(*sub_shape, ls);
        pair.quot_kind = kind_at_length(*quot_shape, lq);
        // a rank-1 point factor only survives to the right of Im Z = 0 when
        // it is a pure line bundle; curve factors always have a section model
        const bool right_side = sub_shape->degree > 0 || ls == 0;
        pair.side_note = right_side ? "left+right" : "left";
        out.push_back(std::move(pair));
    }
    std::sort(out.begin(), out.end(), pair_lex_less);
    return out;
}

std::vector<DestabPair> enumerate_destab_pairs(const Char3& v, const EnumBounds& b) {
    std::vector<DestabPair> out;
    for (const WallCandidate& cand : truncated_wall_candidates(v, b)) {
        std::vector<DestabPair> pairs = refine_ch3(v, cand);
        out.insert(out.end(), pairs.begin(), pairs.end());
    }
    std::sort(out.begin(), out.end(), pair_lex_less);
    return out;
}

std::vector<DestabPair> enumerate_destab_pairs(const Char3& v) {
    return enumerate_destab_pairs(v, EnumBounds::defaults_for(v));
}

std::vector<DtptSplitting> dtpt_splittings(const Char3& v) {
    if (v.ch0 != 1 || v.ch1 != 0)
        throw unsupported_regime("dtpt_splittings: expects a rank-1 class with ch1 = 0");
    if (!is_integer(v.ch2) || v.ch2 >= 0 || !is_integer(v.ch3))
        throw unsupported_regime("dtpt_splittings: expects an ideal-sheaf-shaped class");
    const HilbertPolynomial hp = hilbert_polynomial(v);
    const long gmax = genus_bound(hp.d, true);
    std::vector<DtptSplitting> out;
    for (long i = 1; i + hp.g <= gmax; ++i)
        out.push_back({Char3{v.ch0, v.ch1, v.ch2, v.ch3 + i}, i});
    return out;
}

long genus_bound(long d, bool planar_allowed) {
    if (planar_allowed) {
        if (d < 1) throw std::domain_error("genus_bound: degree must be positive");
        return (d - 1) * (d - 2) / 2;
    }
    if (d < 3) throw std::domain_error("genus_bound: non-planar bound needs degree >= 3");
    return (d - 2) * (d - 3) / 2;
}

}  // namespace wallscope
