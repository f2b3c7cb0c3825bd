#include "wallscope/ledger.hpp"

#include <sstream>

namespace wallscope {

BaseSpace BaseSpace::simple(BaseKind k, long param) {
    BaseSpace b;
    b.kind = k;
    b.param = param;
    return b;
}

BaseSpace BaseSpace::product(std::vector<BaseSpace> fs) {
    BaseSpace b;
    b.kind = BaseKind::Product;
    b.factors = std::move(fs);
    return b;
}

long BaseSpace::dim() const {
    switch (kind) {
        case BaseKind::Gr24: return 4;
        case BaseKind::DualP3: return 3;
        case BaseKind::QuadricsP9: return 9;
        case BaseKind::UnivLine: return 5;
        // dim U x_Gr U = 6: one more point on the line; forced by the
        // 28-dimensional total of the component sitting over it.
        case BaseKind::UnivLineFiber2: return 6;
        case BaseKind::Flag: return 3 + 2 * param;
        case BaseKind::HilbConics: return 8;
        case BaseKind::PlaneQuintics: return 20;
        case BaseKind::PlaneSextics: return 27;
        case BaseKind::PointsP3: return 3 * param;
        case BaseKind::Product: {
            long d = 0;
            for (const BaseSpace& f : factors) d += f.dim();
            return d;
        }
    }
    throw std::domain_error("BaseSpace::dim: unknown kind");
}

std::string BaseSpace::name() const {
    switch (kind) {
        case BaseKind::Gr24: return "Gr(2,4)";
        case BaseKind::DualP3: return "(P^3)*";
        case BaseKind::QuadricsP9: return "|O(2)|";
        case BaseKind::UnivLine: return "U";
        case BaseKind::UnivLineFiber2: return "U x_Gr U";
        case BaseKind::Flag: {
            std::ostringstream os;
            os << "Fl_" << param;
            return os.str();
        }
        case BaseKind::HilbConics: return "HilbConics";
        case BaseKind::PlaneQuintics: return "|O_P2(5)|";
        case BaseKind::PlaneSextics: return "|O_P2(6)|";
        case BaseKind::PointsP3: {
            std::ostringstream os;
            os << "Points(" << param << ")";
            return os.str();
        }
        case BaseKind::Product: {
            if (factors.empty()) return "pt";
            std::string s;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) s += " x ";
                s += factors[i].name();
            }
            return s;
        }
    }
    return "?";
}

long base_space_dim(const BaseSpace& b) {
    return b.dim();
}

long stratum_dim(long ext1_dim, const BaseSpace& base) {
    if (ext1_dim < 0) throw std::domain_error("stratum_dim: negative ext1 dimension");
    if (ext1_dim == 0) return kEmptyStratum;
    return (ext1_dim - 1) + base.dim();
}

namespace {

ComponentRecord bundle_record(std::string name, long fiber, BaseSpace base, Side side,
                              std::string description,
                              Provenance prov = Provenance::stated) {
    const long total = fiber + base.dim();
    return {std::move(name), fiber, std::move(base), total, side, std::move(description), prov};
}

ComponentRecord stated_record(std::string name, long total, BaseSpace base, Side side,
                              std::string description, Provenance prov) {
    return {std::move(name), -1, std::move(base), total, side, std::move(description), prov};
}

}  // namespace

std::vector<ComponentRecord> pt_component_table() {
    using BK = BaseKind;
    const auto S = [](BaseKind k, long p = 0) { return BaseSpace::simple(k, p); };
    return {
        bundle_record("PT1", 15, S(BK::QuadricsP9), Side::PT,
                      "(2,3)-complete intersections"),
        bundle_record("PT2", 17, BaseSpace::product({S(BK::Gr24), S(BK::Flag, 2)}), Side::PT,
                      "line union a plane quintic meeting it, two points on the quintic"),
        bundle_record("PT3", 18, BaseSpace::product({S(BK::UnivLine), S(BK::Flag, 1)}), Side::PT,
                      "line with a point on it, plane quintic meeting the line with a point on it"),
        bundle_record("PT4", 19, BaseSpace::product({S(BK::Gr24), S(BK::Flag, 1)}), Side::PT,
                      "disjoint union of a line and a plane quintic with a point on it"),
        bundle_record("PT5", 19, BaseSpace::product({S(BK::UnivLineFiber2), S(BK::DualP3)}),
                      Side::PT, "line with two points on it, plane quintic meeting the line"),
        bundle_record("PT6", 20, BaseSpace::product({S(BK::UnivLine), S(BK::DualP3)}), Side::PT,
                      "disjoint union of a line with a point on it and a plane quintic"),
        bundle_record("PT7", 21, S(BK::Flag, 2), Side::PT,
                      "plane quartic union a thickened line in the plane"),
        bundle_record("PT8", 21, S(BK::Flag, 6), Side::PT,
                      "plane sextic with six points on it"),
    };
}

std::vector<ComponentRecord> hilb_component_table() {
    using BK = BaseKind;
    const auto S = [](BaseKind k, long p = 0) { return BaseSpace::simple(k, p); };
    return {
        bundle_record("H_CM", 15, S(BK::QuadricsP9), Side::Hilb,
                      "(2,3)-complete intersections (main component)"),
        stated_record("H'_CM", 28, BaseSpace::product({}), Side::Hilb,
                      "plane quartic union a thickened line in the plane",
                      Provenance::stated),
        stated_record("H1", 30,
                      BaseSpace::product({S(BK::Gr24), S(BK::DualP3), S(BK::PlaneQuintics),
                                          S(BK::PointsP3, 1)}),
                      Side::Hilb,
                      "disjoint union of a line and a plane quintic plus one floating point",
                      Provenance::stated),
        stated_record("H2", 32, BaseSpace::product({}), Side::Hilb,
                      "union of a line and a plane quintic plus two floating points",
                      Provenance::expected),
        stated_record("H6", 48,
                      BaseSpace::product({S(BK::DualP3), S(BK::PlaneSextics), S(BK::PointsP3, 6)}),
                      Side::Hilb, "plane sextic plus six floating points",
                      Provenance::expected),
    };
}

std::vector<std::pair<std::string, long>> chamber_sequence() {
    return {{"N0", 0}, {"N1", 1}, {"N2", 1}, {"N3", 2}, {"N4", 4}, {"N5", 7}, {"N6", 8}};
}

std::vector<std::pair<std::string, std::vector<DestabStratum>>> destab_loci_table() {
    return {
        {"N1", {{-1, 11, 11, "planes x conics (a plane and a conic with its plane)"}}},
        {"N2",
         {{-1, 11, 11, "Gr(2,4) x Fl_2"},
          {1, 7, 8, "P^1-bundle over Fl_2"}}},
        {"N3",
         {{-1, 9, 9, "Gr(2,4) x Fl_1"},
          {1, 7, 8, "P^1-bundle over (P^2)* x Fl_1"}}},
        {"N4",
         {{-1, 8, 8, "U x (P^3)*"},
          {1, 7, 8, "P^1-bundle over Fl_2"}}},
        {"N5",
         {{-1, 14, 14, "six points on a conic"},
          {1, 12, 13, "P^1-bundle over the five-points-on-a-line locus"},
          {2, 11, 13, "P^2-bundle over the six-points-on-a-line locus"}}},
    };
}

std::vector<PtExtLink> pt_ext_correspondence() {
    return {
        {1, WallId::Purple1, "generic", 18},
        {2, WallId::Purple2, "not_in_P", 19},
        {3, WallId::Purple2, "in_P_not_Z1", 20},
        {4, WallId::Purple3, "otherwise", 20},
        {5, WallId::Purple3, "zero_contains_intersection", 21},
        {6, WallId::Purple3, "L_in_P", 22},
        {7, WallId::Pink, "generic", 22},
    };
}

}  // namespace wallscope
