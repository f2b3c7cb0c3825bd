#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "wallscope/destab.hpp"
#include "wallscope/ledger.hpp"

using namespace wallscope;

TEST_SUITE("ledger") {

TEST_CASE("base space dimensions") {
    CHECK(BaseSpace::simple(BaseKind::Gr24).dim() == 4);
    CHECK(BaseSpace::simple(BaseKind::DualP3).dim() == 3);
    CHECK(BaseSpace::simple(BaseKind::QuadricsP9).dim() == 9);
    CHECK(BaseSpace::simple(BaseKind::UnivLine).dim() == 5);
    CHECK(BaseSpace::simple(BaseKind::UnivLineFiber2).dim() == 6);
    CHECK(BaseSpace::simple(BaseKind::Flag, 2).dim() == 7);
    CHECK(BaseSpace::simple(BaseKind::Flag, 6).dim() == 15);
    CHECK(BaseSpace::simple(BaseKind::HilbConics).dim() == 8);
    CHECK(BaseSpace::simple(BaseKind::PlaneQuintics).dim() == 20);
    CHECK(BaseSpace::simple(BaseKind::PlaneSextics).dim() == 27);
    CHECK(BaseSpace::simple(BaseKind::PointsP3, 4).dim() == 12);
    CHECK(BaseSpace::product({BaseSpace::simple(BaseKind::Gr24),
                              BaseSpace::simple(BaseKind::Flag, 2)})
              .dim() == 11);
}

TEST_CASE("derived base dimensions agree with the pairing and the tables") {
    // conics in P^3: 1 - chi(I_C2, I_C2)
    const Char3 conic = ideal_sheaf_char(2, 0);
    CHECK(BaseSpace::simple(BaseKind::HilbConics).dim() == 1 - euler_pairing(conic, conic));
    // six points in a plane: the pink wall BB entry
    long pink_bb = -1;
    for (const ExtTableEntry& e : curated_ext_table(WallId::Pink))
        if (e.direction == ExtDirection::BB) pink_bb = e.dim;
    CHECK(BaseSpace::simple(BaseKind::Flag, 6).dim() == pink_bb);
    // linear systems of plane curves
    CHECK(BaseSpace::simple(BaseKind::PlaneQuintics).dim() == binom(5 + 2, 2) - 1);
    CHECK(BaseSpace::simple(BaseKind::PlaneSextics).dim() == binom(6 + 2, 2) - 1);
}

TEST_CASE("stratum_dim") {
    CHECK(stratum_dim(18, BaseSpace::product({BaseSpace::simple(BaseKind::Gr24),
                                              BaseSpace::simple(BaseKind::Flag, 2)})) == 28);
    CHECK(stratum_dim(22, BaseSpace::simple(BaseKind::Flag, 6)) == 36);
    CHECK(stratum_dim(1, BaseSpace::product({})) == 0);
    CHECK(stratum_dim(0, BaseSpace::simple(BaseKind::Gr24)) == kEmptyStratum);
    CHECK_THROWS_AS(stratum_dim(-1, BaseSpace::product({})), std::domain_error);
}

TEST_CASE("pt component table") {
    const auto table = pt_component_table();
    REQUIRE(table.size() == 8);

    std::multiset<long> dims;
    for (const ComponentRecord& r : table) {
        CHECK(r.side == Side::PT);
        CHECK(r.fiber_dim >= 0);
        CHECK(r.total_dim == r.fiber_dim + r.base.dim());
        CHECK(r.provenance == Provenance::stated);
        dims.insert(r.total_dim);
    }
    CHECK(dims == std::multiset<long>{24, 28, 28, 28, 28, 28, 28, 36});
    CHECK(table[0].fiber_dim == 15);
    CHECK(table[0].base.dim() == 9);
    CHECK(table[7].fiber_dim == 21);
    CHECK(table[7].base.dim() == 15);
}

TEST_CASE("pt components projectivize the curated Ext entries") {
    const auto table = pt_component_table();
    const auto links = pt_ext_correspondence();
    REQUIRE(links.size() == 7);  // every record except the first
    for (const PtExtLink& link : links) {
        REQUIRE(link.record_index < table.size());
        CHECK(table[link.record_index].fiber_dim + 1 == link.ext1);
        long curated = -1;
        for (const ExtTableEntry& e : curated_ext_table(link.wall_id))
            if (e.direction == ExtDirection::BA && e.stratum == link.stratum) curated = e.dim;
        CHECK(curated == link.ext1);
    }
}

TEST_CASE("hilb component table") {
    const auto table = hilb_component_table();
    REQUIRE(table.size() == 5);
    std::vector<long> dims;
    for (const ComponentRecord& r : table) {
        CHECK(r.side == Side::Hilb);
        dims.push_back(r.total_dim);
        if (r.fiber_dim >= 0) CHECK(r.total_dim == r.fiber_dim + r.base.dim());
    }
    CHECK(dims == std::vector<long>{24, 28, 30, 32, 48});

    CHECK(table[0].provenance == Provenance::stated);
    CHECK(table[1].provenance == Provenance::stated);
    CHECK(table[2].provenance == Provenance::stated);
    CHECK(table[3].provenance == Provenance::expected);
    CHECK(table[4].provenance == Provenance::expected);

    // stated decompositions: 30 = 4 + 3 + 20 + 3 and 48 = 3 + 27 + 18
    CHECK(table[2].base.dim() == 30);
    CHECK(table[2].base.factors.size() == 4);
    CHECK(table[4].base.dim() == 48);
    CHECK(table[4].base.factors.size() == 3);

    // exactly two records share their dimension with the stable-pairs side
    const auto pt = pt_component_table();
    long shared = 0;
    for (const ComponentRecord& r : table)
        if (std::any_of(pt.begin(), pt.end(),
                        [&](const ComponentRecord& p) { return p.total_dim == r.total_dim; }))
            ++shared;
    CHECK(shared == 2);
}

TEST_CASE("chamber sequence") {
    const auto seq = chamber_sequence();
    const std::vector<std::pair<std::string, long>> expected = {
        {"N0", 0}, {"N1", 1}, {"N2", 1}, {"N3", 2}, {"N4", 4}, {"N5", 7}, {"N6", 8}};
    CHECK(seq == expected);
}

TEST_CASE("destabilizing loci") {
    const auto loci = destab_loci_table();
    REQUIRE(loci.size() == 5);
    std::map<std::string, std::vector<long>> totals;
    for (const auto& [name, strata] : loci) {
        for (const DestabStratum& s : strata) {
            CHECK(s.total == (s.fiber_dim >= 0 ? s.fiber_dim : 0) + s.base_dim);
            totals[name].push_back(s.total);
        }
    }
    CHECK(totals["N1"] == std::vector<long>{11});
    CHECK(totals["N2"] == std::vector<long>{11, 8});
    CHECK(totals["N3"] == std::vector<long>{9, 8});
    CHECK(totals["N4"] == std::vector<long>{8, 8});
    CHECK(totals["N5"] == std::vector<long>{14, 13, 13});

    const auto& n5 = loci[4].second;
    CHECK(n5[1].fiber_dim == 1);
    CHECK(n5[1].base_dim == 12);
    CHECK(n5[2].fiber_dim == 2);
    CHECK(n5[2].base_dim == 11);
}

TEST_CASE("green-wall stratum obeys the self-ext bound") {
    // P^12-bundle over conics x planes: 23-dimensional, inside the
    // 24-dimensional first chamber
    const long stratum =
        stratum_dim(13, BaseSpace::product({BaseSpace::simple(BaseKind::HilbConics),
                                            BaseSpace::simple(BaseKind::DualP3)}));
    CHECK(stratum == 23);
    CHECK(ghs_bound_check(8, 3, 1, 13, 24));
    CHECK(stratum <= 24);
}

}  // TEST_SUITE
