#pragma once

#include <string>
#include <vector>

#include "wallscope/homalg.hpp"

namespace wallscope {

enum class BaseKind {
    Gr24,            // lines in P^3
    DualP3,          // planes in P^3
    QuadricsP9,      // |O(2)|
    UnivLine,        // universal line over Gr(2,4)
    UnivLineFiber2,  // universal line squared over Gr(2,4)
    Flag,            // flags (length-l points in a plane), dim 3 + 2l
    HilbConics,      // conics in P^3
    PlaneQuintics,   // |O_{P^2}(5)|
    PlaneSextics,    // |O_{P^2}(6)|
    PointsP3,        // k points in P^3, dim 3k
    Product,
};

struct BaseSpace {
    BaseKind kind = BaseKind::Product;
    long param = 0;  // l for Flag, k for PointsP3
    std::vector<BaseSpace> factors;

    long dim() const;
    std::string name() const;

    static BaseSpace simple(BaseKind k, long param = 0);
    static BaseSpace product(std::vector<BaseSpace> fs);
};

long base_space_dim(const BaseSpace& b);

enum class Side { PT, Hilb };
enum class Provenance { stated, expected };

struct ComponentRecord {
    std::string name;
    long fiber_dim;   // P^fiber_dim bundle; -1 when no bundle structure is recorded
    BaseSpace base;   // for fiber_dim = -1, a product decomposition when known
    long total_dim;
    Side side;
    std::string description;
    Provenance provenance;
};

// Marker for a projectivized extension space over an empty Ext^1.
inline constexpr long kEmptyStratum = -1000000;

// (ext1_dim - 1) + dim(base); ext1_dim = 0 gives kEmptyStratum.
long stratum_dim(long ext1_dim, const BaseSpace& base);

// The eight irreducible components of the stable-pairs space for the class
// (0,0,6,-15): dims {24, 28 x6, 36}.
std::vector<ComponentRecord> pt_component_table();

// The five known components of the Hilbert scheme of 6t-3 curves:
// 24, 28, 30 stated; 32 and 48 expected.
std::vector<ComponentRecord> hilb_component_table();

// Moduli component counts along the chamber path N_0 .. N_6.
std::vector<std::pair<std::string, long>> chamber_sequence();

struct DestabStratum {
    long fiber_dim;  // -1 when the stratum is not a bundle
    long base_dim;
    long total;
    std::string description;
};

// Destabilized loci inside each chamber's moduli space.
std::vector<std::pair<std::string, std::vector<DestabStratum>>> destab_loci_table();

// Which curated Ext^1 entry each bundle component projectivizes:
// fiber_dim + 1 == dim Ext^1(B, A) at the named stratum.
struct PtExtLink {
    std::size_t record_index;  // into pt_component_table()
    WallId wall_id;
    std::string stratum;
    long ext1;
};
std::vector<PtExtLink> pt_ext_correspondence();

}  // namespace wallscope
