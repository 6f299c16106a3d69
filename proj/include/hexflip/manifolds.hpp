#pragma once

#include <optional>
#include <vector>

#include "hexflip/conjugacy.hpp"

namespace hexflip {

// One 2-cell of the swept part of the torus-bundle spine.  Flips are numbered
// 1..c along the geodesic W0 -> A W0; flip 1 is absorbed into the fiber, so
// interior flips are 2..c and index 0 stands for the fiber itself.
struct SweptCell {
    int birth_flip = 0;
    int death_flip = 0;
    std::optional<Int> boundary_length; // exact length 2k-2 for interior cells
    Int boundary_at_least = 4;          // verified lower bound otherwise
    bool touches_fiber = false;

    bool operator==(const SweptCell& o) const {
        return birth_flip == o.birth_flip && death_flip == o.death_flip &&
               boundary_length == o.boundary_length &&
               boundary_at_least == o.boundary_at_least &&
               touches_fiber == o.touches_fiber;
    }
};

// Combinatorial census of the pseudominimal spine of a torus bundle with
// minimal monodromy matrix A, c(A) > 0: c+5 vertices, 2(c+5) edges, c+6
// cells of which four are fiber pentagons and c+2 are swept by theta-curve
// edges.
struct SpineCensus {
    Int n_vertices, n_edges, n_cells;
    int fiber_pentagons = 4;
    std::vector<SweptCell> swept_cells;
    bool pseudominimal = false;

    int fiber_adjacent_count() const {
        int n = 0;
        for (const auto& c : swept_cells) n += c.touches_fiber ? 1 : 0;
        return n;
    }
    int through_cell_count() const { // cells touching the fiber on both sides
        int n = 0;
        for (const auto& c : swept_cells)
            n += (c.birth_flip == 0 && c.death_flip == 0) ? 1 : 0;
        return n;
    }

    bool operator==(const SpineCensus& o) const {
        return n_vertices == o.n_vertices && n_edges == o.n_edges &&
               n_cells == o.n_cells && fiber_pentagons == o.fiber_pentagons &&
               swept_cells == o.swept_cells && pseudominimal == o.pseudominimal;
    }
};

SpineCensus spine_census(const Mat& a_minimal);

struct Homology {
    Int betti;
    std::vector<Int> torsion;

    bool operator==(const Homology& o) const {
        return betti == o.betti && torsion == o.torsion;
    }
};

// H_1 of the torus bundle: Z plus the cokernel of A - I.
Homology first_homology(const Mat& a);

struct TorusBundleReport {
    Mat input_matrix;
    OperatorClass operator_class;
    Int c_matrix;
    Int c_operator;
    Mat minimal_matrix;
    Int conjectured_complexity; // max(6, c_operator + 5)
    std::string upper_bound_source; // "swept_spine" or "flat_spine"
    Homology homology;
    Int lower_bound_homology;
    std::optional<SpineCensus> census; // attached when c_operator > 0
    std::string flat_structure;        // c_operator = 0 only
    std::string homeo_key;
};

TorusBundleReport torus_bundle_report(const Mat& a);

// Canonical key of the GL(2,Z) conjugacy orbit {A, A^-1} that classifies the
// bundle up to homeomorphism.
std::string bundle_homeo_key(const Mat& a);
bool bundles_homeomorphic(const Mat& a, const Mat& b);

// Least representative of the homeomorphism orbit of q: {q, p-q, q^-1, p-q^-1}.
Int lens_normalize(const Int& p, const Int& q);

struct LensReport {
    Int p, q;
    Int canonical_q;
    Int euclid;
    Int conjectured_complexity; // E(p,q) - 3, clamped to 0 for p <= 3
    Mat gluing_matrix;          // [[s,p],[r,q]] with qs - pr = 1
    Int twist_distance;
    Int spine_vertices;
    bool special_small = false; // p <= 3: one of the complexity-0 spaces
};

LensReport lens_report(const Int& p, const Int& q);

// min over meridional Dehn twists n0, n1 of d(B^{n0} W0, C^{n1} A W0);
// equals E(p,q) - 1.
Int lens_twist_distance(const Int& p, const Int& q);

bool lens_homeomorphic(const Int& p, const Int& q, const Int& p2, const Int& q2);

} // namespace hexflip
