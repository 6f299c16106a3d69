#include "hexflip/manifolds.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "hexflip/euclid.hpp"

namespace hexflip {

SpineCensus spine_census(const Mat& a) {
    require_sl2(a, "spine_census");
    if (!is_minimal(a))
        throw NotMinimalMatrix("spine_census needs a minimal matrix; minimize first");
    FlipPath g = geodesic(Hexagon::standard(), Hexagon::standard().apply(a));
    const auto& hx = g.hexagons;
    const size_t c = g.length();
    if (c == 0)
        throw ZeroComplexity("spine_census needs c > 0; use the flat description");

    SpineCensus out;
    out.n_vertices = Int(c) + 5;
    out.n_edges = 2 * out.n_vertices;
    out.n_cells = Int(c) + 6;

    // Track vertex-pair lifetimes over the interior flips 2..c.  Every pair
    // of the hexagon after flip 1 starts a cell at the fiber; each flip kills
    // the cell of the replaced pair and opens one for the introduced pair.
    std::map<Vec, int> active; // pair -> birth flip (0 = fiber)
    for (const auto& p : hx[1].pairs()) active.emplace(p, 0);

    bool all_interior_long = true;
    for (size_t t = 2; t <= c; ++t) {
        Vec replaced, introduced;
        for (const auto& p : hx[t - 1].pairs())
            if (hx[t].index_of(p) < 0) replaced = p;
        for (const auto& p : hx[t].pairs())
            if (hx[t - 1].index_of(p) < 0) introduced = p;
        auto it = active.find(replaced);
        assert(it != active.end());

        SweptCell cell;
        cell.birth_flip = it->second;
        cell.death_flip = int(t);
        cell.touches_fiber = (cell.birth_flip == 0);
        if (!cell.touches_fiber) {
            Int k = Int(cell.death_flip - cell.birth_flip + 1);
            cell.boundary_length = 2 * k - 2;
            if (*cell.boundary_length < 4) all_interior_long = false;
        }
        out.swept_cells.push_back(cell);
        active.erase(it);
        active.emplace(introduced, int(t));
    }
    for (const auto& [pair, birth] : active) {
        SweptCell cell;
        cell.birth_flip = birth;
        cell.death_flip = 0;
        cell.touches_fiber = true;
        out.swept_cells.push_back(cell);
    }
    assert(out.swept_cells.size() == c + 2);

    // Minimality rules out a cancellation across the fiber, and a geodesic
    // never flips the pair it just introduced.
    out.pseudominimal = all_interior_long;
    return out;
}

Homology first_homology(const Mat& a) {
    require_sl2(a, "first_homology");
    Mat am1(a.a - 1, a.b, a.c, a.d - 1);
    auto [d1, d2] = smith_invariants(am1);
    Homology h;
    h.betti = 1;
    for (const Int& d : {d1, d2}) {
        if (d == 0) h.betti += 1;
        else if (d > 1) h.torsion.push_back(d);
    }
    return h;
}

namespace {

std::string flat_structure_of(const Mat& minimal) {
    if (minimal == Mat::identity()) return "three orientable annuli and three edges";
    if (-minimal == Mat::identity()) return "three nonorientable annuli and one edge";
    Int t = minimal.trace();
    if (t == 1) return "one nonorientable annulus and one edge"; // sixth-turn classes
    assert(t == -1);
    return "one orientable annulus and two edges"; // third-turn classes
}

} // namespace

TorusBundleReport torus_bundle_report(const Mat& a) {
    require_sl2(a, "torus_bundle_report");
    TorusBundleReport rep;
    rep.input_matrix = a;
    rep.operator_class = classify(a);
    rep.c_matrix = matrix_complexity(a);
    MinimizationResult mr = minimize(a);
    rep.c_operator = mr.operator_complexity;
    rep.minimal_matrix = mr.minimal;
    rep.conjectured_complexity = std::max(Int(6), Int(rep.c_operator + 5));
    rep.homology = first_homology(a);
    rep.lower_bound_homology = rep.homology.betti - 1;
    assert(rep.lower_bound_homology <= rep.conjectured_complexity);
    if (rep.c_operator > 0) {
        rep.upper_bound_source = "swept_spine";
        rep.census = spine_census(mr.minimal);
    } else {
        rep.upper_bound_source = "flat_spine";
        rep.flat_structure = flat_structure_of(mr.minimal);
    }
    rep.homeo_key = bundle_homeo_key(a);
    return rep;
}

std::string bundle_homeo_key(const Mat& a) {
    require_sl2(a, "bundle_homeo_key");
    const Mat swap(0, 1, 1, 0); // the GL(2,Z) generator beyond SL(2,Z)
    Mat ainv = a.inverse();
    std::string best;
    for (const Mat& m : {a, ainv, swap * a * swap, swap * ainv * swap}) {
        std::string key = conjugacy_class_key(m);
        if (best.empty() || key < best) best = key;
    }
    return best;
}

bool bundles_homeomorphic(const Mat& a, const Mat& b) {
    return bundle_homeo_key(a) == bundle_homeo_key(b);
}

namespace {

void require_lens(const Int& p, const Int& q, const char* who) {
    if (q < 1 || q >= p)
        throw InvalidRange(std::string(who) + " needs 0 < q < p");
    if (gcd(p, q) != 1)
        throw NotCoprime(std::string(who) + ": gcd(p,q) != 1");
}

Mat lens_gluing(const Int& p, const Int& q) {
    Int s;
    int ok = mpz_invert(s.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    assert(ok);
    (void)ok;
    Int r = (q * s - 1) / p; // r = 0 only for q = 1
    Mat glue(s, p, r, q);
    assert(glue.det() == 1);
    return glue;
}

} // namespace

Int lens_normalize(const Int& p, const Int& q) {
    require_lens(p, q, "lens_normalize");
    Int qinv;
    mpz_invert(qinv.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    Int best = q;
    for (const Int& cand : {Int(p - q), qinv, Int(p - qinv)})
        if (cand < best) best = cand;
    return best;
}

Int lens_twist_distance(const Int& p, const Int& q) {
    require_lens(p, q, "lens_twist_distance");
    Mat glue = lens_gluing(p, q);
    const Mat twist0(1, 0, 1, 1);                     // Dehn twist along mu_0
    const Mat twist1 = glue * twist0 * glue.inverse(); // Dehn twist along mu_1
    const Hexagon anchor = Hexagon::standard().apply(glue);

    // Descent suffixes from W0, interned for cheap pairwise comparisons.
    std::map<Hexagon, int> ids;
    auto suffix = [&ids](const Hexagon& h) {
        FlipPath path = descend_to_standard(h);
        std::vector<int> s;
        s.reserve(path.hexagons.size());
        for (auto it = path.hexagons.rbegin(); it != path.hexagons.rend(); ++it)
            s.push_back(int(ids.emplace(*it, int(ids.size())).first->second));
        return s;
    };

    long window = long(euclid_complexity(p, q).get_si());
    if (window < 1) window = 1;
    Int best_prev = -1;
    for (;;) {
        std::vector<std::vector<int>> rows, cols;
        for (long n = -window; n <= window; ++n) {
            rows.push_back(suffix(Hexagon::standard().apply(pow(twist0, n))));
            cols.push_back(suffix(anchor.apply(pow(twist1, n))));
        }
        Int best = -1;
        for (const auto& r : rows)
            for (const auto& c : cols) {
                size_t m = 0;
                while (m + 1 < r.size() && m + 1 < c.size() && r[m + 1] == c[m + 1]) ++m;
                Int d = Int(r.size() - 1) + Int(c.size() - 1) - 2 * Int(m);
                if (best < 0 || d < best) best = d;
            }
        if (best == best_prev) return best; // stable across a doubling
        best_prev = best;
        window *= 2;
    }
}

LensReport lens_report(const Int& p, const Int& q) {
    require_lens(p, q, "lens_report");
    LensReport rep;
    rep.p = p;
    rep.q = q;
    rep.canonical_q = lens_normalize(p, q);
    rep.euclid = euclid_complexity(p, q);
    rep.gluing_matrix = lens_gluing(p, q);
    rep.twist_distance = lens_twist_distance(p, q);
    rep.special_small = (p <= 3);
    Int reduced = rep.euclid - 3;
    if (reduced < 0) reduced = 0;
    rep.spine_vertices = reduced;
    rep.conjectured_complexity = rep.special_small ? Int(0) : reduced;
    return rep;
}

bool lens_homeomorphic(const Int& p, const Int& q, const Int& p2, const Int& q2) {
    Int n1 = lens_normalize(p, q);
    Int n2 = lens_normalize(p2, q2);
    return p == p2 && n1 == n2;
}

} // namespace hexflip
