#include "hexflip/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hexflip/euclid.hpp"
#include "hexflip/farey.hpp"
#include "hexflip/manifolds.hpp"

namespace hexflip {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check(std::vector<CheckResult>& out, const std::string& label, bool pass,
           const std::string& detail = "") {
    out.push_back({label, pass, detail});
}

std::string fmt_count(size_t bad, size_t total) {
    std::ostringstream os;
    os << (total - bad) << "/" << total << " ok";
    return os.str();
}

const Mat kGenS(0, -1, 1, 0);
const Mat kGenT(1, 1, 0, 1);

} // namespace

Mat random_word(std::mt19937_64& rng, int max_len) {
    static const Mat gens[4] = {kGenS, kGenT, kGenS.inverse(), kGenT.inverse()};
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> pick(0, 3);
    Mat m = Mat::identity();
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) m = m * gens[size_t(pick(rng))];
    return m;
}

namespace {

// 1. The worked conjugate pair: c = 13 vs operator complexity 1.
std::vector<CheckResult> suite_conjugate_pair(const SuiteOptions&) {
    std::vector<CheckResult> out;
    const Mat a(171, 100, -289, -169);
    const Mat jordan(1, 1, 0, 1);
    auto t0 = Clock::now();
    Int ca = matrix_complexity(a);
    Int cj = matrix_complexity(jordan);
    MinimizationResult ma = minimize(a);
    MinimizationResult mj = minimize(jordan);
    double elapsed = ms_since(t0);
    check(out, "c([[171,100],[-289,-169]]) = 13", ca == 13, "got " + ca.get_str());
    check(out, "c([[1,1],[0,1]]) = 1", cj == 1, "got " + cj.get_str());
    check(out, "operator complexity of both = 1",
          ma.operator_complexity == 1 && mj.operator_complexity == 1,
          ma.operator_complexity.get_str() + ", " + mj.operator_complexity.get_str());
    check(out, "minimize returns a minimal matrix",
          is_minimal(ma.minimal) && is_minimal(mj.minimal) &&
              ma.conjugator.inverse() * a * ma.conjugator == ma.minimal,
          to_string(ma.minimal));
    check(out, "runtime < 10 ms", elapsed < 10.0,
          std::to_string(elapsed) + " ms");
    return out;
}

// 2. Hyperbolic example of complexity 2 and its census.
std::vector<CheckResult> suite_hyperbolic_census(const SuiteOptions&) {
    std::vector<CheckResult> out;
    const Mat a(2, 1, 1, 1);
    Int cop = operator_complexity(a);
    check(out, "c_op([[2,1],[1,1]]) = 2", cop == 2, "got " + cop.get_str());
    TorusBundleReport rep = torus_bundle_report(a);
    check(out, "conjectured complexity 7", rep.conjectured_complexity == 7,
          "got " + rep.conjectured_complexity.get_str());
    bool census_ok = rep.census && rep.census->n_vertices == 7 &&
                     rep.census->n_cells == 8 && rep.census->pseudominimal;
    check(out, "census n=7, cells=8, pseudominimal", census_ok,
          rep.census ? "n=" + rep.census->n_vertices.get_str() +
                           " cells=" + rep.census->n_cells.get_str()
                     : "no census");
    return out;
}

// 3. Flat bundles: every listed monodromy gives conjectured complexity 6.
std::vector<CheckResult> suite_flat_bundles(const SuiteOptions&) {
    std::vector<CheckResult> out;
    const std::vector<Mat> flats = {
        Mat::identity(),        -Mat::identity(),     Mat(0, -1, 1, 1),
        Mat(-1, -1, 1, 0),      Mat(0, 1, -1, 0),     Mat(1, 0, 1, 1),
        Mat(-1, 0, -1, -1)};
    size_t bad = 0;
    std::string first_bad;
    for (const auto& m : flats) {
        TorusBundleReport rep = torus_bundle_report(m);
        if (rep.conjectured_complexity != 6) {
            ++bad;
            if (first_bad.empty())
                first_bad = to_string(m) + " -> " + rep.conjectured_complexity.get_str();
        }
    }
    check(out, "7 flat monodromies all report complexity 6", bad == 0,
          bad ? first_bad : fmt_count(0, flats.size()));
    return out;
}

// 4. Euclid reciprocity sweep: E(p,q) = E(p,r) whenever qr = +-1 mod p.
std::vector<CheckResult> suite_euclid_reciprocity(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    auto t0 = Clock::now();
    auto violations = reciprocity_scan(opt.pmax);
    double elapsed = ms_since(t0);
    check(out, "reciprocity_scan(" + opt.pmax.get_str() + ") finds no counterexample",
          violations.empty(), std::to_string(violations.size()) + " violations");
    check(out, "scan runtime < 10 s", elapsed < 10000.0,
          std::to_string(elapsed / 1000.0) + " s");
    return out;
}

// 5. BFS oracle: ball sizes and distance agreement.
std::vector<CheckResult> suite_tree_oracle(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    const Hexagon w0 = Hexagon::standard();
    bool sizes_ok = true;
    std::string size_detail;
    for (int r = 0; r <= 10; ++r) {
        size_t expect = 1 + 3 * ((size_t(1) << r) - 1);
        size_t got = bfs_ball(w0, r).size();
        if (got != expect) {
            sizes_ok = false;
            size_detail = "r=" + std::to_string(r) + ": " + std::to_string(got) +
                          " != " + std::to_string(expect);
            break;
        }
    }
    check(out, "ball sizes 1+3(2^r-1) for r <= 10", sizes_ok, size_detail);

    int radius = opt.radius;
    auto ball = bfs_ball(w0, radius);
    size_t bad_dist = 0, bad_cmat = 0;
    std::map<Vec, int> lead_seen;
    bool leads_unique = true;
    for (const auto& [hex, d] : ball) {
        if (distance(w0, hex) != d) ++bad_dist;
        if (matrix_complexity(transition_from_standard(hex)) != d) ++bad_cmat;
        auto [it, fresh] = lead_seen.emplace(hex.leading_vertex(), d);
        if (!fresh) leads_unique = false;
    }
    check(out, "descent distance matches BFS on ball(" + std::to_string(radius) + ")",
          bad_dist == 0, fmt_count(bad_dist, ball.size()));
    check(out, "matrix complexity matches BFS on ball(" + std::to_string(radius) + ")",
          bad_cmat == 0, fmt_count(bad_cmat, ball.size()));
    check(out, "leading vertices are unique across the ball", leads_unique);
    return out;
}

// 6. Every coprime (p,q), p > q >= 1, p <= 60 leads exactly one hexagon at
// distance E(p,q).
std::vector<CheckResult> suite_leading_vertex(const SuiteOptions&) {
    std::vector<CheckResult> out;
    const Hexagon w0 = Hexagon::standard();
    size_t total = 0, bad_lead = 0, bad_dist = 0;
    std::set<Hexagon> seen;
    for (Int p = 2; p <= 60; ++p) {
        for (Int q = 1; q < p; ++q) {
            if (gcd(p, q) != 1) continue;
            ++total;
            EuclidWord word = euclid_word(p, q);
            Hexagon hex = w0.apply(word.product);
            if (!(hex.leading_vertex() == Vec(p, q))) ++bad_lead;
            if (distance(w0, hex) != euclid_complexity(p, q)) ++bad_dist;
            seen.insert(hex);
        }
    }
    check(out, "constructed hexagon leads at (p,q)", bad_lead == 0,
          fmt_count(bad_lead, total));
    check(out, "distance to W0 equals E(p,q)", bad_dist == 0, fmt_count(bad_dist, total));
    check(out, "hexagons distinct across (p,q), p <= 60", seen.size() == total,
          std::to_string(seen.size()) + " of " + std::to_string(total));
    return out;
}

// 7. Group laws on seeded words.
std::vector<CheckResult> suite_group_laws(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opt.seed);
    const size_t n = 1000;
    size_t bad_inv = 0, bad_neg = 0, bad_tri = 0, bad_par = 0;
    for (size_t i = 0; i < n; ++i) {
        Mat a = random_word(rng, 10);
        Mat b = random_word(rng, 10);
        Int ca = matrix_complexity(a), cb = matrix_complexity(b);
        Int cab = matrix_complexity(a * b);
        if (matrix_complexity(a.inverse()) != ca) ++bad_inv;
        if (matrix_complexity(-a) != ca) ++bad_neg;
        if (cab > ca + cb || (cab - ca - cb) % 2 != 0) ++bad_tri;
        if (parity(a * b) != (parity(a) ^ parity(b))) ++bad_par;
    }
    check(out, "c(A^-1) = c(A)", bad_inv == 0, fmt_count(bad_inv, n));
    check(out, "c(-A) = c(A)", bad_neg == 0, fmt_count(bad_neg, n));
    check(out, "c(AB) <= c(A)+c(B), same parity", bad_tri == 0, fmt_count(bad_tri, n));
    check(out, "parity is a homomorphism", bad_par == 0, fmt_count(bad_par, n));
    check(out, "parity(S) = parity(T) = 1", parity(kGenS) == 1 && parity(kGenT) == 1);
    return out;
}

// 8. Power laws on seeded non-periodic operators.
std::vector<CheckResult> suite_power_laws(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opt.seed);
    size_t found = 0, bad = 0;
    std::string first_bad;
    while (found < 50) {
        Mat a = random_word(rng, 8);
        if (is_periodic(a)) continue;
        ++found;
        PowerLawReport rep = power_law_check(a, 5);
        if (!rep.ok()) {
            ++bad;
            if (first_bad.empty()) first_bad = to_string(a);
        }
    }
    check(out, "power laws hold for 50 non-periodic operators, |k| <= 5", bad == 0,
          bad ? first_bad : fmt_count(0, found));
    return out;
}

// 9. Farey distances against the Euclid complexity and the line-counting
// oracle.
std::vector<CheckResult> suite_farey(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    auto t0 = Clock::now();
    const ExtRational zero(0, 1);
    const FareyTriangle base = FareyTriangle::base();

    size_t total = 0, bad_dc = 0, bad_tri = 0;
    for (Int p = 2; p <= 100; ++p)
        for (Int q = 1; q < p; ++q) {
            if (gcd(p, q) != 1) continue;
            ++total;
            Int e = euclid_complexity(p, q);
            if (dc_rationals(zero, ExtRational(p, q)) != e - 1) ++bad_dc;
            if (dc_triangle_point(base, ExtRational(p, q)) != e) ++bad_tri;
        }
    check(out, "dc(0, p/q) = E(p,q)-1 for p <= 100", bad_dc == 0, fmt_count(bad_dc, total));
    check(out, "dc(base triangle, p/q) = E(p,q) for p <= 100", bad_tri == 0,
          fmt_count(bad_tri, total));

    // Farey set of denominator <= 30 in [0,1], plus infinity.
    std::vector<ExtRational> farey{ExtRational::infinity()};
    for (Int den = 1; den <= 30; ++den)
        for (Int num = 0; num <= den; ++num)
            if (gcd(num, den) == 1) farey.emplace_back(num, den);
    size_t pairs = 0, bad_oracle = 0;
    for (size_t i = 0; i < farey.size(); ++i)
        for (size_t j = i + 1; j < farey.size(); ++j) {
            ++pairs;
            if (dc_rationals(farey[i], farey[j]) !=
                separating_lines_oracle(farey[i], farey[j]))
                ++bad_oracle;
        }
    check(out, "dc equals separating-lines oracle, denominators <= 30", bad_oracle == 0,
          fmt_count(bad_oracle, pairs));

    // Wider seeded sample of oracle agreement and Moebius invariance.
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long> num_dist(-30, 30);
    std::uniform_int_distribution<long> den_dist(0, 30);
    auto random_rational = [&]() {
        for (;;) {
            long num = num_dist(rng), den = den_dist(rng);
            if (num == 0 && den == 0) continue;
            if (den == 0) return ExtRational::infinity();
            return ExtRational(num, den);
        }
    };
    size_t bad_wide = 0, bad_moebius = 0;
    const size_t samples = 500;
    for (size_t i = 0; i < samples; ++i) {
        ExtRational r1 = random_rational(), r2 = random_rational();
        if (r1 == r2) { r2 = moebius_apply(kGenT, r2); if (r1 == r2) continue; }
        Int d = dc_rationals(r1, r2);
        if (d != separating_lines_oracle(r1, r2)) ++bad_wide;
        Mat a = random_word(rng, 8);
        if (dc_rationals(moebius_apply(a, r1), moebius_apply(a, r2)) != d) ++bad_moebius;
    }
    check(out, "oracle agreement on seeded wide-range pairs", bad_wide == 0,
          fmt_count(bad_wide, samples));
    check(out, "Moebius invariance on seeded triples", bad_moebius == 0,
          fmt_count(bad_moebius, samples));
    check(out, "runtime < 30 s", ms_since(t0) < 30000.0,
          std::to_string(ms_since(t0) / 1000.0) + " s");
    return out;
}

// 10. Lens suite: twist distances, orbit invariance, the (5,2) report.
std::vector<CheckResult> suite_lens(const SuiteOptions&) {
    std::vector<CheckResult> out;
    size_t total = 0, bad_twist = 0;
    for (Int p = 2; p <= 50; ++p)
        for (Int q = 1; q < p; ++q) {
            if (gcd(p, q) != 1) continue;
            ++total;
            if (lens_twist_distance(p, q) != euclid_complexity(p, q) - 1) ++bad_twist;
        }
    check(out, "twist distance = E(p,q)-1 for p <= 50", bad_twist == 0,
          fmt_count(bad_twist, total));

    size_t orbit_total = 0, bad_orbit = 0;
    for (Int p = 2; p <= 200; ++p)
        for (Int q = 1; q < p; ++q) {
            if (gcd(p, q) != 1) continue;
            ++orbit_total;
            Int e = euclid_complexity(p, q);
            Int qinv;
            mpz_invert(qinv.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
            if (euclid_complexity(p, p - q) != e || euclid_complexity(p, qinv) != e ||
                euclid_complexity(p, p - qinv) != e)
                ++bad_orbit;
        }
    check(out, "E constant on homeomorphism orbits, p <= 200", bad_orbit == 0,
          fmt_count(bad_orbit, orbit_total));

    LensReport rep = lens_report(5, 2);
    check(out, "lens(5,2): E=4, conjectured 1, one spine vertex",
          rep.euclid == 4 && rep.conjectured_complexity == 1 && rep.spine_vertices == 1,
          "E=" + rep.euclid.get_str() + " c=" + rep.conjectured_complexity.get_str());
    return out;
}

// 11. Census structure on seeded minimal hyperbolic monodromies.
std::vector<CheckResult> suite_census_invariants(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opt.seed);
    std::set<Mat> sampled;
    size_t bad = 0;
    std::string first_bad;
    size_t attempts = 0;
    while (sampled.size() < 100 && attempts < 100000) {
        ++attempts;
        Mat a = random_word(rng, 12);
        Int t = a.trace();
        if (t <= 2 && t >= -2) continue;
        Mat m = minimize(a).minimal;
        if (!sampled.insert(m).second) continue;
        SpineCensus census = spine_census(m);
        Int c = matrix_complexity(m);
        bool ok = census.n_cells == census.n_vertices + 1 &&
                  census.n_edges == 2 * census.n_vertices &&
                  Int(census.swept_cells.size()) == c + 2 && census.pseudominimal;
        for (const auto& cell : census.swept_cells)
            if (cell.boundary_length &&
                (*cell.boundary_length < 4 || (*cell.boundary_length) % 2 != 0))
                ok = false;
        if (!ok) {
            ++bad;
            if (first_bad.empty()) first_bad = to_string(m);
        }
    }
    check(out, "census invariants on 100 minimal hyperbolic matrices",
          bad == 0 && sampled.size() == 100,
          bad ? first_bad : fmt_count(0, sampled.size()));
    return out;
}

// 12. Homology bounds.
std::vector<CheckResult> suite_homology(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    Homology hi = first_homology(Mat::identity());
    check(out, "H1(M(I)) = Z^3, bound 2 <= 6",
          hi.betti == 3 && hi.torsion.empty() && hi.betti - 1 <= 6,
          "betti=" + hi.betti.get_str());
    std::mt19937_64 rng(opt.seed);
    size_t bad = 0;
    const size_t n = 100;
    for (size_t i = 0; i < n; ++i) {
        Mat a = random_word(rng, 10);
        TorusBundleReport rep = torus_bundle_report(a);
        if (rep.lower_bound_homology > rep.conjectured_complexity) ++bad;
    }
    check(out, "homology bound <= conjectured complexity on samples", bad == 0,
          fmt_count(bad, n));
    return out;
}

using SuiteFn = std::function<std::vector<CheckResult>(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"conjugate-pair", suite_conjugate_pair},
        {"hyperbolic-census", suite_hyperbolic_census},
        {"flat-bundles", suite_flat_bundles},
        {"euclid-reciprocity", suite_euclid_reciprocity},
        {"tree-oracle", suite_tree_oracle},
        {"leading-vertex", suite_leading_vertex},
        {"group-laws", suite_group_laws},
        {"power-laws", suite_power_laws},
        {"farey", suite_farey},
        {"lens", suite_lens},
        {"census-invariants", suite_census_invariants},
        {"homology", suite_homology},
    };
    return table;
}

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_table()) names.push_back(name);
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const auto& [suite, fn] : suite_table()) {
            auto results = fn(opt);
            for (auto& r : results) {
                r.label = suite + ": " + r.label;
                out.push_back(std::move(r));
            }
        }
        return out;
    }
    for (const auto& [suite, fn] : suite_table())
        if (suite == name) return fn(opt);
    throw BadInput("unknown suite '" + name + "'");
}

} // namespace hexflip
