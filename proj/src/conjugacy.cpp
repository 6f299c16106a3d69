#include "hexflip/conjugacy.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace hexflip {

std::string OperatorClass::text() const {
    switch (kind) {
        case Kind::Elliptic:
            return "elliptic(period " + std::to_string(period) + ")";
        case Kind::Parabolic:
            return std::string("parabolic(") + (sign > 0 ? "+" : "-") + ", n=" +
                   twist.get_str() + ")";
        case Kind::Hyperbolic:
            return "hyperbolic";
    }
    return "?";
}

OperatorClass classify(const Mat& a) {
    require_sl2(a, "classify");
    Int t = a.trace();
    OperatorClass oc;
    if (t > 2 || t < -2) {
        oc.kind = OperatorClass::Kind::Hyperbolic;
        return oc;
    }
    if (t == 2 || t == -2) {
        oc.kind = OperatorClass::Kind::Parabolic;
        oc.sign = t > 0 ? 1 : -1;
        // N = sign*A has trace 2; P = N - I is nilpotent and acts as
        // P x = n det(v, x) v for a primitive v spanning its image.  The
        // integer n (sign included) classifies the operator up to conjugacy.
        Mat n_mat = oc.sign > 0 ? a : -a;
        Mat p(n_mat.a - 1, n_mat.b, n_mat.c, n_mat.d - 1);
        if (p.a == 0 && p.b == 0 && p.c == 0 && p.d == 0) {
            oc.twist = 0;
            return oc;
        }
        Vec column = p.col(0).is_zero() ? p.col(1) : p.col(0);
        Int g = gcd(abs(column.x), abs(column.y));
        Vec v(column.x / g, column.y / g);
        Vec x = (v.x != 0) ? Vec(0, 1) : Vec(1, 0); // det(v, x) != 0
        Vec px = p * x;
        Int scale = cross_det(v, x);
        oc.twist = (v.x != 0) ? px.x / (scale * v.x) : px.y / (scale * v.y);
        assert(px.x == oc.twist * scale * v.x && px.y == oc.twist * scale * v.y);
        return oc;
    }
    oc.kind = OperatorClass::Kind::Elliptic;
    oc.period = (t == 0) ? 4 : (t == 1 ? 6 : 3);
    return oc;
}

bool is_periodic(const Mat& a) {
    require_sl2(a, "is_periodic");
    Int t = a.trace();
    if (t < 2 && t > -2) return true;           // elliptic
    return a == Mat::identity() || -a == Mat::identity();
}

bool is_minimal(const Mat& a) {
    require_sl2(a, "is_minimal");
    Int c = matrix_complexity(a);
    if (c <= 1) return true;
    FlipPath g = geodesic(Hexagon::standard(), Hexagon::standard().apply(a));
    const auto& hx = g.hexagons;
    Hexagon penultimate = hx[hx.size() - 2];
    Hexagon image_of_first_step = hx[1].apply(a);
    return !(penultimate == image_of_first_step);
}

namespace {

// Ordered adjacent-vertex pair of V with det +1, as a basis matrix.
Mat adjacent_basis(const Hexagon& v) {
    Vec x = v.outer_lo(), y = v.middle();
    if (cross_det(x, y) < 0) std::swap(x, y);
    return Mat(x.x, y.x, x.y, y.y);
}

} // namespace

MinimizationResult minimize(const Mat& a) {
    require_sl2(a, "minimize");
    Mat conj = Mat::identity();
    Mat cur = a;
    for (int round = 0; round < 4; ++round) {
        if (is_minimal(cur))
            return {conj, cur, matrix_complexity(cur)};

        // Paths from W = cur W0 towards W0 and towards cur W; the vertex
        // where they split is a minimal hexagon.  If they never split, the
        // operator reverses the geodesic (or fixes its middle vertex) and the
        // minimal hexagon sits at the middle instead.
        FlipPath g = geodesic(Hexagon::standard(), Hexagon::standard().apply(cur));
        const auto& hx = g.hexagons;
        const size_t c = g.length();
        size_t split = 0;
        while (split + 1 <= c &&
               hx[c - (split + 1)] == hx[split + 1].apply(cur))
            ++split;
        size_t v_index = (split >= c) ? c / 2 : c - split;
        Mat basis = adjacent_basis(hx[v_index]);
        cur = basis.inverse() * cur * basis;
        conj = conj * basis;
    }
    throw BadInput("minimize failed to converge; not expected for SL(2,Z) input");
}

Int operator_complexity(const Mat& a) { return minimize(a).operator_complexity; }

std::vector<Mat> minimal_matrices(const Mat& a) {
    require_sl2(a, "minimal_matrices");
    MinimizationResult mr = minimize(a);
    if (mr.minimal == Mat::identity() || -mr.minimal == Mat::identity())
        return {mr.minimal};

    // One fundamental domain [V, op V) of minimal hexagons; each yields three
    // positively oriented adjacent-vertex bases (opposite pairs repeat).
    std::vector<Hexagon> domain;
    if (mr.operator_complexity == 0) {
        domain.push_back(Hexagon::standard());
    } else {
        FlipPath g = geodesic(Hexagon::standard(),
                              Hexagon::standard().apply(mr.minimal));
        domain.assign(g.hexagons.begin(), g.hexagons.end() - 1);
    }

    std::set<Mat> out;
    for (const auto& hex : domain) {
        auto vs = hex.vertices();
        for (int i = 0; i < 3; ++i) {
            const Vec& x = vs[size_t(i)];
            const Vec& y = vs[size_t(i) + 1];
            assert(cross_det(x, y) == 1);
            Mat basis(x.x, y.x, x.y, y.y);
            out.insert(basis.inverse() * mr.minimal * basis);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Hexagon> mainstream(const Mat& a, int window) {
    require_sl2(a, "mainstream");
    if (is_periodic(a))
        throw PeriodicOperator("mainstream is a line only for non-periodic operators");
    if (window < 0) throw InvalidRange("mainstream needs window >= 0");

    MinimizationResult mr = minimize(a);
    FlipPath g = geodesic(Hexagon::standard(), Hexagon::standard().apply(mr.minimal));

    // Fundamental geodesic V -> A V in the original coordinates.
    std::vector<Hexagon> fund;
    fund.reserve(g.hexagons.size());
    for (const auto& h : g.hexagons) fund.push_back(h.apply(mr.conjugator));

    const size_t c = g.length();
    std::vector<Hexagon> out;
    Mat shift = pow(a, -window);
    for (int j = -window; j <= window; ++j) {
        for (size_t i = 0; i < c; ++i) out.push_back(fund[i].apply(shift));
        shift = a * shift;
    }
    out.push_back(fund[c].apply(pow(a, window)));
    assert(out.size() == c * size_t(2 * window + 1) + 1);
    return out;
}

int parity(const Mat& a) {
    require_sl2(a, "parity");
    return mpz_odd_p(matrix_complexity(a).get_mpz_t()) ? 1 : 0;
}

PowerLawReport power_law_check(const Mat& a, int k_max) {
    require_sl2(a, "power_law_check");
    if (is_periodic(a))
        throw PeriodicOperator(
            "power laws need a non-periodic operator; quarter-turn rotations "
            "satisfy c(A^k) < |k| c(A) for |k| >= 2");
    if (k_max < 1) throw InvalidRange("power_law_check needs k_max >= 1");

    PowerLawReport rep;
    rep.c_operator = operator_complexity(a);
    rep.c_matrix = matrix_complexity(a);
    rep.defect = rep.c_matrix - rep.c_operator;
    const bool base_minimal = is_minimal(a);
    if (rep.defect < 0 || mpz_odd_p(rep.defect.get_mpz_t()))
        rep.defect_even_nonneg = false;

    for (long k = -k_max; k <= k_max; ++k) {
        if (k == 0) continue;
        Mat ak = pow(a, k);
        PowerRow row;
        row.k = k;
        row.c_matrix = matrix_complexity(ak);
        row.c_operator = operator_complexity(ak);
        row.minimal = is_minimal(ak);
        Int kk = k < 0 ? Int(-k) : Int(k);
        if (row.c_operator != kk * rep.c_operator) rep.linear = false;
        if (row.c_matrix - kk * rep.c_operator != rep.defect) rep.defect_constant = false;
        if (row.minimal != base_minimal) rep.minimal_consistent = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string conjugacy_class_key(const Mat& a) {
    OperatorClass oc = classify(a);
    if (oc.kind == OperatorClass::Kind::Parabolic) {
        Mat normal(1, oc.twist, 0, 1);
        if (oc.sign < 0) normal = -normal;
        return to_string(normal);
    }
    std::vector<Mat> mats = minimal_matrices(a);
    return to_string(*std::min_element(mats.begin(), mats.end()));
}

} // namespace hexflip
