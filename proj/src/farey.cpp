#include "hexflip/farey.hpp"

#include <algorithm>
#include <cassert>

namespace hexflip {

namespace {

bool hexagon_has_vertex(const Hexagon& h, const ExtRational& r) {
    return h.index_of(r.vec()) >= 0;
}

} // namespace

FareyTriangle::FareyTriangle(const ExtRational& a, const ExtRational& b,
                             const ExtRational& c) {
    // Admissibility of the hexagon is exactly pairwise Farey adjacency.
    if (!is_admissible(a.vec(), b.vec(), c.vec()))
        throw NotUnimodularPair("vertices are not pairwise Farey-adjacent: " +
                                to_string(a) + ", " + to_string(b) + ", " + to_string(c));
    v_ = {a, b, c};
    std::sort(v_.begin(), v_.end());
}

FareyTriangle FareyTriangle::base() {
    return FareyTriangle(ExtRational::infinity(), ExtRational(-1, 1), ExtRational(0, 1));
}

bool FareyTriangle::has_vertex(const ExtRational& r) const {
    return v_[0] == r || v_[1] == r || v_[2] == r;
}

std::string FareyTriangle::text() const {
    return "(" + to_string(v_[0]) + "," + to_string(v_[1]) + "," + to_string(v_[2]) + ")";
}

bool is_farey_line(const ExtRational& r1, const ExtRational& r2) {
    if (r1 == r2) throw EqualEndpoints("a line needs two distinct endpoints");
    Int d = cross_det(r1.vec(), r2.vec());
    return d == 1 || d == -1;
}

Hexagon triangle_to_hexagon(const FareyTriangle& t) {
    const auto& v = t.vertices();
    return Hexagon::from_vertices(v[0].vec(), v[1].vec(), v[2].vec());
}

FareyTriangle hexagon_to_triangle(const Hexagon& w) {
    auto p = w.pairs();
    return FareyTriangle(ExtRational(p[0].x, p[0].y), ExtRational(p[1].x, p[1].y),
                         ExtRational(p[2].x, p[2].y));
}

FareyTriangle mediant_reflect(const FareyTriangle& t, const ExtRational& side_a,
                              const ExtRational& side_b) {
    if (!t.has_vertex(side_a) || !t.has_vertex(side_b) || side_a == side_b)
        throw SideNotInTriangle("side " + to_string(side_a) + "," + to_string(side_b) +
                                " is not a side of " + t.text());
    ExtRational third;
    for (const auto& v : t.vertices())
        if (v != side_a && v != side_b) third = v;

    Hexagon h = triangle_to_hexagon(t);
    int idx = h.index_of(third.vec());
    assert(idx >= 0);
    return hexagon_to_triangle(h.flip_at(idx).result);
}

ExtRational moebius_apply(const Mat& m, const ExtRational& r) {
    require_sl2(m, "moebius_apply");
    return ExtRational(m.a * r.num + m.b * r.den, m.c * r.num + m.d * r.den);
}

FareyTriangle fan_triangle(const ExtRational& r) {
    if (r.is_infinity())
        return FareyTriangle(ExtRational(0, 1), ExtRational(1, 1), ExtRational::infinity());
    Int n;
    mpz_fdiv_q(n.get_mpz_t(), r.num.get_mpz_t(), r.den.get_mpz_t());
    if (r.den == 1)
        return FareyTriangle(r, ExtRational(n + 1, 1), ExtRational::infinity());
    ExtRational lo(n, 1), hi(n + 1, 1);
    for (;;) {
        ExtRational med(lo.num + hi.num, lo.den + hi.den);
        if (med == r) return FareyTriangle(lo, med, hi);
        // exact comparison within (lo, hi), all denominators positive
        if (r.num * med.den < med.num * r.den) hi = med;
        else lo = med;
    }
}

Int separating_lines_oracle(const ExtRational& r1, const ExtRational& r2) {
    if (r1 == r2) throw EqualEndpoints("separating_lines_oracle needs distinct points");

    // Send r1 to infinity by a unimodular Moebius map; lines separating
    // infinity from a finite t are the nested Stern-Brocot intervals
    // strictly containing t.
    Mat norm = Mat::identity();
    if (!r1.is_infinity()) {
        Int x, y, g;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), r1.num.get_mpz_t(),
                   r1.den.get_mpz_t());
        assert(g == 1);
        norm = Mat(x, y, -r1.den, r1.num);
        assert(norm.det() == 1);
    }
    ExtRational t = moebius_apply(norm, r2);
    assert(!t.is_infinity());
    if (t.den == 1) return 0;

    Int n;
    mpz_fdiv_q(n.get_mpz_t(), t.num.get_mpz_t(), t.den.get_mpz_t());
    ExtRational lo(n, 1), hi(n + 1, 1);
    Int count = 0;
    for (;;) {
        ++count;
        ExtRational med(lo.num + hi.num, lo.den + hi.den);
        if (med == t) return count;
        if (t.num * med.den < med.num * t.den) hi = med;
        else lo = med;
    }
}

Int dc_rationals(const ExtRational& r1, const ExtRational& r2) {
    if (r1 == r2) throw EqualEndpoints("dc_rationals needs distinct points");
    Hexagon h1 = triangle_to_hexagon(fan_triangle(r1));
    Hexagon h2 = triangle_to_hexagon(fan_triangle(r2));
    FlipPath path = geodesic(h1, h2);
    const auto& hx = path.hexagons;

    // Drop the edges that run inside either fan.
    size_t i = 0, j = hx.size() - 1;
    while (i + 1 <= j && hexagon_has_vertex(hx[i], r1) && hexagon_has_vertex(hx[i + 1], r1))
        ++i;
    while (j > i && hexagon_has_vertex(hx[j], r2) && hexagon_has_vertex(hx[j - 1], r2))
        --j;
    return Int(j - i);
}

Int dc_triangle_point(const FareyTriangle& t, const ExtRational& r) {
    if (t.has_vertex(r))
        throw VertexOfTriangle(to_string(r) + " is a vertex of " + t.text());
    Hexagon h1 = triangle_to_hexagon(t);
    Hexagon h2 = triangle_to_hexagon(fan_triangle(r));
    FlipPath path = geodesic(h1, h2);
    const auto& hx = path.hexagons;
    size_t j = hx.size() - 1;
    while (j > 0 && hexagon_has_vertex(hx[j], r) && hexagon_has_vertex(hx[j - 1], r))
        --j;
    return Int(j);
}

Int dc_operator_displacement(const Mat& a, const FareyTriangle& t) {
    require_sl2(a, "dc_operator_displacement");
    Hexagon h = triangle_to_hexagon(t);
    return distance(h, h.apply(a));
}

} // namespace hexflip
