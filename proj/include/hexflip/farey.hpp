#pragma once

#include <array>

#include "hexflip/fliptree.hpp"

namespace hexflip {

// Ideal triangle of the Farey tessellation: three pairwise adjacent points of
// the absolute (|mq - np| = 1 for each pair m/n, p/q; infinity is 1/0).
// Equivalent to an admissible hexagon with vertex pairs +-(m,n).
class FareyTriangle {
public:
    FareyTriangle(const ExtRational& a, const ExtRational& b, const ExtRational& c);

    // Base triangle (inf, -1, 0); corresponds to the standard hexagon.
    static FareyTriangle base();

    const std::array<ExtRational, 3>& vertices() const { return v_; }
    bool has_vertex(const ExtRational& r) const;

    bool operator==(const FareyTriangle& o) const { return v_ == o.v_; }
    bool operator!=(const FareyTriangle& o) const { return !(*this == o); }

    std::string text() const;

private:
    std::array<ExtRational, 3> v_; // sorted, infinity last
};

bool is_farey_line(const ExtRational& r1, const ExtRational& r2);

// Reflection in a side: replaces the off-side vertex by the mediant of the
// side endpoints.  Involution.
FareyTriangle mediant_reflect(const FareyTriangle& t, const ExtRational& side_a,
                              const ExtRational& side_b);

Hexagon triangle_to_hexagon(const FareyTriangle& t);
FareyTriangle hexagon_to_triangle(const Hexagon& w);

// Moebius action (a z + b) / (c z + d) restricted to the absolute.
ExtRational moebius_apply(const Mat& m, const ExtRational& r);

// Number of tessellation lines whose endpoints strictly interleave with
// {r1, r2}: Stern-Brocot subdivision after sending r1 to infinity.
Int separating_lines_oracle(const ExtRational& r1, const ExtRational& r2);

// Same count through the flip tree: geodesic between fan triangles, trimmed
// of edges that stay inside either fan.
Int dc_rationals(const ExtRational& r1, const ExtRational& r2);

// Distance from a triangle to the fan of r (the triangles having r as a
// vertex).
Int dc_triangle_point(const FareyTriangle& t, const ExtRational& r);

// Tree displacement d(t, A t); its minimum over triangles is the operator
// complexity.
Int dc_operator_displacement(const Mat& a, const FareyTriangle& t);

// Some triangle having r as a vertex, found by mediant descent.
FareyTriangle fan_triangle(const ExtRational& r);

} // namespace hexflip
