#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hexflip/lattice.hpp"

namespace hexflip {

// Canonical form of a centrally symmetric lattice hexagon that encodes a
// theta-curve isotopy class.  The six vertices are +-u, +-v, +-w; after sign
// normalization exactly one representative is the sum of the other two (the
// "middle", stored as v, so v = u + w with u < w lexicographically).
// Structural equality of canonical forms is hexagon equality.
class Hexagon {
public:
    // W0, vertices +-(1,0), +-(0,1), +-(1,-1).
    static Hexagon standard();

    // Hexagon with vertex pairs +-X, +-(X+Z), +-Z; needs |cross_det(X,Z)| = 1.
    static Hexagon from_pair(const Vec& X, const Vec& Z);

    // Canonicalize three vertex-pair representatives; throws NotUnimodularPair
    // on inadmissible input.
    static Hexagon from_vertices(const Vec& a, const Vec& b, const Vec& c);

    const Vec& outer_lo() const { return u_; }
    const Vec& middle() const { return v_; }
    const Vec& outer_hi() const { return w_; }
    std::array<Vec, 3> pairs() const { return {u_, v_, w_}; }

    // The six vertices in counterclockwise cyclic order starting inside the
    // normalization half-plane.
    std::array<Vec, 6> vertices() const;

    bool is_standard() const;

    // Vertex maximizing Q(x,y) = x^2+xy+y^2, sign-normalized.  Unique off W0;
    // for W0 returns (1,0) by convention.
    Vec leading_vertex() const;
    int leading_index() const; // index into pairs()

    // Flip replacing the vertex pair at index i (0=outer_lo, 1=middle,
    // 2=outer_hi) by the difference of the two neighbors.
    struct Flip;
    Flip flip_at(int i) const;
    std::vector<Flip> flips() const;
    // Index of the given pair, or -1.
    int index_of(const Vec& pair) const;

    Hexagon apply(const Mat& m) const;

    bool operator==(const Hexagon& o) const {
        return u_ == o.u_ && v_ == o.v_ && w_ == o.w_;
    }
    bool operator!=(const Hexagon& o) const { return !(*this == o); }
    bool operator<(const Hexagon& o) const {
        if (!(u_ == o.u_)) return u_ < o.u_;
        if (!(v_ == o.v_)) return v_ < o.v_;
        return w_ < o.w_;
    }

    // "[(x1,y1),(x2,y2),(x3,y3)]" in stored order (outer, middle, outer).
    std::string text() const;

private:
    Hexagon(Vec u, Vec v, Vec w) : u_(std::move(u)), v_(std::move(v)), w_(std::move(w)) {}
    static std::optional<Hexagon> try_canonicalize(const Vec& a, const Vec& b, const Vec& c);
    friend bool is_admissible(const Vec&, const Vec&, const Vec&);

    Vec u_, v_, w_;
};

struct Hexagon::Flip {
    Hexagon result;
    Vec replaced;   // sign-normalized pair that was removed
    Vec introduced; // sign-normalized pair that appeared
};

// True iff the three pair representatives span an admissible hexagon; false
// on malformed input (zero, parallel or non-unimodular vectors).
bool is_admissible(const Vec& a, const Vec& b, const Vec& c);

// Some A in SL(2,Z) with A W0 = h (columns are the middle pair and an outer
// pair of h).
Mat transition_from_standard(const Hexagon& h);

Hexagon parse_hexagon(const std::string& text);

} // namespace hexflip
