#include <doctest.h>

#include <random>
#include <set>

#include "hexflip/fliptree.hpp"
#include "hexflip/verify.hpp"

using namespace hexflip;

namespace {

// Exhaustive scan of the hexagon's lattice points: the origin must be the
// only interior point and the six vertices the only boundary points.
void check_lattice_points(const Hexagon& h) {
    auto vs = h.vertices();
    Int m = 0;
    for (const auto& v : vs) {
        m = std::max(m, abs(v.x));
        m = std::max(m, abs(v.y));
    }
    long bound = m.get_si();
    long interior = 0, on_boundary = 0;
    for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y) {
            Vec p(x, y);
            bool inside = true, boundary = false;
            for (size_t i = 0; i < 6; ++i) {
                const Vec& a = vs[i];
                Vec edge = vs[(i + 1) % 6] - a;
                Int cr = cross_det(edge, p - a);
                if (cr == 0) {
                    // on the edge line; inside the segment given convexity
                    boundary = true;
                } else if (cr < 0) {
                    inside = false;
                    break;
                }
            }
            if (!inside) continue;
            if (boundary) ++on_boundary;
            else ++interior;
        }
    CHECK(interior == 1);     // the origin
    CHECK(on_boundary == 6);  // the vertices
}

} // namespace

TEST_CASE("standard hexagon") {
    Hexagon w0 = Hexagon::standard();
    CHECK(w0.text() == "[(0,1),(1,0),(1,-1)]");
    for (const auto& v : w0.pairs()) CHECK(q_norm(v) == 1);
    CHECK(w0.apply(Mat::identity()) == w0);
    CHECK(w0.is_standard());
}

TEST_CASE("hexagon from a unimodular pair") {
    // +-X, +-(X+Z), +-Z
    CHECK(Hexagon::from_pair(Vec(1, 0), Vec(0, 1)) ==
          Hexagon::from_vertices(Vec(1, 0), Vec(1, 1), Vec(0, 1)));
    CHECK(Hexagon::from_pair(Vec(1, 0), Vec(0, -1)) == Hexagon::standard());
    Hexagon h = Hexagon::from_pair(Vec(2, 1), Vec(1, 1));
    CHECK(h == Hexagon::from_vertices(Vec(2, 1), Vec(3, 2), Vec(1, 1)));
    CHECK_THROWS_AS(Hexagon::from_pair(Vec(2, 0), Vec(0, 1)), NotUnimodularPair);
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(Vec(1, 0), Vec(0, 1), Vec(1, -1)));
    CHECK(is_admissible(Vec(1, 0), Vec(0, 1), Vec(1, 1))); // flip image of W0
    CHECK_FALSE(is_admissible(Vec(2, 0), Vec(0, 1), Vec(2, 1)));
    CHECK_FALSE(is_admissible(Vec(0, 0), Vec(0, 1), Vec(1, 1)));
    CHECK_FALSE(is_admissible(Vec(1, 0), Vec(1, 0), Vec(1, 1)));
    CHECK_FALSE(is_admissible(Vec(1, 0), Vec(-1, 0), Vec(1, 1)));
    CHECK_FALSE(is_admissible(Vec(1, 0), Vec(0, 1), Vec(5, 3)));
}

TEST_CASE("leading vertex") {
    CHECK(Hexagon::standard().leading_vertex() == Vec(1, 0)); // tie convention
    Hexagon h1 = Hexagon::standard().apply(Mat(2, 1, 1, 1));
    CHECK(h1.leading_vertex() == Vec(2, 1));
    Hexagon h2 = Hexagon::standard().apply(Mat(171, 100, -289, -169));
    CHECK(h2.leading_vertex() == Vec(171, -289));
}

TEST_CASE("flips of the standard hexagon") {
    Hexagon w0 = Hexagon::standard();
    std::set<Vec> introduced;
    for (const auto& f : w0.flips()) introduced.insert(f.introduced);
    CHECK(introduced == std::set<Vec>{Vec(1, 1), Vec(2, -1), Vec(1, -2)});
}

TEST_CASE("flip is an involution at the introduced pair") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        Hexagon h = Hexagon::standard().apply(random_word(rng, 9));
        for (int k = 0; k < 3; ++k) {
            auto f = h.flip_at(k);
            int back = f.result.index_of(f.introduced);
            REQUIRE(back >= 0);
            CHECK(f.result.flip_at(back).result == h);
        }
    }
}

TEST_CASE("flips commute with the matrix action") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
        Mat a = random_word(rng, 9);
        Hexagon h = Hexagon::standard().apply(random_word(rng, 6));
        std::set<Hexagon> lhs, rhs;
        for (const auto& f : h.apply(a).flips()) lhs.insert(f.result);
        for (const auto& f : h.flips()) rhs.insert(f.result.apply(a));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("matrix action") {
    Hexagon w0 = Hexagon::standard();
    CHECK(w0.apply(Mat(1, 1, 0, 1)) ==
          Hexagon::from_vertices(Vec(1, 0), Vec(1, 1), Vec(0, 1)));
    CHECK(w0.apply(Mat(0, -1, 1, 1)) == w0); // sixth-turn rotation fixes W0
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        Mat a = random_word(rng, 9);
        Hexagon h = w0.apply(a);
        CHECK(h.apply(a.inverse()) == w0);
        CHECK(w0.apply(-a) == h);
        CHECK(transition_from_standard(h).det() == 1);
    }
}

TEST_CASE("canonical form is idempotent and order-insensitive") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 100; ++i) {
        Hexagon h = Hexagon::standard().apply(random_word(rng, 9));
        auto p = h.pairs();
        CHECK(Hexagon::from_vertices(p[2], p[0], p[1]) == h);
        CHECK(Hexagon::from_vertices(-p[1], p[2], -p[0]) == h);
    }
}

TEST_CASE("interior lattice points: origin only") {
    // every hexagon in a small ball, bounded by leading-vertex norm
    for (const auto& [hex, d] : bfs_ball(Hexagon::standard(), 7)) {
        if (q_norm(hex.leading_vertex()) > 10000) continue;
        check_lattice_points(hex);
    }
}

TEST_CASE("hexagon text round-trip") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 30; ++i) {
        Hexagon h = Hexagon::standard().apply(random_word(rng, 10));
        CHECK(parse_hexagon(h.text()) == h);
    }
    CHECK_THROWS_AS(parse_hexagon("[(1,2)]"), BadInput);
}
