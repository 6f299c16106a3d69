#include <doctest.h>

#include <random>

#include "hexflip/euclid.hpp"
#include "hexflip/farey.hpp"
#include "hexflip/verify.hpp"

using namespace hexflip;

namespace {

ExtRational rat(long n, long d = 1) { return ExtRational(n, d); }
const ExtRational inf = ExtRational::infinity();

} // namespace

TEST_CASE("farey lines") {
    CHECK(is_farey_line(rat(0), inf));
    CHECK(is_farey_line(rat(1), inf));
    CHECK_FALSE(is_farey_line(rat(1), rat(3)));
    CHECK(is_farey_line(rat(1, 2), rat(1, 3)));
    CHECK_THROWS_AS(is_farey_line(rat(1), rat(1)), EqualEndpoints);
}

TEST_CASE("triangles and the hexagon correspondence") {
    FareyTriangle base = FareyTriangle::base();
    CHECK(triangle_to_hexagon(base) == Hexagon::standard());
    CHECK(hexagon_to_triangle(Hexagon::standard()) == base);

    FareyTriangle t(rat(0), rat(1), inf);
    CHECK(triangle_to_hexagon(t) ==
          Hexagon::from_vertices(Vec(0, 1), Vec(1, 1), Vec(1, 0)));

    CHECK_THROWS_AS(FareyTriangle(rat(0), rat(2), inf), NotUnimodularPair);

    // round-trip over random flip walks
    std::mt19937_64 rng(79);
    Hexagon h = Hexagon::standard();
    for (int i = 0; i < 1000; ++i) {
        h = h.flip_at(int(rng() % 3)).result;
        CHECK(triangle_to_hexagon(hexagon_to_triangle(h)) == h);
    }
}

TEST_CASE("mediant reflections") {
    FareyTriangle t(rat(0), rat(1), inf);
    CHECK(mediant_reflect(t, rat(0), rat(1)) == FareyTriangle(rat(0), rat(1, 2), rat(1)));
    CHECK(mediant_reflect(t, rat(1), inf) == FareyTriangle(rat(1), rat(2), inf));
    CHECK(mediant_reflect(t, rat(0), inf) == FareyTriangle(rat(-1), rat(0), inf));

    // involution
    FareyTriangle r = mediant_reflect(t, rat(0), rat(1));
    CHECK(mediant_reflect(r, rat(0), rat(1)) == t);
    CHECK_THROWS_AS(mediant_reflect(t, rat(0), rat(5)), SideNotInTriangle);
}

TEST_CASE("reflections are flips through the correspondence") {
    std::mt19937_64 rng(83);
    Hexagon h = Hexagon::standard();
    for (int i = 0; i < 200; ++i) {
        int k = int(rng() % 3);
        FareyTriangle t = hexagon_to_triangle(h);
        auto flip = h.flip_at(k);
        Vec gone = flip.replaced;
        ExtRational off(gone.x, gone.y);
        std::vector<ExtRational> side;
        for (const auto& v : t.vertices())
            if (v != off) side.push_back(v);
        REQUIRE(side.size() == 2);
        CHECK(mediant_reflect(t, side[0], side[1]) == hexagon_to_triangle(flip.result));
        h = flip.result;
    }
}

TEST_CASE("moebius action") {
    CHECK(moebius_apply(Mat::identity(), rat(5, 2)) == rat(5, 2));
    CHECK(moebius_apply(Mat(1, 1, 0, 1), inf) == inf);
    CHECK(moebius_apply(Mat(0, -1, 1, 0), rat(0)) == inf);
    CHECK_THROWS_AS(moebius_apply(Mat(0, 1, 1, 0), rat(1)), NotSL2);

    // preserves Farey lines; intertwines with the hexagon action
    std::mt19937_64 rng(89);
    for (int i = 0; i < 100; ++i) {
        Mat a = random_word(rng, 8);
        CHECK(is_farey_line(moebius_apply(a, rat(0)), moebius_apply(a, inf)));
        Hexagon h = Hexagon::standard().apply(random_word(rng, 6));
        FareyTriangle t = hexagon_to_triangle(h);
        const auto& v = t.vertices();
        FareyTriangle tv(moebius_apply(a, v[0]), moebius_apply(a, v[1]),
                         moebius_apply(a, v[2]));
        CHECK(triangle_to_hexagon(tv) == h.apply(a));
    }
}

TEST_CASE("separating lines oracle") {
    CHECK(separating_lines_oracle(rat(0), rat(1)) == 0);
    CHECK(separating_lines_oracle(rat(0), rat(2)) == 1);
    CHECK(separating_lines_oracle(rat(0), rat(5, 2)) == 3);
    CHECK(separating_lines_oracle(inf, rat(2)) == 0);
    CHECK_THROWS_AS(separating_lines_oracle(rat(2), rat(2)), EqualEndpoints);
}

TEST_CASE("counting distance between rationals") {
    CHECK(dc_rationals(rat(0), rat(1)) == 0);
    CHECK(dc_rationals(rat(0), rat(5, 2)) == 3);
    CHECK(dc_rationals(rat(5, 2), rat(0)) == 3);
    CHECK(dc_rationals(rat(-7, 3), rat(9, 4)) ==
          dc_rationals(rat(9, 4), rat(-7, 3)));
    for (long p = 2; p <= 40; ++p)
        for (long q = 1; q < p; ++q) {
            if (gcd(p, q) != 1) continue;
            CHECK(dc_rationals(rat(0), rat(p, q)) == euclid_complexity(p, q) - 1);
        }
    CHECK_THROWS_AS(dc_rationals(inf, inf), EqualEndpoints);
}

TEST_CASE("counting distance from a triangle") {
    FareyTriangle base = FareyTriangle::base();
    CHECK(dc_triangle_point(base, rat(5, 2)) == 4);
    CHECK(dc_triangle_point(base, rat(1)) == 1);
    CHECK(dc_triangle_point(FareyTriangle(rat(0), rat(1), inf), rat(1, 2)) == 1);
    CHECK_THROWS_AS(dc_triangle_point(base, rat(0)), VertexOfTriangle);
}

TEST_CASE("operator displacement") {
    FareyTriangle base = FareyTriangle::base();
    CHECK(dc_operator_displacement(Mat(2, 1, 1, 1), base) == 2);
    const Mat big(171, 100, -289, -169);
    CHECK(dc_operator_displacement(big, base) == 13);

    // the minimum over a ball of triangles realizes the operator complexity
    Int best = -1;
    for (const auto& [hex, d] : bfs_ball(Hexagon::standard(), 6)) {
        Int disp = dc_operator_displacement(big, hexagon_to_triangle(hex));
        if (best < 0 || disp < best) best = disp;
    }
    CHECK(best == 1);
}
