#include <doctest.h>

#include <random>

#include "hexflip/lattice.hpp"
#include "hexflip/verify.hpp"

using namespace hexflip;

TEST_CASE("matrix arithmetic") {
    Mat a(2, 1, 1, 1);
    CHECK(a.inverse() == Mat(1, -1, -1, 2));
    CHECK(a * a == Mat(5, 3, 3, 2));
    CHECK(pow(Mat(1, 1, 0, 1), -3) == Mat(1, -3, 0, 1));
    CHECK(a * a.inverse() == Mat::identity());
    CHECK(pow(a, 0) == Mat::identity());

    Mat flip(0, 1, 1, 0); // det -1
    CHECK(flip.inverse() == flip);
    CHECK_THROWS_AS(Mat(2, 0, 0, 2).inverse(), NotUnimodularPair);
}

TEST_CASE("determinant multiplicativity and inverse order on random words") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Mat a = random_word(rng, 8), b = random_word(rng, 8);
        CHECK((a * b).det() == a.det() * b.det());
        CHECK((a * b).inverse() == b.inverse() * a.inverse());
    }
}

TEST_CASE("q_norm") {
    CHECK(q_norm(Vec(1, 0)) == 1);
    CHECK(q_norm(Vec(1, -1)) == 1);
    CHECK(q_norm(Vec(171, -289)) == 63343);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int i = 0; i < 500; ++i) {
        Vec v(d(rng), d(rng));
        CHECK(q_norm(v) == q_norm(-v));
        CHECK((q_norm(v) > 0) == !v.is_zero());
    }
}

TEST_CASE("cross_det") {
    CHECK(cross_det(Vec(1, 0), Vec(0, 1)) == 1);
    CHECK(cross_det(Vec(2, 1), Vec(1, 1)) == 1);
    CHECK(cross_det(Vec(1, 1), Vec(2, 2)) == 0);

    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> d(-30, 30);
    for (int i = 0; i < 300; ++i) {
        Vec v(d(rng), d(rng)), w(d(rng), d(rng)), z(d(rng), d(rng));
        CHECK(cross_det(v, w) == -cross_det(w, v));
        CHECK(cross_det(v + z, w) == cross_det(v, w) + cross_det(z, w));
        Mat a = random_word(rng, 8);
        CHECK(cross_det(a * v, a * w) == a.det() * cross_det(v, w));
    }
}

TEST_CASE("smith invariants") {
    CHECK(smith_invariants(Mat(0, 0, 0, 0)) == std::pair<Int, Int>(0, 0));
    CHECK(smith_invariants(Mat(1, 1, 1, 0)) == std::pair<Int, Int>(1, 1));
    CHECK(smith_invariants(Mat(0, 1, 0, 0)) == std::pair<Int, Int>(1, 0));
    CHECK(smith_invariants(Mat(2, 0, 0, 6)) == std::pair<Int, Int>(2, 6));

    // invariance under unimodular row/column changes
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int i = 0; i < 200; ++i) {
        Mat m(d(rng), d(rng), d(rng), d(rng));
        Mat u = random_word(rng, 6), v = random_word(rng, 6);
        auto [d1, d2] = smith_invariants(m);
        CHECK(d2 % (d1 == 0 ? Int(1) : d1) == 0);
        CHECK(smith_invariants(u * m * v) == std::pair<Int, Int>(d1, d2));
    }
}

TEST_CASE("extended rationals") {
    CHECK(ExtRational(2, -4) == ExtRational(-1, 2));
    CHECK(ExtRational(5, 0).is_infinity());
    CHECK(ExtRational(5, 0) == ExtRational::infinity());
    CHECK_THROWS_AS(ExtRational(0, 0), BadInput);

    CHECK(to_string(ExtRational(5, 2)) == "5/2");
    CHECK(to_string(ExtRational(-3, 1)) == "-3");
    CHECK(to_string(ExtRational::infinity()) == "inf");
    CHECK(parse_rational("5/2") == ExtRational(5, 2));
    CHECK(parse_rational("-7") == ExtRational(-7, 1));
    CHECK(parse_rational("inf") == ExtRational::infinity());
    CHECK_THROWS_AS(parse_rational("x/y"), BadInput);
    CHECK_THROWS_AS(parse_rational("3/0"), BadInput);
}
