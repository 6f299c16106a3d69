#include <doctest.h>

#include "hexflip/euclid.hpp"

using namespace hexflip;

namespace {

std::vector<Int> terms(long p, long q) { return continued_fraction(p, q).terms; }

} // namespace

TEST_CASE("continued fractions") {
    CHECK(terms(5, 2) == std::vector<Int>{2, 2});
    CHECK(terms(289, 171) == std::vector<Int>{1, 1, 2, 4, 2, 2, 2});
    CHECK(terms(3, 1) == std::vector<Int>{3});
    CHECK(terms(1, 1) == std::vector<Int>{1});
    CHECK(terms(7, 4) == std::vector<Int>{1, 1, 3});

    CHECK_THROWS_AS(continued_fraction(6, 4), NotCoprime);
    CHECK_THROWS_AS(continued_fraction(0, 1), NonPositive);
    CHECK_THROWS_AS(continued_fraction(2, 3), InvalidRange);
}

TEST_CASE("euclid complexity") {
    CHECK(euclid_complexity(5, 2) == 4);
    CHECK(euclid_complexity(289, 171) == 14);
    CHECK(euclid_complexity(1, 1) == 1);
    CHECK(euclid_complexity(0, 1) == 0);
    CHECK(euclid_complexity(1, 0) == 0);
    CHECK(euclid_complexity(2, 5) == euclid_complexity(5, 2)); // unordered
    CHECK_THROWS_AS(euclid_complexity(6, 4), NotCoprime);
    CHECK_THROWS_AS(euclid_complexity(0, 0), NonPositive);
}

TEST_CASE("subtractive oracle") {
    CHECK(euclid_subtractive_oracle(7, 3) == 5);
    CHECK(euclid_subtractive_oracle(2, 1) == 2);
    CHECK(euclid_subtractive_oracle(1, 0) == 0);
    CHECK_THROWS_AS(euclid_subtractive_oracle(Int("10000000000"), 3), InvalidRange);
}

TEST_CASE("complexity agrees with the oracle and reflection, exhaustive to 300") {
    for (long p = 1; p <= 300; ++p)
        for (long q = 0; q <= p; ++q) {
            if (gcd(p, q) != 1) continue;
            Int e = euclid_complexity(p, q);
            CHECK(e == euclid_subtractive_oracle(p, q));
            if (q > 0 && q < p) CHECK(e == euclid_complexity(p, p - q));
        }
}

TEST_CASE("row words") {
    EuclidWord w52 = euclid_word(5, 2);
    CHECK(w52.product == Mat(5, 2, 2, 1));
    CHECK(w52.text() == "R1^2 R2^2");
    CHECK(w52.exponent_sum() == 4);

    EuclidWord w21 = euclid_word(2, 1);
    CHECK(w21.product == Mat(2, 1, 1, 1));
    CHECK(w21.exponent_sum() == 2);

    EuclidWord w31 = euclid_word(3, 1);
    CHECK(w31.product == Mat(3, 2, 1, 1));

    CHECK_THROWS_AS(euclid_word(2, 2), InvalidRange);
    CHECK_THROWS_AS(euclid_word(6, 4), NotCoprime);

    // the four structural properties of the product, swept
    for (long p = 2; p <= 80; ++p)
        for (long q = 1; q < p; ++q) {
            if (gcd(p, q) != 1) continue;
            EuclidWord w = euclid_word(p, q);
            const Mat& m = w.product;
            CHECK(m.a == p);
            CHECK(m.c == q);
            CHECK(m.det() == 1);
            CHECK(m.b > 0);
            CHECK(m.d > 0);
            CHECK(m.b <= m.a);
            CHECK(m.d <= m.c);
            CHECK(w.exponent_sum() == euclid_complexity(p, q));
        }
}

TEST_CASE("reciprocity scan") {
    CHECK(reciprocity_scan(7).empty());
    CHECK(euclid_complexity(7, 3) == 5);
    CHECK(euclid_complexity(7, 5) == 5); // 3*5 = 15 = 1 mod 7
    CHECK(euclid_complexity(5, 2) == euclid_complexity(5, 3));
    CHECK_THROWS_AS(reciprocity_scan(2), InvalidRange);
}
