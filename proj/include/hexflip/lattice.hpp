#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "hexflip/errors.hpp"

namespace hexflip {

// All arithmetic in this project is exact; Int is an arbitrary-precision
// integer.
using Int = mpz_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int abs(const Int& a) { return ::abs(a); }

// Column vector in Z^2.
struct Vec {
    Int x, y;

    Vec() : x(0), y(0) {}
    Vec(Int xx, Int yy) : x(std::move(xx)), y(std::move(yy)) {}

    bool operator==(const Vec& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec& o) const { return !(*this == o); }
    // Lexicographic; the fixed total order used for canonical forms.
    bool operator<(const Vec& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }

    Vec operator+(const Vec& o) const { return {x + o.x, y + o.y}; }
    Vec operator-(const Vec& o) const { return {x - o.x, y - o.y}; }
    Vec operator-() const { return {-x, -y}; }

    bool is_zero() const { return x == 0 && y == 0; }

    // Representative of {v,-v} with x > 0, or x = 0 and y > 0.
    Vec sign_normalized() const {
        if (x > 0 || (x == 0 && y > 0)) return *this;
        return -*this;
    }
};

inline std::string to_string(const Vec& v) {
    return "(" + v.x.get_str() + "," + v.y.get_str() + ")";
}

// Q(x,y) = x^2 + xy + y^2; positive definite, zero only at the origin.
inline Int q_norm(const Vec& v) { return v.x * v.x + v.x * v.y + v.y * v.y; }

inline Int cross_det(const Vec& v, const Vec& w) { return v.x * w.y - v.y * w.x; }

// Row-major 2x2 integer matrix [[a,b],[c,d]].  Determinant is not enforced
// at construction; operations that need SL(2,Z) or GL(2,Z) check it.
struct Mat {
    Int a, b, c, d;

    Mat() : a(1), b(0), c(0), d(1) {}
    Mat(Int aa, Int bb, Int cc, Int dd)
        : a(std::move(aa)), b(std::move(bb)), c(std::move(cc)), d(std::move(dd)) {}

    static Mat identity() { return {1, 0, 0, 1}; }

    bool operator==(const Mat& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool operator<(const Mat& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        if (c != o.c) return c < o.c;
        return d < o.d;
    }

    Mat operator*(const Mat& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat operator-() const { return {-a, -b, -c, -d}; }

    Vec operator*(const Vec& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }

    bool is_unimodular() const {
        Int s = det();
        return s == 1 || s == -1;
    }
    bool is_sl2() const { return det() == 1; }

    Vec col(int i) const { return i == 0 ? Vec{a, c} : Vec{b, d}; }

    // Exact inverse; only defined for det = +-1.
    Mat inverse() const {
        Int s = det();
        if (s == 1) return {d, -b, -c, a};
        if (s == -1) return {-d, b, c, -a};
        throw NotUnimodularPair("matrix inverse requires det = +-1, got " + s.get_str());
    }

    Mat transpose() const { return {a, c, b, d}; }
};

inline Mat pow(const Mat& m, long k) {
    if (k < 0) return pow(m.inverse(), -k);
    Mat acc = Mat::identity();
    Mat base = m;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

inline std::string to_string(const Mat& m) {
    return "[[" + m.a.get_str() + "," + m.b.get_str() + "],[" + m.c.get_str() +
           "," + m.d.get_str() + "]]";
}

inline void require_sl2(const Mat& m, const char* who) {
    if (!m.is_sl2())
        throw NotSL2(std::string(who) + " requires det(A) = 1, got " + m.det().get_str());
}

// Smith invariants (d1, d2) of an arbitrary 2x2 integer matrix:
// d1 | d2, both >= 0, M integrally equivalent to diag(d1, d2).
// For 2x2 this is d1 = content, d1*d2 = |det|.
inline std::pair<Int, Int> smith_invariants(const Mat& m) {
    Int d1 = gcd(gcd(abs(m.a), abs(m.b)), gcd(abs(m.c), abs(m.d)));
    if (d1 == 0) return {Int(0), Int(0)};
    Int dd = abs(m.det());
    return {d1, dd / d1};
}

// Reduced rational or infinity on the absolute.  den >= 0; den == 0 means
// infinity and then num == 1.
struct ExtRational {
    Int num, den;

    ExtRational() : num(0), den(1) {}
    ExtRational(Int n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    static ExtRational infinity() { return ExtRational(1, 0); }
    bool is_infinity() const { return den == 0; }

    bool operator==(const ExtRational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const ExtRational& o) const { return !(*this == o); }
    bool operator<(const ExtRational& o) const {
        if (den != o.den) {
            // order only used for canonical storage; infinity sorts last
            if (is_infinity()) return false;
            if (o.is_infinity()) return true;
        }
        return num * o.den < o.num * den;
    }

    Vec vec() const { return {num, den}; }

private:
    void normalize() {
        if (den == 0) {
            if (num == 0) throw BadInput("0/0 is not a point of the absolute");
            num = 1;
            return;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Int g = gcd(abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
};

std::string to_string(const ExtRational& r);
// Accepts "p/q", a bare integer, or "inf".
ExtRational parse_rational(const std::string& text);

} // namespace hexflip
