#pragma once

#include <optional>
#include <vector>

#include "hexflip/fliptree.hpp"

namespace hexflip {

// Trace classification of an SL(2,Z) operator.  Parabolic covers +-I (n = 0);
// elliptic operators have |trace| < 2 and period 3, 4 or 6.
struct OperatorClass {
    enum class Kind { Elliptic, Parabolic, Hyperbolic };
    Kind kind = Kind::Hyperbolic;
    int period = 0; // elliptic only
    int sign = 0;   // parabolic only: trace / 2
    Int twist;      // parabolic only: n in the normal form +-[[1,n],[0,1]]

    std::string text() const;
};

OperatorClass classify(const Mat& a);

// Periodic operators are the elliptic ones together with +-I.
bool is_periodic(const Mat& a);

// Geodesic-overlap minimality test: c(A) <= 1, or the penultimate hexagon of
// the geodesic W0 -> A W0 differs from A applied to its first hexagon.
bool is_minimal(const Mat& a);

struct MinimizationResult {
    Mat conjugator;          // B with minimal = B^-1 A B; I when A is minimal
    Mat minimal;             // a minimal matrix of the operator
    Int operator_complexity; // c of the conjugacy class
};

// Walks the geodesic overlap down to a minimal hexagon and rebases there.
MinimizationResult minimize(const Mat& a);

Int operator_complexity(const Mat& a);

// All minimal matrices of the operator: adjacent-vertex bases of the minimal
// hexagons in one fundamental domain of the mainstream, deduplicated.
// At most 3 c(op) elements for non-periodic operators.
std::vector<Mat> minimal_matrices(const Mat& a);

// The line of minimal hexagons for a non-periodic operator; returns the
// c(op)*(2k+1)+1 consecutive hexagons spanning A^-k V ... A^{k+1} V.
std::vector<Hexagon> mainstream(const Mat& a, int window);

// c(A) mod 2; the unique epimorphism of the modular group onto Z_2.
int parity(const Mat& a);

struct PowerRow {
    long k = 0;
    Int c_matrix;   // c(A^k)
    Int c_operator; // c of the operator A^k
    bool minimal = false;
};

struct PowerLawReport {
    Int c_operator;      // c of the operator A
    Int c_matrix;        // c(A)
    Int defect;          // b = c(A) - c(op); expected constant, even, >= 0
    bool linear = true;  // c_op(A^k) = |k| c_op(A) throughout
    bool defect_constant = true;
    bool defect_even_nonneg = true;
    bool minimal_consistent = true; // A^k minimal iff A minimal
    std::vector<PowerRow> rows;

    bool ok() const {
        return linear && defect_constant && defect_even_nonneg && minimal_consistent;
    }
};

// Verifies the power laws for 1 <= |k| <= k_max.  Periodic operators are
// rejected: quarter-turn rotations satisfy c(A^k) < |k| c(A).
PowerLawReport power_law_check(const Mat& a, int k_max);

// Empirical check that mainstream leading vertices and the boundaries of the
// four eigenline-sector convex hulls coincide, inside a box of coordinates
// <= box (default: the Q-norm of the leading vertex of A^3 W0).
bool klein_hull_check(const Mat& a, std::optional<Int> box = std::nullopt);

// Conjugation-invariant key: the parabolic normal form, or the
// lexicographically least minimal matrix.
std::string conjugacy_class_key(const Mat& a);

} // namespace hexflip
