#pragma once

#include <vector>

#include "hexflip/lattice.hpp"

namespace hexflip {

// Partial quotients [n1..nk] of p/q >= 1 with n_i >= 1 and nk >= 2 unless
// the whole expansion is [1].
struct ContinuedFraction {
    std::vector<Int> terms;

    Int term_sum() const {
        Int s = 0;
        for (const auto& t : terms) s += t;
        return s;
    }
};

ContinuedFraction continued_fraction(const Int& p, const Int& q);

// Euclid complexity: number of subtractions taking the unordered pair (p,q)
// to (0,1).  Total on coprime pairs >= 0, not both zero; E(0,1) = 0,
// E(1,1) = 1, E(p,q) = E(q,p).
Int euclid_complexity(const Int& p, const Int& q);

// Literal subtractive count; independent oracle for euclid_complexity.
// Rejects pairs above `cutoff` (the division-based sum is the fast path).
Int euclid_subtractive_oracle(const Int& p, const Int& q,
                              const Int& cutoff = Int(1000000));

// One alternating block of row transformations: R1 = [[1,1],[0,1]] adds the
// bottom row to the top, R2 = [[1,0],[1,1]] the other way around.
struct RowBlock {
    int generator = 1; // 1 or 2
    Int exponent;
};

// Factorization R1^{n1} R2^{n2} ... ending in R2 whose product is
// [[p,r],[q,s]] with det 1, 0 < r <= p, 0 < s <= q; the exponent sum is
// E(p,q).  Requires p > q >= 1 coprime.
struct EuclidWord {
    std::vector<RowBlock> blocks;
    Mat product;

    Int exponent_sum() const {
        Int s = 0;
        for (const auto& b : blocks) s += b.exponent;
        return s;
    }
    std::string text() const;
};

EuclidWord euclid_word(const Int& p, const Int& q);

// Sweep over 3 <= p <= p_max: whenever 0 < q,r < p, gcd(p,q) = 1 and
// qr = +-1 (mod p), the complexities E(p,q) and E(p,r) must agree.
// Returns the list of violating triples (expected empty).
struct ReciprocityViolation {
    Int p, q, r;
    Int e_q, e_r;
};

std::vector<ReciprocityViolation> reciprocity_scan(const Int& p_max);

} // namespace hexflip
