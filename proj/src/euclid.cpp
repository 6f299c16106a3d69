#include "hexflip/euclid.hpp"

#include <algorithm>
#include <cassert>

namespace hexflip {

namespace {

void require_coprime(const Int& p, const Int& q, const char* who) {
    if (gcd(abs(p), abs(q)) != 1)
        throw NotCoprime(std::string(who) + ": gcd(" + p.get_str() + "," + q.get_str() +
                         ") != 1");
}

} // namespace

ContinuedFraction continued_fraction(const Int& p, const Int& q) {
    if (p <= 0 || q <= 0) throw NonPositive("continued_fraction needs p, q >= 1");
    if (p < q) throw InvalidRange("continued_fraction needs p >= q");
    require_coprime(p, q, "continued_fraction");

    ContinuedFraction cf;
    Int a = p, b = q;
    while (b > 0) {
        Int n, r;
        mpz_fdiv_qr(n.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        cf.terms.push_back(n);
        a = b;
        b = r;
    }
    // Division never emits a trailing 1 except for the total expansion [1].
    if (cf.terms.size() >= 2 && cf.terms.back() == 1) {
        cf.terms.pop_back();
        cf.terms.back() += 1;
    }
    assert(cf.terms.size() == 1 || cf.terms.back() >= 2);
    return cf;
}

Int euclid_complexity(const Int& p, const Int& q) {
    if (p < 0 || q < 0) throw NonPositive("euclid_complexity needs p, q >= 0");
    if (p == 0 && q == 0) throw NonPositive("euclid_complexity undefined at (0,0)");
    require_coprime(p, q, "euclid_complexity");
    Int hi = std::max(p, q), lo = std::min(p, q);
    if (lo == 0) return 0; // (0,1) and (1,0) are terminal
    return continued_fraction(hi, lo).term_sum();
}

Int euclid_subtractive_oracle(const Int& p, const Int& q, const Int& cutoff) {
    if (p < 0 || q < 0) throw NonPositive("euclid_subtractive_oracle needs p, q >= 0");
    if (p == 0 && q == 0) throw NonPositive("euclid_subtractive_oracle undefined at (0,0)");
    require_coprime(p, q, "euclid_subtractive_oracle");
    if (std::max(p, q) > cutoff)
        throw InvalidRange("subtractive oracle cutoff exceeded; use euclid_complexity");

    Int hi = std::max(p, q), lo = std::min(p, q);
    Int count = 0;
    while (lo > 0) {
        hi -= lo;
        ++count;
        if (hi < lo) std::swap(hi, lo);
    }
    return count;
}

std::string EuclidWord::text() const {
    std::string out;
    for (const auto& b : blocks) {
        out += "R";
        out += (b.generator == 1 ? "1" : "2");
        if (b.exponent != 1) out += "^" + b.exponent.get_str();
        out += " ";
    }
    if (!out.empty()) out.pop_back();
    return out;
}

EuclidWord euclid_word(const Int& p, const Int& q) {
    if (q < 1 || p <= q) throw InvalidRange("euclid_word needs p > q >= 1");
    require_coprime(p, q, "euclid_word");

    ContinuedFraction cf = continued_fraction(p, q);
    const size_t k = cf.terms.size();

    // R1^{n1} R2^{n2} ... R_eps^{n_k - 1} R2; the trailing R2 merges with the
    // last block when k is even.
    EuclidWord word;
    auto push = [&word](int gen, const Int& e) {
        if (e == 0) return;
        if (!word.blocks.empty() && word.blocks.back().generator == gen)
            word.blocks.back().exponent += e;
        else
            word.blocks.push_back({gen, e});
    };
    for (size_t i = 0; i + 1 < k; ++i) push(i % 2 == 0 ? 1 : 2, cf.terms[i]);
    push(k % 2 == 1 ? 1 : 2, cf.terms[k - 1] - 1);
    push(2, Int(1));

    const Mat r1(1, 1, 0, 1), r2(1, 0, 1, 1);
    Mat prod = Mat::identity();
    for (const auto& b : word.blocks) {
        const Mat& g = b.generator == 1 ? r1 : r2;
        for (Int i = 0; i < b.exponent; ++i) prod = prod * g;
    }
    word.product = prod;

    assert(prod.a == p && prod.c == q);
    assert(prod.det() == 1);
    assert(prod.b > 0 && prod.d > 0);
    assert(prod.b <= prod.a && prod.d <= prod.c);
    return word;
}

std::vector<ReciprocityViolation> reciprocity_scan(const Int& p_max) {
    if (p_max < 3) throw InvalidRange("reciprocity_scan needs p_max >= 3");
    std::vector<ReciprocityViolation> bad;
    for (Int p = 3; p <= p_max; ++p) {
        // E(p,q) for all units q mod p, then compare along qr = +-1 (mod p).
        std::vector<Int> e(mpz_get_ui(p.get_mpz_t()), Int(-1));
        auto idx = [](const Int& v) { return mpz_get_ui(v.get_mpz_t()); };
        for (Int q = 1; q < p; ++q)
            if (gcd(p, q) == 1) e[idx(q)] = euclid_complexity(p, q);
        for (Int q = 1; q < p; ++q) {
            if (e[idx(q)] < 0) continue;
            Int qinv;
            if (mpz_invert(qinv.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t()) == 0) continue;
            for (Int r : {qinv, Int(p - qinv)}) {
                if (r <= 0 || r >= p) continue;
                if (e[idx(q)] != e[idx(r)])
                    bad.push_back({p, q, r, e[idx(q)], e[idx(r)]});
            }
        }
    }
    return bad;
}

} // namespace hexflip
