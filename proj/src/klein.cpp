#include <cassert>
#include <set>
#include <vector>

#include "hexflip/conjugacy.hpp"

namespace hexflip {

namespace {

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// floor(x * sqrt(D)); D > 0 and not a perfect square.
Int floor_mul_sqrt(const Int& x, const Int& D) {
    if (x == 0) return 0;
    Int s, arg = x * x * D;
    mpz_sqrt(s.get_mpz_t(), arg.get_mpz_t());
    return x > 0 ? s : Int(-s - 1);
}

// sign of c - x*sqrt(D); nonzero whenever x != 0.
int surd_cmp(const Int& c, const Int& x, const Int& D) {
    if (x == 0) return c == 0 ? 0 : (c > 0 ? 1 : -1);
    if (c <= 0 && x > 0) return -1;
    if (c >= 0 && x < 0) return 1;
    Int lhs = c * c, rhs = x * x * D;
    assert(lhs != rhs);
    int base = lhs < rhs ? -1 : 1;
    return c > 0 ? base : -base;
}

// floor((P + x*sqrt(D)) / Q) with Q != 0.
Int floor_affine_surd(const Int& P, const Int& x, const Int& D, const Int& Q) {
    if (x == 0) return fdiv(P, Q);
    if (Q < 0) return -floor_affine_surd(P, x, D, -Q) - 1; // value is irrational
    Int f = floor_mul_sqrt(x, D);
    Int lo = fdiv(P + f, Q), hi = fdiv(P + f + 1, Q);
    if (lo == hi) return lo;
    return surd_cmp(hi * Q - P, x, D) <= 0 ? hi : lo;
}

// Monotone-chain hull fed with x-sorted points.
void chain_push(std::vector<Vec>& chain, const Vec& p, int orient) {
    while (chain.size() >= 2) {
        const Vec& a = chain[chain.size() - 2];
        const Vec& b = chain.back();
        Int cr = cross_det(b - a, p - a);
        if (orient > 0 ? cr <= 0 : cr >= 0)
            chain.pop_back();
        else
            break;
    }
    chain.push_back(p);
}

// Twice the polar form of Q(x,y) = x^2 + xy + y^2.
Int polar2(const Vec& v, const Vec& w) {
    return 2 * v.x * w.x + v.x * w.y + v.y * w.x + 2 * v.y * w.y;
}

// Lattice points of segment [p, q] with Q-norm <= bound (convex window).
void collect_edge_points(const Vec& p, const Vec& q, const Int& bound,
                         std::set<std::pair<Int, Int>>& out) {
    Vec d = q - p;
    if (d.is_zero()) {
        if (q_norm(p) <= bound) out.insert({p.x, p.y});
        return;
    }
    Int g = gcd(abs(d.x), abs(d.y));
    Vec step(d.x / g, d.y / g);
    // Q(p + i step) is convex in i; locate the integer argmin and expand.
    Int tnum = -polar2(p, step), tden = 2 * q_norm(step);
    Int i0 = fdiv(tnum, tden);
    if (i0 < 0) i0 = 0;
    if (i0 > g) i0 = g;
    for (Int i = i0; i >= 0; --i) {
        Vec pt = p + Vec(step.x * i, step.y * i);
        if (q_norm(pt) > bound) break;
        out.insert({pt.x, pt.y});
    }
    for (Int i = i0 + 1; i <= g; ++i) {
        Vec pt = p + Vec(step.x * i, step.y * i);
        if (q_norm(pt) > bound) break;
        out.insert({pt.x, pt.y});
    }
}

} // namespace

bool klein_hull_check(const Mat& a_in, std::optional<Int> box) {
    require_sl2(a_in, "klein_hull_check");
    Int t0 = a_in.trace();
    if (t0 <= 2 && t0 >= -2)
        throw NotHyperbolic("klein_hull_check needs |trace| > 2");
    Mat a = t0 > 0 ? a_in : -a_in; // positive eigenvalues; same hexagon action

    const Int T = a.trace();
    const Int D = T * T - 4; // never a square for T > 2
    assert(a.b != 0);        // det 1 with b = 0 forces |trace| = 2

    std::vector<Hexagon> ms1 = mainstream(a, 1);
    std::vector<Hexagon> ms3 = mainstream(a, 3);
    Int q_max = 0;
    for (const auto& h : ms1) q_max = std::max(q_max, q_norm(h.leading_vertex()));
    std::set<std::pair<Int, Int>> stream_leads;
    for (const auto& h : ms3) {
        // all vertices achieving the leading norm (the standard hexagon ties)
        Int lead_norm = q_norm(h.leading_vertex());
        for (const auto& p : h.pairs())
            if (q_norm(p) == lead_norm) stream_leads.insert({p.x, p.y});
    }

    Int n = box.value_or(q_norm(Hexagon::standard().apply(pow(a, 3)).leading_vertex()));
    if (n < 8) n = 8;

    // The eigenlines are det(v_i, p) = 0 with v_i = (2b, T - 2a -+ sqrt(D)).
    // For p = (x,y): det(v_1, p) = r - x sqrt(D), det(v_2, p) = r + x sqrt(D),
    // r = 2b y - (T - 2a) x.  The four sign patterns are the four sectors;
    // each meets a column x in a y-interval, so column extremes generate the
    // hulls.
    const Int Q2b = 2 * a.b;
    const Int coefP = T - 2 * a.a;

    struct SectorChains {
        std::vector<Vec> lower, upper;
    };
    SectorChains sect[4]; // index: (e1>0)*2 + (e2>0)

    for (Int x = -n; x <= n; ++x) {
        Int f1, f2;
        bool column_rational = (x == 0);
        if (!column_rational) {
            f1 = floor_affine_surd(coefP * x, x, D, Q2b);
            f2 = floor_affine_surd(coefP * x, -x, D, Q2b);
        }
        for (int s = 0; s < 4; ++s) {
            int e1 = (s & 2) ? 1 : -1;
            int e2 = (s & 1) ? 1 : -1;
            Int lo = -n, hi = n;
            if (column_rational) {
                // both functionals reduce to 2 b y
                if (e1 != e2) continue;
                bool positive_y = (a.b > 0) == (e1 > 0);
                if (positive_y) lo = std::max(lo, Int(1));
                else hi = std::min(hi, Int(-1));
            } else {
                if ((a.b > 0) == (e1 > 0)) lo = std::max(lo, Int(f1 + 1));
                else hi = std::min(hi, f1);
                if ((a.b > 0) == (e2 > 0)) lo = std::max(lo, Int(f2 + 1));
                else hi = std::min(hi, f2);
            }
            if (lo > hi) continue;
            chain_push(sect[s].lower, Vec(x, lo), +1);
            chain_push(sect[s].upper, Vec(x, hi), -1);
        }
    }

    // Hull boundary lattice points near the origin (Q <= q_max); the box is
    // larger by a factor of roughly lambda^4, so no box artifact reaches them.
    std::set<std::pair<Int, Int>> boundary;
    for (const auto& chains : sect) {
        std::vector<Vec> poly = chains.lower;
        for (auto it = chains.upper.rbegin(); it != chains.upper.rend(); ++it)
            poly.push_back(*it);
        if (poly.empty()) continue;
        for (size_t i = 0; i < poly.size(); ++i)
            collect_edge_points(poly[i], poly[(i + 1) % poly.size()], q_max, boundary);
    }

    // Every window-1 mainstream leading vertex lies on a hull boundary.
    for (const auto& h : ms1) {
        Vec lv = h.leading_vertex();
        if (!boundary.count({lv.x, lv.y}) && !boundary.count({-lv.x, -lv.y}))
            return false;
    }
    // Every nearby coprime hull-boundary point leads some mainstream hexagon.
    for (const auto& [px, py] : boundary) {
        if (gcd(abs(px), abs(py)) != 1) continue;
        Vec p = Vec(px, py).sign_normalized();
        if (!stream_leads.count({p.x, p.y})) return false;
    }
    return true;
}

} // namespace hexflip
