#include "hexflip/hexagon.hpp"

#include <cassert>
#include <sstream>

namespace hexflip {

std::optional<Hexagon> Hexagon::try_canonicalize(const Vec& a, const Vec& b, const Vec& c) {
    if (a.is_zero() || b.is_zero() || c.is_zero()) return std::nullopt;
    Vec n[3] = {a.sign_normalized(), b.sign_normalized(), c.sign_normalized()};

    // The normalized representatives are three consecutive hexagon vertices,
    // so exactly one of them is the sum of the other two.
    int middle = -1;
    for (int i = 0; i < 3; ++i) {
        const Vec& p = n[(i + 1) % 3];
        const Vec& q = n[(i + 2) % 3];
        if (n[i] == p + q) {
            if (middle != -1) return std::nullopt;
            middle = i;
        }
    }
    if (middle == -1) return std::nullopt;

    Vec u = n[(middle + 1) % 3];
    Vec w = n[(middle + 2) % 3];
    if (w < u) std::swap(u, w);
    Int cd = cross_det(u, w);
    if (cd != 1 && cd != -1) return std::nullopt;
    return Hexagon(u, n[middle], w);
}

Hexagon Hexagon::standard() {
    return from_vertices(Vec(1, 0), Vec(0, 1), Vec(1, -1));
}

Hexagon Hexagon::from_pair(const Vec& X, const Vec& Z) {
    Int cd = cross_det(X, Z);
    if (cd != 1 && cd != -1)
        throw NotUnimodularPair("hexagon pair needs |cross_det| = 1, got " + cd.get_str());
    auto h = try_canonicalize(X, Z, X + Z);
    assert(h.has_value());
    return *h;
}

Hexagon Hexagon::from_vertices(const Vec& a, const Vec& b, const Vec& c) {
    auto h = try_canonicalize(a, b, c);
    if (!h) throw NotUnimodularPair("vertices do not span an admissible hexagon");
    return *h;
}

bool is_admissible(const Vec& a, const Vec& b, const Vec& c) {
    return Hexagon::try_canonicalize(a, b, c).has_value();
}

std::array<Vec, 6> Hexagon::vertices() const {
    // Angular (counterclockwise) order within the half-plane is x, v, y where
    // {x,y} = {u,w} and cross_det(x, v) > 0.
    Vec first = u_, last = w_;
    if (cross_det(first, v_) < 0) std::swap(first, last);
    return {first, v_, last, -first, -v_, -last};
}

bool Hexagon::is_standard() const {
    return v_ == Vec(1, 0) && u_ == Vec(0, 1) && w_ == Vec(1, -1);
}

int Hexagon::leading_index() const {
    if (is_standard()) return 1; // (1,0) by convention on the six-way tie
    Int qu = q_norm(u_), qv = q_norm(v_), qw = q_norm(w_);
    if (qu > qv && qu > qw) return 0;
    if (qv > qu && qv > qw) return 1;
    assert(qw > qu && qw > qv); // off W0 the leading pair is unique
    return 2;
}

Vec Hexagon::leading_vertex() const { return pairs()[size_t(leading_index())]; }

int Hexagon::index_of(const Vec& pair) const {
    Vec p = pair.sign_normalized();
    if (p == u_) return 0;
    if (p == v_) return 1;
    if (p == w_) return 2;
    return -1;
}

Hexagon::Flip Hexagon::flip_at(int i) const {
    // Write the replaced pair as sigma + mu over the other two pairs and
    // substitute sigma - mu.  With v = u + w:
    //   replace v: {u, w} stay, new pair u - w
    //   replace u: u = v - w,  new pair v + w
    //   replace w: w = v - u,  new pair v + u
    Vec keep1, keep2, fresh;
    switch (i) {
        case 0: keep1 = v_; keep2 = w_; fresh = v_ + w_; break;
        case 1: keep1 = u_; keep2 = w_; fresh = u_ - w_; break;
        case 2: keep1 = u_; keep2 = v_; fresh = u_ + v_; break;
        default: throw BadInput("flip index must be 0, 1 or 2");
    }
    Flip f{from_vertices(keep1, keep2, fresh), pairs()[size_t(i)], fresh.sign_normalized()};
    return f;
}

std::vector<Hexagon::Flip> Hexagon::flips() const {
    auto f0 = flip_at(0), f1 = flip_at(1), f2 = flip_at(2);
    assert(!(f0.result == f1.result) && !(f0.result == f2.result) &&
           !(f1.result == f2.result));
    return {f0, f1, f2};
}

Hexagon Hexagon::apply(const Mat& m) const {
    if (!m.is_unimodular())
        throw NotUnimodularPair("hexagon action needs det = +-1");
    return from_vertices(m * u_, m * v_, m * w_);
}

std::string Hexagon::text() const {
    return "[" + to_string(u_) + "," + to_string(v_) + "," + to_string(w_) + "]";
}

Mat transition_from_standard(const Hexagon& h) {
    // A(1,0) = v, A(0,1) = x, A(1,-1) = v - x: pairs {v, x, v-x}, so take the
    // middle for the first column and the outer pair giving det +1.
    Vec v = h.middle();
    Vec x = h.outer_lo();
    if (cross_det(v, x) != 1) x = h.outer_hi();
    Mat a(v.x, x.x, v.y, x.y);
    assert(a.det() == 1);
    assert(Hexagon::standard().apply(a) == h);
    return a;
}

Hexagon parse_hexagon(const std::string& text) {
    // Expected shape: [(x1,y1),(x2,y2),(x3,y3)]
    std::vector<Int> nums;
    std::string cur;
    for (char ch : text) {
        if (ch == '-' || (ch >= '0' && ch <= '9')) {
            cur += ch;
        } else if (!cur.empty()) {
            nums.emplace_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) nums.emplace_back(cur);
    if (nums.size() != 6) throw BadInput("hexagon text needs six integers: " + text);
    return Hexagon::from_vertices({nums[0], nums[1]}, {nums[2], nums[3]},
                                  {nums[4], nums[5]});
}

} // namespace hexflip
