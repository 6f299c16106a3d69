#include "hexflip/fliptree.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

#include "hexflip/euclid.hpp"

namespace hexflip {

FlipPath descend_to_standard(const Hexagon& w) {
    FlipPath path;
    path.hexagons.push_back(w);
    Hexagon cur = w;
    while (!cur.is_standard()) {
        Int before = q_norm(cur.leading_vertex());
        cur = cur.flip_at(cur.leading_index()).result;
        assert(q_norm(cur.leading_vertex()) < before || cur.is_standard());
        path.hexagons.push_back(cur);
    }
    return path;
}

namespace {

// Edges shared by the two descent paths at the W0 end.
size_t common_suffix_edges(const FlipPath& p1, const FlipPath& p2) {
    size_t s = 0;
    while (s + 1 <= p1.length() && s + 1 <= p2.length() &&
           p1.hexagons[p1.hexagons.size() - 2 - s] ==
               p2.hexagons[p2.hexagons.size() - 2 - s])
        ++s;
    return s;
}

} // namespace

Int distance(const Hexagon& w1, const Hexagon& w2) {
    if (w1 == w2) return 0;
    FlipPath p1 = descend_to_standard(w1);
    FlipPath p2 = descend_to_standard(w2);
    size_t s = common_suffix_edges(p1, p2);
    return Int(p1.length()) + Int(p2.length()) - 2 * Int(s);
}

FlipPath geodesic(const Hexagon& w1, const Hexagon& w2) {
    FlipPath p1 = descend_to_standard(w1);
    FlipPath p2 = descend_to_standard(w2);
    size_t s = common_suffix_edges(p1, p2);

    FlipPath out;
    // down from w1 to just above the meeting vertex, then back up towards w2
    for (size_t i = 0; i + s + 1 < p1.hexagons.size(); ++i)
        out.hexagons.push_back(p1.hexagons[i]);
    for (size_t i = p2.hexagons.size() - s; i-- > 0;)
        out.hexagons.push_back(p2.hexagons[i]);
    assert(Int(out.length()) == distance(w1, w2));
    return out;
}

Int matrix_complexity(const Mat& a) {
    require_sl2(a, "matrix_complexity");
    Hexagon w = Hexagon::standard().apply(a);
    if (w.is_standard()) return 0;
    Vec lead = w.leading_vertex();
    assert(lead.x != 0 && lead.y != 0); // only W0 has a vertex on an axis leading
    Int p = abs(lead.x), q = abs(lead.y);
    if (lead.x > 0 && lead.y > 0) return euclid_complexity(p, q);
    return euclid_complexity(p, q) - 1;
}

Int matrix_complexity_by_descent(const Mat& a) {
    require_sl2(a, "matrix_complexity_by_descent");
    return Int(descend_to_standard(Hexagon::standard().apply(a)).length());
}

std::map<Hexagon, int> bfs_ball(const Hexagon& center, int radius, int radius_cap) {
    if (radius < 0) throw InvalidRange("bfs_ball needs radius >= 0");
    if (radius > radius_cap)
        throw RadiusTooLarge("bfs_ball radius " + std::to_string(radius) +
                             " exceeds cap " + std::to_string(radius_cap));
    std::map<Hexagon, int> dist;
    dist.emplace(center, 0);
    std::deque<Hexagon> frontier{center};
    while (!frontier.empty()) {
        Hexagon cur = frontier.front();
        frontier.pop_front();
        int d = dist.at(cur);
        if (d == radius) continue;
        for (const auto& f : cur.flips()) {
            auto [it, fresh] = dist.emplace(f.result, d + 1);
            if (fresh)
                frontier.push_back(f.result);
            else
                // in a tree the only revisit is the parent
                assert(it->second == d - 1);
        }
    }
    return dist;
}

namespace {

std::string dot_node_label(const Hexagon& h) {
    return h.text() + "\\nlead " + to_string(h.leading_vertex());
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

} // namespace

std::string export_dot_ball(const Hexagon& center, int radius, int radius_cap) {
    auto ball = bfs_ball(center, radius, radius_cap);
    std::map<Hexagon, int> id;
    int next = 0;
    for (const auto& [h, d] : ball) id.emplace(h, next++);

    std::ostringstream out;
    out << "graph flipball {\n";
    for (const auto& [h, d] : ball)
        out << "  n" << id.at(h) << " [label=" << quote(dot_node_label(h)) << "];\n";
    for (const auto& [h, d] : ball) {
        if (d == radius) continue;
        for (const auto& f : h.flips()) {
            auto it = id.find(f.result);
            if (it == id.end() || ball.at(f.result) != d + 1) continue;
            // parent-to-child edges only; in a tree that lists each edge once
            out << "  n" << id.at(h) << " -- n" << it->second << " [label="
                << quote(to_string(f.replaced)) << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string export_dot_path(const FlipPath& path) {
    std::ostringstream out;
    out << "graph flippath {\n";
    for (size_t i = 0; i < path.hexagons.size(); ++i)
        out << "  n" << i << " [label=" << quote(dot_node_label(path.hexagons[i]))
            << "];\n";
    for (size_t i = 0; i + 1 < path.hexagons.size(); ++i) {
        // identify the pair replaced by this step
        const Hexagon& a = path.hexagons[i];
        const Hexagon& b = path.hexagons[i + 1];
        std::string lbl;
        for (const auto& p : a.pairs())
            if (b.index_of(p) < 0) lbl = to_string(p);
        out << "  n" << i << " -- n" << i + 1 << " [label=" << quote(lbl) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot_chain(const std::vector<Hexagon>& chain) {
    FlipPath p;
    p.hexagons = chain;
    return export_dot_path(p);
}

} // namespace hexflip
