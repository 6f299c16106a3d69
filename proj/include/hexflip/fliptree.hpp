#pragma once

#include <map>
#include <vector>

#include "hexflip/hexagon.hpp"

namespace hexflip {

// Simple path in the flip tree; consecutive entries differ by one flip.
struct FlipPath {
    std::vector<Hexagon> hexagons;

    size_t length() const { return hexagons.empty() ? 0 : hexagons.size() - 1; }
};

// Geodesic from W to W0: each step flips the unique leading pair, which
// strictly decreases the leading Q-norm.
FlipPath descend_to_standard(const Hexagon& w);

// Tree distance, computed by trimming the common suffix of the two descent
// paths.
Int distance(const Hexagon& w1, const Hexagon& w2);

// The unique simple path from w1 to w2.
FlipPath geodesic(const Hexagon& w1, const Hexagon& w2);

// c(A) = d(W0, A W0) for A in SL(2,Z).  Closed form via the leading vertex
// (p,q) of A W0: E(|p|,|q|) when pq > 0 and E(|p|,|q|) - 1 when pq < 0.
Int matrix_complexity(const Mat& a);

// Same number by explicit descent; cross-check for the closed form.
Int matrix_complexity_by_descent(const Mat& a);

// All hexagons within `radius` flips of `center`, with their distances.
// Independent BFS oracle for the tree structure; ball sizes are
// 1 + 3(2^r - 1).
std::map<Hexagon, int> bfs_ball(const Hexagon& center, int radius,
                                int radius_cap = 12);

// DOT (graphviz) renderings.  Nodes carry the canonical hexagon text plus
// the leading vertex; edges the replaced vertex pair.
std::string export_dot_ball(const Hexagon& center, int radius, int radius_cap = 12);
std::string export_dot_path(const FlipPath& path);
std::string export_dot_chain(const std::vector<Hexagon>& chain); // e.g. a mainstream window

} // namespace hexflip
