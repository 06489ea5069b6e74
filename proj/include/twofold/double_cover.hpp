// double_cover.hpp: the canonical double cover B(G) on V x {0,1}.
// Encoding: (v, 0) -> index v, (v, 1) -> index v + n. The colour classes are
// therefore positional: V_0 = indices < n, V_1 = indices >= n, which makes
// the class-stabiliser computation a cheap index predicate.
#pragma once

#include "twofold/graph.hpp"
#include "twofold/permutation.hpp"

namespace twofold {

struct DoubleCover {
    Graph base;   // retained by value: extraction and reporting need it
    Graph graph;  // 2n vertices, {(u,0),(v,1)} present iff {u,v} in base
    int base_n = 0;
};

DoubleCover build_double_cover(const Graph& g);

// Inverse of the encoding: cover index -> (base vertex, colour bit).
// Throws std::invalid_argument when the index is out of range.
std::pair<int, int> project(const DoubleCover& dc, int cover_vertex);

// sigma(v, e) = (a(v), e) when swap is false, (a(v), e+1) when swap is true.
// Throws when a is not an automorphism of the base.
Permutation lift_automorphism(const DoubleCover& dc, const Permutation& a, bool swap);

// The colour-swap involution delta: (v, e) -> (v, e+1).
Permutation swap_map(const DoubleCover& dc);

} // namespace twofold
