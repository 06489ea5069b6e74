#include "twofold/double_cover.hpp"

#include <stdexcept>

namespace twofold {

DoubleCover build_double_cover(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> cover_edges;
    for (const auto& [u, v] : g.edges()) {
        cover_edges.emplace_back(u, v + n);  // {(u,0),(v,1)}
        cover_edges.emplace_back(v, u + n);  // {(v,0),(u,1)}
    }
    return DoubleCover{g, Graph::from_edge_list(2 * n, cover_edges), n};
}

std::pair<int, int> project(const DoubleCover& dc, int cover_vertex) {
    if (cover_vertex < 0 || cover_vertex >= 2 * dc.base_n)
        throw std::invalid_argument("cover vertex out of range");
    return {cover_vertex % dc.base_n, cover_vertex / dc.base_n};
}

namespace {

bool base_automorphism(const Graph& g, const Permutation& a) {
    if (a.size() != g.vertex_count()) return false;
    for (const auto& [u, v] : g.edges())
        if (!g.adjacent(a(u), a(v))) return false;
    return true;
}

} // namespace

Permutation lift_automorphism(const DoubleCover& dc, const Permutation& a, bool swap) {
    if (!base_automorphism(dc.base, a))
        throw std::invalid_argument("permutation is not an automorphism of the base graph");
    const int n = dc.base_n;
    std::vector<int> img(static_cast<std::size_t>(2 * n));
    for (int v = 0; v < n; ++v) {
        const int flip = swap ? n : 0;
        img[static_cast<std::size_t>(v)] = a(v) + flip;          // (v,0) -> (a(v), swap)
        img[static_cast<std::size_t>(v + n)] = a(v) + n - flip;  // (v,1) -> (a(v), 1-swap)
    }
    return Permutation::from_images(std::move(img));
}

Permutation swap_map(const DoubleCover& dc) {
    const int n = dc.base_n;
    std::vector<int> img(static_cast<std::size_t>(2 * n));
    for (int v = 0; v < n; ++v) {
        img[static_cast<std::size_t>(v)] = v + n;
        img[static_cast<std::size_t>(v + n)] = v;
    }
    return Permutation::from_images(std::move(img));
}

} // namespace twofold
