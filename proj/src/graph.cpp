#include "twofold/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "twofold/permutation.hpp"

namespace twofold {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
}

void Graph::add_edge(int u, int v) {
    bits_[row_index(u) + static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[row_index(v) + static_cast<std::size_t>(u >> 6)] |= std::uint64_t{1} << (u & 63);
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop not allowed");
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::petersen() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes v -- v+5.
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);
        g.add_edge(5 + v, 5 + (v + 2) % 5);
        g.add_edge(v, v + 5);
    }
    return g;
}

int Graph::edge_count() const {
    int total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total / 2;
}

int Graph::degree(int v) const {
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<int> Graph::neighborhood(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    std::vector<int> out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t word = r[w];
        while (word) {
            const int b = std::countr_zero(word);
            out.push_back(w * 64 + b);
            word &= word - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighborhood(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<Arc> Graph::arcs() const {
    std::vector<Arc> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighborhood(u)) out.emplace_back(u, v);
    return out;
}

bool Graph::is_vertex_determining() const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
            bool equal = true;
            const std::uint64_t* ru = row(u);
            const std::uint64_t* rv = row(v);
            for (int w = 0; w < words_ && equal; ++w)
                if (ru[w] != rv[w]) equal = false;
            if (equal) return false;
        }
    return true;
}

std::vector<std::array<int, 3>> Graph::triangles() const {
    std::vector<std::array<int, 3>> out;
    for (int x = 0; x < n_; ++x)
        for (int y : neighborhood(x)) {
            if (y <= x) continue;
            // common neighbours above y: intersect the two rows.
            const std::uint64_t* rx = row(x);
            const std::uint64_t* ry = row(y);
            for (int w = 0; w < words_; ++w) {
                std::uint64_t word = rx[w] & ry[w];
                while (word) {
                    const int z = w * 64 + std::countr_zero(word);
                    word &= word - 1;
                    if (z > y) out.push_back({x, y, z});
                }
            }
        }
    return out;
}

bool Graph::is_triangle(int x, int y, int z) const {
    if (x == y || y == z || x == z) return false;
    return adjacent(x, y) && adjacent(y, z) && adjacent(x, z);
}

bool Graph::every_edge_on_triangle() const {
    for (const auto& [u, v] : edges()) {
        const std::uint64_t* ru = row(u);
        const std::uint64_t* rv = row(v);
        bool common = false;
        for (int w = 0; w < words_ && !common; ++w)
            if (ru[w] & rv[w]) common = true;
        if (!common) return false;
    }
    return true;
}

std::vector<int> Graph::bfs_distances(int src) const {
    if (src < 0 || src >= n_) throw std::invalid_argument("vertex out of range");
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    std::deque<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : neighborhood(u))
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

std::optional<int> Graph::diameter() const {
    if (n_ == 0) return 0;
    int best = 0;
    for (int v = 0; v < n_; ++v) {
        for (int d : bfs_distances(v)) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    for (int d : bfs_distances(0))
        if (d < 0) return false;
    return true;
}

std::optional<std::vector<int>> Graph::bipartition() const {
    std::vector<int> colour(static_cast<std::size_t>(n_), -1);
    for (int start = 0; start < n_; ++start) {
        if (colour[static_cast<std::size_t>(start)] >= 0) continue;
        colour[static_cast<std::size_t>(start)] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : neighborhood(u)) {
                if (colour[static_cast<std::size_t>(v)] < 0) {
                    colour[static_cast<std::size_t>(v)] = 1 - colour[static_cast<std::size_t>(u)];
                    queue.push_back(v);
                } else if (colour[static_cast<std::size_t>(v)] == colour[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return colour;
}

Graph relabel(const Graph& g, const Permutation& p) {
    if (p.size() != g.vertex_count()) throw std::invalid_argument("permutation size mismatch in relabel");
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(p(u), p(v));
    return Graph::from_edge_list(g.vertex_count(), edges);
}

MixedGraph MixedGraph::from_arcs(int n, const std::vector<Arc>& arc_list) {
    MixedGraph m;
    m.n = n;
    for (const auto& [u, v] : arc_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("arc endpoint out of range");
        if (u == v) throw std::invalid_argument("loop not allowed");
        m.arcs.insert({u, v});
    }
    return m;
}

std::vector<int> MixedGraph::in_neighborhood(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : arcs)
        if (b == v) out.push_back(a);
    return out;
}

std::vector<int> MixedGraph::out_neighborhood(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : arcs)
        if (a == v) out.push_back(b);
    return out;
}

bool MixedGraph::self_paired() const {
    for (const auto& [u, v] : arcs)
        if (!arcs.count({v, u})) return false;
    return true;
}

VertexLabeling VertexLabeling::from_names(std::vector<std::string> names) {
    VertexLabeling lab;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
        if (!lab.index_of.emplace(names[static_cast<std::size_t>(i)], i).second)
            throw std::invalid_argument("duplicate vertex name: " + names[static_cast<std::size_t>(i)]);
    }
    lab.names = std::move(names);
    return lab;
}

} // namespace twofold
