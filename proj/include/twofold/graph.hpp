// graph.hpp: simple undirected graphs on dense vertices 0..n-1, stored as
// bit rows (one adjacency bitset per vertex) so the search modules can count
// neighbours inside a cell with a handful of popcounts. The arc-set view
// treats every edge {u,v} as the two opposite arcs (u,v), (v,u).
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace twofold {

using Arc = std::pair<int, int>;

class Graph {
public:
    Graph() = default;

    // n isolated vertices.
    explicit Graph(int n);

    // Throws std::invalid_argument on loops or out-of-range endpoints.
    // Duplicate edges collapse (set semantics).
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    static Graph cycle(int n);     // C_n, n >= 3
    static Graph path(int n);      // P_n, n >= 1
    static Graph complete(int n);  // K_n
    static Graph petersen();

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool adjacent(int u, int v) const {
        return (bits_[row_index(u) + static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u;
    }

    int degree(int v) const;
    std::vector<int> neighborhood(int v) const;

    // Raw row access for the refinement search: words_per_row() 64-bit words.
    const std::uint64_t* row(int v) const { return bits_.data() + row_index(v); }
    int words_per_row() const { return words_; }

    std::vector<std::pair<int, int>> edges() const;  // u < v
    std::vector<Arc> arcs() const;                   // both orientations

    // True iff no two vertices share the same (open) neighbourhood.
    bool is_vertex_determining() const;

    // All triangles as sorted triples, each listed once.
    std::vector<std::array<int, 3>> triangles() const;

    bool is_triangle(int x, int y, int z) const;

    // True iff every edge {u,v} has a common neighbour.
    bool every_edge_on_triangle() const;

    // BFS distances from src; -1 marks unreachable vertices.
    std::vector<int> bfs_distances(int src) const;

    // nullopt is the infinity marker for disconnected graphs.
    std::optional<int> diameter() const;

    bool is_connected() const;

    // A 2-colouring (vector of 0/1 per vertex) if one exists, else nullopt.
    std::optional<std::vector<int>> bipartition() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    friend Graph relabel(const Graph&, const class Permutation&);
    void add_edge(int u, int v);
    std::size_t row_index(int v) const { return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_); }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Graph with vertices renamed by p: u~v in the result iff p^-1(u)~p^-1(v)
// in g. Used by the relabelling-equivariance property tests.
Graph relabel(const Graph& g, const class Permutation& p);

// Ordered-pair arc sets; the triangle-image structures of the ztrail module
// live here when they are not self-paired.
struct MixedGraph {
    int n = 0;
    std::set<Arc> arcs;

    // Throws on loops or out-of-range endpoints; duplicates collapse.
    static MixedGraph from_arcs(int n, const std::vector<Arc>& arc_list);

    bool has_arc(int u, int v) const { return arcs.count({u, v}) > 0; }
    std::vector<int> in_neighborhood(int v) const;
    std::vector<int> out_neighborhood(int v) const;
    int in_degree(int v) const { return static_cast<int>(in_neighborhood(v).size()); }
    int out_degree(int v) const { return static_cast<int>(out_neighborhood(v).size()); }
    bool self_paired() const;
};

// Bijective internal-index <-> external-name table for reports that follow
// the source material's named vertices (a, b, c, ...).
struct VertexLabeling {
    std::vector<std::string> names;         // index -> name
    std::map<std::string, int> index_of;    // name -> index

    static VertexLabeling from_names(std::vector<std::string> names);
};

} // namespace twofold
