// census.hpp: batch stability classification over graph6 corpora, plus the
// minimal-instance query used to hunt for the smallest graphs with a given
// combination of properties.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twofold/aut.hpp"
#include "twofold/tf.hpp"
#include "twofold/ztrail.hpp"

namespace twofold {

// The TF group is brute-forced (the independent oracle) up to this size and
// read off the cover's class stabiliser beyond it; the two provably agree,
// so the bound only trades scan time for search time. Lower than the
// oracle's own default because a census multiplies the cost by corpus size.
inline constexpr int kDefaultCensusOracleBound = 6;

struct CensusRecord {
    int index = 0;  // position in the input stream, 0-based
    std::string graph6;
    // Set instead of the fields below when the input line failed to parse.
    std::optional<std::string> error;

    int n = 0;
    int edge_count = 0;
    int triangle_count = 0;
    bool connected = false;
    bool bipartite = false;
    bool vertex_determining = false;
    bool every_edge_on_triangle = false;
    std::uint64_t aut_order = 0;
    std::uint64_t cover_aut_order = 0;
    std::uint64_t tf_order = 0;
    bool unstable_by_definition = false;
    bool has_nontrivial_tf = false;
    bool tf_criterion_consistent = true;
    // Per-configuration counts over all (triangle, non-trivial TF element)
    // pairs; absent when the TF element list is not enumerable under the
    // caps.
    std::optional<std::map<TriangleImageConfig, int>> triangle_config_counts;
};

struct CensusOptions {
    int oracle_bound = kDefaultCensusOracleBound;
    std::uint64_t enum_cap = kDefaultEnumCap;
    int jobs = 1;
};

// One record per input graph. Classification of a single graph; throws on
// a bad graph6 line (run_census catches per line instead).
CensusRecord classify_graph(const Graph& g, const CensusOptions& opt);

// Reads graph6 lines (blank lines skipped), classifies each, preserves input
// order. Parse failures become error records carrying the line number; the
// stream is processed to the end regardless.
std::vector<CensusRecord> run_census(std::istream& in, const CensusOptions& opt);

// Predicate mini-language over census records:
//   expr     := or-expr
//   or-expr  := and-expr ("||" and-expr)*
//   and-expr := unary ("&&" unary)*
//   unary    := "!" unary | "(" expr ")" | comparison | field
//   comparison := field ("==" | "!=" | "<" | "<=" | ">" | ">=") integer
// Boolean fields: connected, bipartite, vertex_determining,
// every_edge_on_triangle, unstable, has_nontrivial_tf, consistent,
// has_triangle. Numeric fields: n, edges, triangles, aut_order,
// cover_aut_order, tf_order, closed_z6, shared_vertex, shared_edge,
// undirected_triangle (the image-configuration counts; comparisons on them
// are false when the counts are absent). Error records never match.
bool eval_predicate(const CensusRecord& rec, const std::string& predicate);

// All matching records of least n, then least edge count, sorted by graph6
// string. Empty corpus is an error; no match returns an empty list.
std::vector<CensusRecord> find_minimal(const std::vector<CensusRecord>& records,
                                       const std::string& predicate);

} // namespace twofold
