// tf.hpp: two-fold (TF) automorphisms. A TFMap (alpha, beta) acts on arcs by
// (u,v) -> (alpha(u), beta(v)); it is non-trivial when alpha != beta. The
// TF group of a graph is computed two independent ways: a brute-force scan
// over permutation pairs (the oracle, bounded), and extraction from the
// setwise stabiliser of V_0 in the automorphism group of the double cover.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twofold/aut.hpp"
#include "twofold/double_cover.hpp"
#include "twofold/graph.hpp"
#include "twofold/permutation.hpp"

namespace twofold {

// Default bound for the brute-force oracle: (n!)^2 pairs is desk-scale up
// to n = 7 (~2.5e7 pairs).
inline constexpr int kDefaultOracleBound = 7;

struct TFMap {
    Permutation alpha;
    Permutation beta;

    bool nontrivial() const { return alpha != beta; }
    int size() const { return alpha.size(); }

    bool operator==(const TFMap& o) const { return alpha == o.alpha && beta == o.beta; }
    bool operator!=(const TFMap& o) const { return !(*this == o); }
    // Lexicographic on (alpha, beta) image arrays; the deterministic order
    // used for element lists and certificates.
    bool operator<(const TFMap& o) const {
        if (alpha != o.alpha) return alpha < o.alpha;
        return beta < o.beta;
    }
};

// (a1,b1)(a2,b2) = (a1 a2, b1 b2), right factor acting first throughout.
TFMap compose(const TFMap& s, const TFMap& t);
TFMap inverse(const TFMap& t);
TFMap tf_identity(int n);
TFMap tf_diagonal(const Permutation& a);

struct TFGroup {
    int n = 0;
    std::vector<TFMap> elements;  // lex-sorted, contains (id, id)
    std::uint64_t order = 0;
};

// True iff (u,v) arc implies (alpha(u), beta(v)) arc; with bijections and a
// finite arc set this forces the image to be exactly the arc set.
bool is_tf_automorphism(const Graph& g, const TFMap& t);

// Two-graph version: (u,v) in A(src) iff (alpha(u), beta(v)) in A(dst).
bool is_tf_isomorphism(const Graph& src, const Graph& dst, const TFMap& t);

// Split a V_0-preserving cover automorphism into its actions on the two
// colour classes: (alpha(v), 0) = sigma(v, 0) and (beta(v), 1) = sigma(v, 1).
// Throws if sigma is not an automorphism of the cover or moves V_0 off
// itself.
TFMap extract_tf_from_sigma(const DoubleCover& dc, const Permutation& sigma);

// { extract(sigma) : sigma in the class stabiliser }; requires the
// stabiliser's explicit element list (ResourceLimitError beyond the cap).
TFGroup tf_group_via_cover(const Graph& g, std::uint64_t enum_cap = kDefaultEnumCap);

// Scan all |Sym(n)|^2 pairs. ResourceLimitError when n exceeds the bound.
TFGroup tf_group_brute_force(const Graph& g, int oracle_bound = kDefaultOracleBound);

struct StabilityReport {
    std::uint64_t aut_order = 0;
    std::uint64_t cover_aut_order = 0;
    std::uint64_t tf_order = 0;
    // The definition: Aut(G) x Z_2 is a proper subgroup of Aut(B(G)).
    bool unstable_by_definition = false;
    // The TF criterion: some TF-automorphism has alpha != beta.
    bool has_nontrivial_tf = false;
    // Whether the two tests agree on this input. They provably diverge on
    // some bipartite/disconnected graphs (K2), so both are always reported.
    bool tf_criterion_consistent = true;
    // When unstable: the lex-least non-trivial TFMap if one exists,
    // otherwise the lex-least cover automorphism outside the lifted group.
    std::optional<TFMap> tf_certificate;
    std::optional<Permutation> unexpected_witness;
};

StabilityReport stability_verdict(const Graph& g, std::uint64_t enum_cap = kDefaultEnumCap);

// gamma = alpha . beta^-1 (right factor first).
Permutation anti_automorphism_from_tf(const TFMap& t);

// True iff {gamma(x), gamma^-1(y)} is an edge for every edge {x,y}.
bool is_anti_automorphism(const Graph& g, const Permutation& gamma);

// If gamma is an anti-automorphism of order not in {1,2}, returns the
// validated non-trivial TFMap (gamma, gamma^-1); otherwise nullopt.
// Throws std::invalid_argument when gamma is not an anti-automorphism.
std::optional<TFMap> instability_from_anti(const Graph& g, const Permutation& gamma);

// For vertex-determining graphs, flags every non-trivial TF element whose
// components are both automorphisms or have different orders; both patterns
// force twin vertices, so the list must come back empty. For graphs that
// are not vertex-determining the check is not applicable.
struct VertexDeterminingConflict {
    TFMap map;
    bool both_automorphisms = false;
    bool order_mismatch = false;
};

struct VertexDeterminingCheck {
    bool applicable = false;
    std::vector<VertexDeterminingConflict> violations;
};

VertexDeterminingCheck vertex_determining_conflicts(const Graph& g, const TFGroup& tf);

} // namespace twofold
