// aut.hpp: exact automorphism groups of (optionally vertex-coloured) graphs.
//
// The search is equitable-partition refinement with individualisation and
// backtracking. Pruning uses (a) the refinement trace compared against the
// leftmost branch and (b) orbits under the generators found so far; both are
// standard and sound, and every candidate found at a leaf is re-verified by
// a direct arc check before it is accepted. Orders come from a deterministic
// stabiliser chain; explicit element lists are produced only below a cap.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twofold/double_cover.hpp"
#include "twofold/graph.hpp"
#include "twofold/permutation.hpp"

namespace twofold {

// Element-enumeration cap: groups at most this large get explicit element
// lists; larger groups report generators and order only.
inline constexpr std::uint64_t kDefaultEnumCap = 1'000'000;

// Colour class index per vertex; classes must be 0..k-1, each nonempty.
using VertexColouring = std::vector<int>;

struct AutGroup {
    int n = 0;
    // Lexicographically sorted by image array; identity omitted (it is
    // always a group member regardless).
    std::vector<Permutation> generators;
    // Explicit element list (lex-sorted, identity included) when the order
    // is at most the enumeration cap, otherwise nullopt.
    std::optional<std::vector<Permutation>> elements;
    std::uint64_t order = 1;
};

// True iff p maps the arc set of g onto itself.
bool is_automorphism(const Graph& g, const Permutation& p);

// The full group of (colour-preserving) automorphisms.
AutGroup automorphism_group(const Graph& g,
                            const std::optional<VertexColouring>& colouring = std::nullopt,
                            std::uint64_t enum_cap = kDefaultEnumCap);

// The setwise stabiliser of V_0 inside Aut(B(G)), computed directly as the
// automorphism group of the cover under the 2-colouring {V_0, V_1}.
AutGroup colour_class_stabiliser(const DoubleCover& dc,
                                 std::uint64_t enum_cap = kDefaultEnumCap);

std::uint64_t group_order(const AutGroup& ag);

// Order of <gens> by stabiliser-chain counting. Throws ResourceLimitError
// if the order does not fit in 64 bits.
std::uint64_t permutation_group_order(int n, const std::vector<Permutation>& gens);

// Breadth-first closure of <gens>; nullopt once the element count would
// exceed cap. The returned list is lex-sorted and includes the identity.
std::optional<std::vector<Permutation>> enumerate_group(int n,
                                                        const std::vector<Permutation>& gens,
                                                        std::uint64_t cap);

} // namespace twofold
