// ztrail.hpp: alternating trails (Z-trails) and what TF-maps do to them.
//
// A Z-trail is an ordered arc sequence a_1..a_k in which consecutive arcs
// share alternately an end-vertex (head-to-head) and a start-vertex
// (tail-to-tail); arcs are distinct, vertices may repeat. The alternation is
// enforced strictly: if a_i, a_{i+1} share heads then a_{i+1}, a_{i+2} must
// share tails and vice versa. A loose reading (any share at each step) would
// break the parity facts below, e.g. (0,1),(2,1),(3,1) chains two head
// shares and its endpoints 0 and 3 are both start-vertices even though the
// length is odd.
//
// Closure is read off the free endpoints of the first and last arcs. The
// free endpoint of a_1 is the vertex not shared with a_2 (for k = 1 the
// trail is open); each free endpoint carries a role, start or end. Distinct
// endpoints: open. Same vertex, opposite roles (first arc uv, last arc wu):
// semi-closed. Same vertex, same role: closed. Under strict alternation the
// roles agree exactly when k is even, which yields the parity facts:
// semi-closed trails have odd length, closed trails even length.
#pragma once

#include <array>
#include <vector>

#include "twofold/graph.hpp"
#include "twofold/tf.hpp"

namespace twofold {

enum class ClosureClass { Open, SemiClosed, Closed };

const char* to_string(ClosureClass c);

struct ZTrail {
    std::vector<Arc> arcs;

    int length() const { return static_cast<int>(arcs.size()); }
};

// Checks loops, arc distinctness, and strict alternation. Throws
// std::invalid_argument naming the offence ("repeated arc", "alternation
// break", ...) and its position.
ZTrail validate_ztrail(const std::vector<Arc>& arcs);

ClosureClass classify_ztrail(const ZTrail& z);

// Image trail [(alpha(u), beta(v)) for (u,v) in z]. Validity, length and the
// share-type sequence always carry over; the closure class usually does but
// can change when an endpoint collision is created or destroyed (see the
// tests for a 4-vertex example). The Graph overload additionally checks that
// every image arc exists in the host and throws std::invalid_argument
// otherwise (the pair is then not a TF-map of that graph).
ZTrail map_ztrail(const TFMap& t, const ZTrail& z);
ZTrail map_ztrail(const Graph& host, const TFMap& t, const ZTrail& z);

// The two semi-closed 3-arc trails whose union is the 6-arc set of a
// triangle {x,y,z}: [(x,y),(z,y),(z,x)] and [(y,x),(y,z),(x,z)].
// Throws std::invalid_argument if the triple is not a triangle of g.
std::pair<ZTrail, ZTrail> triangle_to_ztrails(const Graph& g, const std::array<int, 3>& tri);

// Image of a triangle under a non-trivial TF-map, keyed by how many of the
// three vertices have alpha(x) = beta(x):
//   0 agreements -> ClosedZ6 (a): a closed Z-trail of length 6 on six
//     distinct vertices (cross coincidences alpha(x) = beta(y), x != y are
//     impossible: (x,y) is an arc and arcs cannot map to loops);
//   1 agreement  -> TwoTrianglesSharedVertex (b);
//   2 agreements -> TwoTrianglesSharedEdge (c);
//   3 agreements -> UndirectedTriangle (d), an internal isomorphism.
enum class TriangleImageConfig {
    ClosedZ6,
    TwoTrianglesSharedVertex,
    TwoTrianglesSharedEdge,
    UndirectedTriangle,
};

const char* to_string(TriangleImageConfig c);

struct TriangleImageReport {
    TriangleImageConfig config;
    // The six arcs (alpha(u), beta(v)), (u,v) running over the triangle's
    // arcs in sorted order.
    std::vector<Arc> image_arcs;
    // Triangle vertices x with alpha(x) = beta(x), sorted.
    std::vector<int> agreeing_vertices;
    int distinct_image_vertices = 0;
};

// Throws std::invalid_argument when tri is not a triangle or t is not a
// TF-automorphism of g; throws PropertyFalsified if an image fits none of
// the four configurations (none is ever expected).
TriangleImageReport classify_triangle_image(const Graph& g, const TFMap& t,
                                            const std::array<int, 3>& tri);

// The partner structure whose image supplies the reversed arcs of the
// triangle's image, i.e. the preimage (alpha^-1(p), beta^-1(q)) of every
// reversed image arc (q,p). Together the two images cover an undirected
// subgraph.
//   Config (a): the partner is either a vertex-disjoint triangle or a closed
//     Z-trail of length 6 on six vertices, also vertex-disjoint from the
//     source; any overlap or other shape is reported as PropertyFalsified.
//   Configs (b)/(c): the partner mirrors the image configuration (one or two
//     triangles through the agreeing vertices) and must meet the source
//     triangle; an empty intersection is a falsification.
//   Config (d): no partner exists; std::invalid_argument.
// For config (a) the report also records which chords of the image hexagon
// are present in the host. Their absence is not asserted; whether the image
// is always an induced 6-cycle is left as measured data.
struct ImagePartnerReport {
    TriangleImageConfig config;
    bool partner_is_triangle = false;
    std::vector<int> partner_vertices;       // sorted
    std::vector<Arc> partner_arcs;           // the 6 preimage arcs
    std::vector<int> shared_vertices;        // partner vertices on the source triangle
    std::vector<std::pair<int, int>> image_hexagon_chords;  // config (a) only
};

ImagePartnerReport find_image_partner(const Graph& g, const TFMap& t,
                                      const std::array<int, 3>& tri);

} // namespace twofold
