#include "twofold/ztrail.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "twofold/errors.hpp"

namespace twofold {

namespace {

enum class Share { Head, Tail };

// The share type of two consecutive distinct arcs, or throws. Distinct arcs
// can share at most one of head/tail (sharing both would make them equal).
Share share_type(const Arc& a, const Arc& b, int position) {
    if (a.second == b.second) return Share::Head;
    if (a.first == b.first) return Share::Tail;
    throw std::invalid_argument("alternation break at position " + std::to_string(position) +
                                ": consecutive arcs share no head or tail");
}

struct Endpoint {
    int vertex;
    bool is_start;  // the free endpoint's role in its arc
};

// Free endpoint of the first arc: the vertex not shared with the second.
Endpoint first_endpoint(const ZTrail& z) {
    const Share s = share_type(z.arcs[0], z.arcs[1], 1);
    if (s == Share::Head) return {z.arcs[0].first, true};
    return {z.arcs[0].second, false};
}

Endpoint last_endpoint(const ZTrail& z) {
    const std::size_t k = z.arcs.size();
    const Share s = share_type(z.arcs[k - 2], z.arcs[k - 1], static_cast<int>(k) - 1);
    if (s == Share::Head) return {z.arcs[k - 1].first, true};
    return {z.arcs[k - 1].second, false};
}

} // namespace

const char* to_string(ClosureClass c) {
    switch (c) {
        case ClosureClass::Open: return "open";
        case ClosureClass::SemiClosed: return "semi-closed";
        case ClosureClass::Closed: return "closed";
    }
    return "?";
}

ZTrail validate_ztrail(const std::vector<Arc>& arcs) {
    if (arcs.empty()) throw std::invalid_argument("empty trail");
    std::set<Arc> seen;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (arcs[i].first == arcs[i].second)
            throw std::invalid_argument("loop arc at position " + std::to_string(i));
        if (!seen.insert(arcs[i]).second)
            throw std::invalid_argument("repeated arc at position " + std::to_string(i));
    }
    ZTrail z{arcs};
    if (arcs.size() >= 2) {
        Share prev = share_type(arcs[0], arcs[1], 1);
        for (std::size_t i = 2; i < arcs.size(); ++i) {
            const Share cur = share_type(arcs[i - 1], arcs[i], static_cast<int>(i));
            if (cur == prev)
                throw std::invalid_argument("alternation break at position " + std::to_string(i) +
                                            ": same share type twice in a row");
            prev = cur;
        }
    }
    return z;
}

ClosureClass classify_ztrail(const ZTrail& z) {
    if (z.arcs.size() < 2) return ClosureClass::Open;
    const Endpoint a = first_endpoint(z);
    const Endpoint b = last_endpoint(z);
    if (a.vertex != b.vertex) return ClosureClass::Open;
    if (a.is_start != b.is_start) return ClosureClass::SemiClosed;
    return ClosureClass::Closed;
}

ZTrail map_ztrail(const TFMap& t, const ZTrail& z) {
    std::vector<Arc> out;
    out.reserve(z.arcs.size());
    for (const auto& [u, v] : z.arcs) out.push_back({t.alpha(u), t.beta(v)});
    // Always re-validates: distinctness and the share pattern survive any
    // pair of bijections, so this never throws for a well-formed input.
    return validate_ztrail(out);
}

ZTrail map_ztrail(const Graph& host, const TFMap& t, const ZTrail& z) {
    ZTrail img = map_ztrail(t, z);
    for (std::size_t i = 0; i < img.arcs.size(); ++i)
        if (!host.adjacent(img.arcs[i].first, img.arcs[i].second))
            throw std::invalid_argument(
                "image arc (" + std::to_string(img.arcs[i].first) + "," +
                std::to_string(img.arcs[i].second) + ") at position " + std::to_string(i) +
                " is missing from the host graph; the pair is not a TF-map of it");
    return img;
}

std::pair<ZTrail, ZTrail> triangle_to_ztrails(const Graph& g, const std::array<int, 3>& tri) {
    const auto [x, y, z] = tri;
    if (!g.is_triangle(x, y, z)) throw std::invalid_argument("triple is not a triangle");
    ZTrail a = validate_ztrail({{x, y}, {z, y}, {z, x}});
    ZTrail b = validate_ztrail({{y, x}, {y, z}, {x, z}});
    return {a, b};
}

const char* to_string(TriangleImageConfig c) {
    switch (c) {
        case TriangleImageConfig::ClosedZ6: return "closed_z6";
        case TriangleImageConfig::TwoTrianglesSharedVertex: return "two_triangles_shared_vertex";
        case TriangleImageConfig::TwoTrianglesSharedEdge: return "two_triangles_shared_edge";
        case TriangleImageConfig::UndirectedTriangle: return "undirected_triangle";
    }
    return "?";
}

TriangleImageReport classify_triangle_image(const Graph& g, const TFMap& t,
                                            const std::array<int, 3>& tri) {
    const auto [x, y, z] = tri;
    if (!g.is_triangle(x, y, z)) throw std::invalid_argument("triple is not a triangle");
    if (!is_tf_automorphism(g, t)) throw std::invalid_argument("pair is not a TF-automorphism");

    TriangleImageReport rep;
    const std::array<Arc, 6> tri_arcs = {{{x, y}, {y, x}, {x, z}, {z, x}, {y, z}, {z, y}}};
    for (const auto& [u, v] : tri_arcs) rep.image_arcs.push_back({t.alpha(u), t.beta(v)});

    for (int v : tri)
        if (t.alpha(v) == t.beta(v)) rep.agreeing_vertices.push_back(v);

    std::set<int> image_vertices;
    for (int v : tri) {
        image_vertices.insert(t.alpha(v));
        image_vertices.insert(t.beta(v));
    }
    rep.distinct_image_vertices = static_cast<int>(image_vertices.size());

    switch (rep.agreeing_vertices.size()) {
        case 3: rep.config = TriangleImageConfig::UndirectedTriangle; break;
        case 2: rep.config = TriangleImageConfig::TwoTrianglesSharedEdge; break;
        case 1: rep.config = TriangleImageConfig::TwoTrianglesSharedVertex; break;
        case 0:
            rep.config = TriangleImageConfig::ClosedZ6;
            // With no agreements the six image vertices must be distinct:
            // alpha and beta are injective, and a cross coincidence
            // alpha(u) = beta(v) with u != v would turn the arc (u,v) into a
            // loop. Anything else would fall outside the four cases.
            if (rep.distinct_image_vertices != 6)
                throw PropertyFalsified(
                    "triangle image with no agreeing vertex has only " +
                    std::to_string(rep.distinct_image_vertices) +
                    " distinct image vertices; it fits none of the four configurations");
            break;
        default:
            throw std::logic_error("agreement count out of range");
    }
    return rep;
}

namespace {

// Order six arcs into a closed alternating trail, if they form one.
// Greedy walk: from the current arc, find the unused arc sharing the
// required endpoint; a closed Z-trail of length 6 admits such an ordering
// starting from any arc.
bool order_as_closed_z6(const std::vector<Arc>& arcs, std::vector<Arc>& ordered) {
    if (arcs.size() != 6) return false;
    std::vector<bool> used(6, false);
    // The first step may share either pattern; try both.
    for (int first_share_head = 0; first_share_head <= 1; ++first_share_head) {
        std::fill(used.begin(), used.end(), false);
        ordered.assign(1, arcs[0]);
        used[0] = true;
        bool want_head = first_share_head == 1;
        bool ok = true;
        while (ordered.size() < 6 && ok) {
            ok = false;
            for (std::size_t j = 0; j < arcs.size(); ++j) {
                if (used[j]) continue;
                const Arc& prev = ordered.back();
                const bool match = want_head ? (arcs[j].second == prev.second)
                                             : (arcs[j].first == prev.first);
                if (match) {
                    ordered.push_back(arcs[j]);
                    used[j] = true;
                    want_head = !want_head;
                    ok = true;
                    break;
                }
            }
        }
        if (ordered.size() == 6) {
            try {
                ZTrail z = validate_ztrail(ordered);
                if (classify_ztrail(z) == ClosureClass::Closed) return true;
            } catch (const std::invalid_argument&) {
            }
        }
    }
    return false;
}

} // namespace

ImagePartnerReport find_image_partner(const Graph& g, const TFMap& t,
                                      const std::array<int, 3>& tri) {
    const TriangleImageReport img = classify_triangle_image(g, t, tri);
    if (img.config == TriangleImageConfig::UndirectedTriangle)
        throw std::invalid_argument("an undirected-triangle image has no partner structure");

    ImagePartnerReport rep;
    rep.config = img.config;

    // The structure whose image is the reversal of the triangle's image:
    // preimage of each reversed arc (q,p) under (alpha, beta).
    const Permutation ai = t.alpha.inverse();
    const Permutation bi = t.beta.inverse();
    std::set<Arc> partner_set;
    std::set<int> partner_verts;
    for (const auto& [p, q] : img.image_arcs) {
        const Arc pre{ai(q), bi(p)};
        if (!g.adjacent(pre.first, pre.second))
            throw std::logic_error("preimage of a reversed image arc is not an arc");
        partner_set.insert(pre);
        partner_verts.insert(pre.first);
        partner_verts.insert(pre.second);
    }
    rep.partner_arcs.assign(partner_set.begin(), partner_set.end());
    rep.partner_vertices.assign(partner_verts.begin(), partner_verts.end());
    for (int v : rep.partner_vertices)
        if (v == tri[0] || v == tri[1] || v == tri[2]) rep.shared_vertices.push_back(v);

    if (img.config == TriangleImageConfig::ClosedZ6) {
        if (rep.partner_vertices.size() == 3) {
            const int a = rep.partner_vertices[0];
            const int b = rep.partner_vertices[1];
            const int c = rep.partner_vertices[2];
            if (!g.is_triangle(a, b, c) || rep.partner_arcs.size() != 6)
                throw PropertyFalsified("three-vertex partner of a hexagon image is not a triangle");
            rep.partner_is_triangle = true;
        } else if (rep.partner_vertices.size() == 6) {
            std::vector<Arc> ordered;
            if (!order_as_closed_z6(rep.partner_arcs, ordered))
                throw PropertyFalsified(
                    "six-vertex partner of a hexagon image is not a closed Z-trail of length 6");
            rep.partner_is_triangle = false;
        } else {
            throw PropertyFalsified("partner of a hexagon image spans " +
                                    std::to_string(rep.partner_vertices.size()) +
                                    " vertices; expected a triangle (3) or a closed Z-trail (6)");
        }
        if (!rep.shared_vertices.empty())
            throw PropertyFalsified("partner of a hexagon image meets the source triangle at " +
                                    std::to_string(rep.shared_vertices.size()) + " vertices");
        // Chords of the image hexagon, recorded but not asserted absent.
        std::set<int> image_verts;
        std::set<std::pair<int, int>> hex_edges;
        for (const auto& [p, q] : img.image_arcs) {
            image_verts.insert(p);
            image_verts.insert(q);
            hex_edges.insert({std::min(p, q), std::max(p, q)});
        }
        const std::vector<int> iv(image_verts.begin(), image_verts.end());
        for (std::size_t i = 0; i < iv.size(); ++i)
            for (std::size_t j = i + 1; j < iv.size(); ++j)
                if (g.adjacent(iv[i], iv[j]) && !hex_edges.count({iv[i], iv[j]}))
                    rep.image_hexagon_chords.push_back({iv[i], iv[j]});
    } else {
        // Shared-vertex / shared-edge images: the partner mirrors the image
        // configuration (a pair of triangles through the agreeing vertices,
        // collapsing to a single triangle in degenerate cases such as a twin
        // swap on a diamond). The testable claim is that the partner meets
        // the source triangle; every agreeing vertex lies on both.
        rep.partner_is_triangle =
            rep.partner_vertices.size() == 3 &&
            g.is_triangle(rep.partner_vertices[0], rep.partner_vertices[1],
                          rep.partner_vertices[2]);
        if (rep.shared_vertices.empty())
            throw PropertyFalsified(
                "partner structure is disjoint from the source triangle; the pair should meet");
    }
    return rep;
}

} // namespace twofold
