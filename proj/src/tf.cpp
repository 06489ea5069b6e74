#include "twofold/tf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "twofold/errors.hpp"

namespace twofold {

TFMap compose(const TFMap& s, const TFMap& t) {
    return {compose(s.alpha, t.alpha), compose(s.beta, t.beta)};
}

TFMap inverse(const TFMap& t) { return {t.alpha.inverse(), t.beta.inverse()}; }

TFMap tf_identity(int n) { return {Permutation::identity(n), Permutation::identity(n)}; }

TFMap tf_diagonal(const Permutation& a) { return {a, a}; }

bool is_tf_isomorphism(const Graph& src, const Graph& dst, const TFMap& t) {
    if (t.alpha.size() != src.vertex_count() || t.beta.size() != src.vertex_count())
        throw std::invalid_argument("TF map size does not match vertex count");
    if (src.vertex_count() != dst.vertex_count()) return false;
    for (const auto& [u, v] : src.arcs())
        if (!dst.adjacent(t.alpha(u), t.beta(v))) return false;
    // Enough: alpha and beta are bijections, so the arc map is injective,
    // and |A(src)| = |A(dst)| would be forced by the reverse direction; a
    // strict containment is impossible once the counts match.
    return src.edge_count() == dst.edge_count();
}

bool is_tf_automorphism(const Graph& g, const TFMap& t) {
    if (t.alpha.size() != g.vertex_count() || t.beta.size() != g.vertex_count())
        throw std::invalid_argument("TF map size does not match vertex count");
    for (const auto& [u, v] : g.arcs())
        if (!g.adjacent(t.alpha(u), t.beta(v))) return false;
    return true;
}

TFMap extract_tf_from_sigma(const DoubleCover& dc, const Permutation& sigma) {
    const int n = dc.base_n;
    if (sigma.size() != 2 * n) throw std::invalid_argument("sigma size does not match the cover");
    if (!is_automorphism(dc.graph, sigma))
        throw std::invalid_argument("sigma is not an automorphism of the cover");
    std::vector<int> alpha_img(static_cast<std::size_t>(n)), beta_img(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const int a = sigma(v);
        const int b = sigma(v + n);
        if (a >= n || b < n)
            throw std::invalid_argument("sigma does not preserve the colour class V_0");
        alpha_img[static_cast<std::size_t>(v)] = a;
        beta_img[static_cast<std::size_t>(v)] = b - n;
    }
    return {Permutation::from_images(std::move(alpha_img)),
            Permutation::from_images(std::move(beta_img))};
}

TFGroup tf_group_via_cover(const Graph& g, std::uint64_t enum_cap) {
    const DoubleCover dc = build_double_cover(g);
    const AutGroup sigma = colour_class_stabiliser(dc, enum_cap);
    if (!sigma.elements)
        throw ResourceLimitError("class stabiliser too large to enumerate (order " +
                                 std::to_string(sigma.order) + ", cap " +
                                 std::to_string(enum_cap) + ")");
    TFGroup out;
    out.n = g.vertex_count();
    out.elements.reserve(sigma.elements->size());
    for (const auto& s : *sigma.elements) out.elements.push_back(extract_tf_from_sigma(dc, s));
    std::sort(out.elements.begin(), out.elements.end());
    // Extraction is injective, so the element count must survive the trip.
    if (out.elements.size() != sigma.elements->size())
        throw std::logic_error("cover extraction lost elements");
    out.order = out.elements.size();
    return out;
}

TFGroup tf_group_brute_force(const Graph& g, int oracle_bound) {
    const int n = g.vertex_count();
    if (n > oracle_bound)
        throw ResourceLimitError("brute-force TF scan bound exceeded: n = " + std::to_string(n) +
                                 " > " + std::to_string(oracle_bound));
    TFGroup out;
    out.n = n;
    const auto arc_list = g.arcs();
    std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 0);
    do {
        // Quick rejection on alpha alone: each vertex must keep a beta-image
        // candidate for all its arcs, i.e. alpha must preserve degrees.
        bool degree_ok = true;
        for (int v = 0; v < n && degree_ok; ++v)
            if (g.degree(v) != g.degree(a[static_cast<std::size_t>(v)])) degree_ok = false;
        if (!degree_ok) continue;
        std::iota(b.begin(), b.end(), 0);
        do {
            bool ok = true;
            for (const auto& [u, v] : arc_list)
                if (!g.adjacent(a[static_cast<std::size_t>(u)], b[static_cast<std::size_t>(v)])) {
                    ok = false;
                    break;
                }
            if (ok)
                out.elements.push_back({Permutation::from_images(a), Permutation::from_images(b)});
        } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
    // next_permutation enumerates lexicographically, so the list is sorted.
    out.order = out.elements.size();
    return out;
}

namespace {

// Is sigma a lift (a(v), e) -> (a(v), e + swap) of a base automorphism?
// Used to find witnesses outside the expected group Aut(G) x Z_2.
bool is_expected_cover_automorphism(const DoubleCover& dc, const Permutation& sigma) {
    const int n = dc.base_n;
    auto diagonal_on_classes = [&](const Permutation& s) -> bool {
        // s must preserve V_0; check its two halves agree.
        for (int v = 0; v < n; ++v) {
            if (s(v) >= n || s(v + n) < n) return false;
            if (s(v) != s(v + n) - n) return false;
        }
        return true;
    };
    if (diagonal_on_classes(sigma)) return true;
    return diagonal_on_classes(compose(swap_map(dc), sigma));
}

} // namespace

StabilityReport stability_verdict(const Graph& g, std::uint64_t enum_cap) {
    StabilityReport rep;
    const AutGroup aut = automorphism_group(g, std::nullopt, enum_cap);
    const DoubleCover dc = build_double_cover(g);
    const AutGroup cover_aut = automorphism_group(dc.graph, std::nullopt, enum_cap);
    const AutGroup sigma = colour_class_stabiliser(dc, enum_cap);

    rep.aut_order = aut.order;
    rep.cover_aut_order = cover_aut.order;
    rep.tf_order = sigma.order;  // the stabiliser projects bijectively onto the TF group
    rep.unstable_by_definition = cover_aut.order > 2 * aut.order;
    rep.has_nontrivial_tf = sigma.order > aut.order;
    rep.tf_criterion_consistent = rep.unstable_by_definition == rep.has_nontrivial_tf;

    if (rep.unstable_by_definition) {
        if (rep.has_nontrivial_tf) {
            if (!sigma.elements)
                throw ResourceLimitError("class stabiliser too large to enumerate a certificate");
            // Lex-least non-trivial TF map.
            std::vector<TFMap> tf;
            tf.reserve(sigma.elements->size());
            for (const auto& s : *sigma.elements) tf.push_back(extract_tf_from_sigma(dc, s));
            std::sort(tf.begin(), tf.end());
            for (const auto& t : tf)
                if (t.nontrivial()) {
                    rep.tf_certificate = t;
                    break;
                }
        } else {
            // Unstable without any non-trivial TF map: exhibit a cover
            // automorphism outside the lifted group. Some generator must be
            // outside (otherwise the whole group would be expected); prefer
            // the lex-least unexpected element when the list is available.
            const std::vector<Permutation>* pool =
                cover_aut.elements ? &*cover_aut.elements : &cover_aut.generators;
            for (const auto& s : *pool)
                if (!is_expected_cover_automorphism(dc, s)) {
                    rep.unexpected_witness = s;
                    break;
                }
            if (!rep.unexpected_witness)
                throw std::logic_error("unstable graph with no unexpected cover automorphism found");
        }
    }
    return rep;
}

Permutation anti_automorphism_from_tf(const TFMap& t) {
    return compose(t.alpha, t.beta.inverse());
}

bool is_anti_automorphism(const Graph& g, const Permutation& gamma) {
    if (gamma.size() != g.vertex_count())
        throw std::invalid_argument("permutation size does not match vertex count");
    const Permutation gamma_inv = gamma.inverse();
    for (const auto& [x, y] : g.edges()) {
        if (!g.adjacent(gamma(x), gamma_inv(y))) return false;
        if (!g.adjacent(gamma(y), gamma_inv(x))) return false;
    }
    return true;
}

std::optional<TFMap> instability_from_anti(const Graph& g, const Permutation& gamma) {
    if (!is_anti_automorphism(g, gamma))
        throw std::invalid_argument("permutation is not an anti-automorphism");
    if (gamma.order() <= 2) return std::nullopt;
    TFMap t{gamma, gamma.inverse()};
    // Re-validate rather than trusting the derivation.
    if (!is_tf_automorphism(g, t))
        throw PropertyFalsified("(gamma, gamma^-1) failed arc validation for an anti-automorphism of order > 2");
    return t;
}

VertexDeterminingCheck vertex_determining_conflicts(const Graph& g, const TFGroup& tf) {
    VertexDeterminingCheck out;
    out.applicable = g.is_vertex_determining();
    if (!out.applicable) return out;
    for (const auto& t : tf.elements) {
        if (!t.nontrivial()) continue;
        const bool both = is_automorphism(g, t.alpha) && is_automorphism(g, t.beta);
        const bool mismatch = t.alpha.order() != t.beta.order();
        if (both || mismatch) out.violations.push_back({t, both, mismatch});
    }
    return out;
}

} // namespace twofold
