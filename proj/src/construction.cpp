#include "twofold/construction.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "twofold/errors.hpp"

namespace twofold {

LayeredGraph build_layered_graph(const LayeredSpec& spec) {
    const int m = static_cast<int>(spec.layers.size());
    if (m < 3)
        throw std::invalid_argument("layered graph needs at least 3 layers, got " +
                                    std::to_string(m));
    LayeredGraph lg;
    int total = 0;
    for (int i = 0; i < m; ++i) {
        const Graph& h = spec.layers[i];
        for (int v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) == 0)
                throw std::invalid_argument("layer " + std::to_string(i) +
                                            " has an isolated vertex (" + std::to_string(v) + ")");
        lg.offset.push_back(total);
        total += h.vertex_count();
        for (int v = 0; v < h.vertex_count(); ++v) lg.layer_of.push_back(i);
    }

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        const Graph& h = spec.layers[i];
        const int off = lg.offset[i];
        for (const auto& [u, v] : h.edges()) edges.push_back({off + u, off + v});
        // Complete bipartite join to the next layer. For m = 3 the pairs
        // (0,1), (1,2), (2,0) already cover every distinct layer pair.
        const int j = (i + 1) % m;
        const int offj = lg.offset[j];
        for (int u = 0; u < h.vertex_count(); ++u)
            for (int w = 0; w < spec.layers[j].vertex_count(); ++w)
                edges.push_back({off + u, offj + w});
    }
    lg.graph = Graph::from_edge_list(total, edges);
    return lg;
}

TFMap complete_link_cycle(const std::vector<TFMap>& links_1_onward) {
    if (links_1_onward.empty()) throw std::invalid_argument("no links supplied");
    TFMap comp = tf_identity(links_1_onward.front().size());
    for (const auto& link : links_1_onward) comp = compose(link, comp);
    return inverse(comp);
}

TFMap assemble_tf(const LayeredSpec& spec, const LayeredGraph& lg, bool require_identity_product) {
    const int m = static_cast<int>(spec.layers.size());
    if (static_cast<int>(spec.links.size()) != m)
        throw std::invalid_argument("expected one link per layer");
    for (int i = 0; i < m; ++i) {
        const int j = (i + 1) % m;
        if (spec.links[i].size() != spec.layers[i].vertex_count() ||
            spec.links[i].size() != spec.layers[j].vertex_count())
            throw std::invalid_argument("link " + std::to_string(i) +
                                        " does not match its layer sizes");
        if (!is_tf_isomorphism(spec.layers[i], spec.layers[j], spec.links[i]))
            throw std::invalid_argument("link " + std::to_string(i) +
                                        " is not a TF-isomorphism onto the next layer");
    }
    if (require_identity_product) {
        TFMap walk = tf_identity(spec.links[0].size());
        for (int i = 0; i < m; ++i) walk = compose(spec.links[i], walk);
        if (!walk.alpha.is_identity() || !walk.beta.is_identity())
            throw std::invalid_argument("cyclic link composite is not the identity pair");
    }

    const int n = lg.graph.vertex_count();
    std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const int i = lg.layer_of[v];
        const int j = (i + 1) % m;
        const int local = v - lg.offset[i];
        a[static_cast<std::size_t>(v)] = lg.offset[j] + spec.links[i].alpha(local);
        b[static_cast<std::size_t>(v)] = lg.offset[j] + spec.links[i].beta(local);
    }
    TFMap t{Permutation::from_images(std::move(a)), Permutation::from_images(std::move(b))};
    if (!is_tf_automorphism(lg.graph, t))
        throw PropertyFalsified("assembled pair fails arc validation despite valid links");
    return t;
}

namespace {

bool eccentricity_growth_holds(const Graph& g, int diam) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto dist = g.bfs_distances(v);
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (dist[w] != diam - 1) continue;
            bool found = false;
            for (int u : g.neighborhood(w))
                if (dist[u] == diam) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    }
    return true;
}

} // namespace

LayeredVerification verify_layered_properties(const LayeredGraph& lg, const TFMap& t) {
    LayeredVerification rep;
    const int m = lg.layer_count();
    const int e = m % 2;
    rep.tf_valid = is_tf_automorphism(lg.graph, t);
    rep.diameter_bfs = lg.graph.diameter();
    rep.formula_printed = (m + e) / 2;
    rep.formula_derived = (m - e) / 2;
    rep.printed_matches = rep.diameter_bfs && *rep.diameter_bfs == rep.formula_printed;
    rep.derived_matches = rep.diameter_bfs && *rep.diameter_bfs == rep.formula_derived;
    rep.every_edge_on_triangle = lg.graph.every_edge_on_triangle();
    rep.eccentricity_growth =
        rep.diameter_bfs && eccentricity_growth_holds(lg.graph, *rep.diameter_bfs);
    return rep;
}

TFMap cycle_even_odd_shift(int k) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("the even/odd shift needs an even cycle length >= 4");
    std::vector<int> a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) {
        a[static_cast<std::size_t>(v)] = v % 2 == 0 ? (v + 2) % k : v;
        b[static_cast<std::size_t>(v)] = v % 2 == 1 ? (v + 2) % k : v;
    }
    TFMap t{Permutation::from_images(std::move(a)), Permutation::from_images(std::move(b))};
    if (!is_tf_automorphism(Graph::cycle(k), t))
        throw std::logic_error("even/odd shift failed validation");
    return t;
}

LayeredSpec layered_demo_spec(int m, const Graph& layer, const TFMap& link) {
    if (m < 3) throw std::invalid_argument("need m >= 3");
    if (!layer.is_connected()) throw std::invalid_argument("layer must be connected");
    if (!layer.is_vertex_determining())
        throw std::invalid_argument("layer must be vertex-determining");
    for (int v = 0; v < layer.vertex_count(); ++v)
        if (layer.degree(v) == 0) throw std::invalid_argument("layer has an isolated vertex");
    if (link.size() != layer.vertex_count())
        throw std::invalid_argument("link size does not match the layer");
    if (!is_tf_automorphism(layer, link))
        throw std::invalid_argument("link is not a TF-automorphism of the layer");
    if (!link.nontrivial()) throw std::invalid_argument("link is trivial (alpha = beta)");

    LayeredSpec spec;
    spec.layers.assign(static_cast<std::size_t>(m), layer);
    std::vector<TFMap> tail;
    tail.push_back(inverse(link));
    for (int i = 2; i < m; ++i) tail.push_back(tf_identity(layer.vertex_count()));
    spec.links.push_back(complete_link_cycle(tail));
    for (auto& l : tail) spec.links.push_back(std::move(l));
    return spec;
}

Counterexample build_verified_counterexample(int m, const Graph& layer, const TFMap& link) {
    LayeredSpec spec = layered_demo_spec(m, layer, link);

    Counterexample out;
    out.layered = build_layered_graph(spec);
    out.tf = assemble_tf(spec, out.layered);

    const Graph& g = out.layered.graph;
    out.summary.n = g.vertex_count();
    out.summary.edge_count = g.edge_count();
    out.summary.connected = g.is_connected();
    if (!out.summary.connected) throw PropertyFalsified("check failed: graph is not connected");
    out.summary.diameter = g.diameter();
    if (!out.summary.diameter || *out.summary.diameter < 4)
        throw PropertyFalsified(
            "check failed: BFS diameter " +
            (out.summary.diameter ? std::to_string(*out.summary.diameter) : std::string("inf")) +
            " < 4");
    out.summary.every_edge_on_triangle = g.every_edge_on_triangle();
    if (!out.summary.every_edge_on_triangle)
        throw PropertyFalsified("check failed: some edge lies on no triangle");
    out.summary.vertex_determining = g.is_vertex_determining();
    if (!out.summary.vertex_determining)
        throw PropertyFalsified("check failed: built graph is not vertex-determining");
    out.summary.tf_valid = is_tf_automorphism(g, out.tf);
    out.summary.tf_nontrivial = out.tf.nontrivial();
    if (!out.summary.tf_valid || !out.summary.tf_nontrivial)
        throw PropertyFalsified("check failed: assembled pair is not a non-trivial TF-automorphism");
    return out;
}

} // namespace twofold
