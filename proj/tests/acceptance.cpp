// acceptance.cpp: the binding end-to-end checks for the library, one
// numbered criterion per function. Each criterion prints a single
// [PASS]/[FAIL] line plus indented measurements; the exit status is
// non-zero when any selected criterion failed. With no arguments all
// twelve run; numeric arguments select a subset, which is how the test
// registry runs them as separate entries.
//
// Criteria that measure a stated property across an exhaustive corpus
// report the counts they found. When the property does not hold, the
// honest outcome is a [FAIL] line carrying the first counterexample, not
// a weakened check.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "sampling.hpp"
#include "twofold/aut.hpp"
#include "twofold/construction.hpp"
#include "twofold/double_cover.hpp"
#include "twofold/errors.hpp"
#include "twofold/graph.hpp"
#include "twofold/graph6.hpp"
#include "twofold/permutation.hpp"
#include "twofold/tf.hpp"
#include "twofold/ztrail.hpp"

using namespace twofold;
using twofold_tests::corpus_graphs;
using twofold_tests::corpus_lines;
using twofold_tests::random_trails;

namespace {

struct Outcome {
    bool pass = false;
    std::vector<std::string> notes;
};

std::string u64s(std::uint64_t v) { return std::to_string(v); }

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

bool has_nontrivial(const TFGroup& tf) {
    for (const TFMap& t : tf.elements)
        if (t.nontrivial()) return true;
    return false;
}

std::string arcs_string(const std::vector<Arc>& arcs) {
    std::string s;
    for (const Arc& a : arcs) {
        if (!s.empty()) s += " ";
        s += "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
    }
    return s;
}

// 1. For every connected non-bipartite graph the cover group is exactly
// twice the TF group extracted from it.
Outcome cover_order_law() {
    Outcome o;
    int pool = 0, bad = 0;
    std::string first;
    for (const Graph& g : corpus_graphs(3, 7)) {
        if (!g.is_connected() || g.bipartition().has_value()) continue;
        ++pool;
        DoubleCover dc = build_double_cover(g);
        std::uint64_t cover = automorphism_group(dc.graph).order;
        std::uint64_t tf = tf_group_via_cover(g).order;
        if (cover != 2 * tf) {
            ++bad;
            if (first.empty())
                first = write_graph6(g) + ": cover order " + u64s(cover) + ", TF order " + u64s(tf);
        }
    }
    o.pass = pool > 0 && bad == 0;
    o.notes.push_back(std::to_string(pool) + " connected non-bipartite graphs checked, " +
                      std::to_string(bad) + " exceptions");
    if (!first.empty()) o.notes.push_back("first exception: " + first);
    return o;
}

// 2. On the same pool the order-based instability test agrees with the
// existence of a non-trivial TF pair; K2 shows the two tests separating
// outside the pool.
Outcome order_test_matches_tf_test() {
    Outcome o;
    int pool = 0, bad = 0;
    std::string first;
    for (const Graph& g : corpus_graphs(3, 7)) {
        if (!g.is_connected() || g.bipartition().has_value()) continue;
        ++pool;
        StabilityReport r = stability_verdict(g);
        if (r.unstable_by_definition != r.has_nontrivial_tf || !r.tf_criterion_consistent) {
            ++bad;
            if (first.empty())
                first = write_graph6(g) + ": unstable_by_definition=" +
                        std::to_string(r.unstable_by_definition) + " has_nontrivial_tf=" +
                        std::to_string(r.has_nontrivial_tf);
        }
    }
    StabilityReport k2 = stability_verdict(Graph::complete(2));
    bool k2_splits = k2.unstable_by_definition && !k2.has_nontrivial_tf &&
                     !k2.tf_criterion_consistent;
    o.pass = pool > 0 && bad == 0 && k2_splits;
    o.notes.push_back(std::to_string(pool) + " connected non-bipartite graphs checked, " +
                      std::to_string(bad) + " disagreements");
    if (!first.empty()) o.notes.push_back("first disagreement: " + first);
    o.notes.push_back(std::string("K2: unstable by the order test (orders ") + u64s(k2.aut_order) +
                      " / " + u64s(k2.cover_aut_order) + "), no non-trivial TF pair" +
                      (k2_splits ? "" : " [MISMATCH]"));
    return o;
}

// 3. The brute-force pair scan and the cover extraction build identical TF
// groups on every connected graph up to n = 6.
Outcome tf_routes_agree() {
    Outcome o;
    int pool = 0, bad = 0;
    std::string first;
    for (const Graph& g : corpus_graphs(3, 6)) {
        if (!g.is_connected()) continue;
        ++pool;
        TFGroup brute = tf_group_brute_force(g);
        TFGroup cover = tf_group_via_cover(g);
        if (brute.order != cover.order || brute.elements != cover.elements) {
            ++bad;
            if (first.empty())
                first = write_graph6(g) + ": brute order " + u64s(brute.order) +
                        ", cover order " + u64s(cover.order);
        }
    }
    o.pass = pool > 0 && bad == 0;
    o.notes.push_back(std::to_string(pool) + " connected graphs compared, " +
                      std::to_string(bad) + " element-set mismatches");
    if (!first.empty()) o.notes.push_back("first mismatch: " + first);
    return o;
}

// 4. The Petersen graph verdict: stable, with the three group orders at
// their known values.
Outcome petersen_verdict() {
    Outcome o;
    StabilityReport r = stability_verdict(Graph::petersen());
    o.pass = r.aut_order == 120 && r.cover_aut_order == 240 && r.tf_order == 120 &&
             !r.unstable_by_definition && !r.has_nontrivial_tf && r.tf_criterion_consistent;
    o.notes.push_back("orders " + u64s(r.aut_order) + " / " + u64s(r.cover_aut_order) + " / " +
                      u64s(r.tf_order) + ", unstable_by_definition=" +
                      std::to_string(r.unstable_by_definition) + ", has_nontrivial_tf=" +
                      std::to_string(r.has_nontrivial_tf));
    return o;
}

// 5. Splitting the fixed 5-path cover automorphism (fixes a0 b1 c0 d1 c1 e0,
// swaps b0<->d0 and a1<->e1) yields alpha = (b d), beta = (a e).
Outcome path5_extraction_fixture() {
    Outcome o;
    Graph p5 = Graph::path(5);
    DoubleCover dc = build_double_cover(p5);
    Permutation sigma = Permutation::from_images({0, 3, 2, 1, 4, 9, 6, 7, 8, 5});
    TFMap t = extract_tf_from_sigma(dc, sigma);
    std::vector<std::string> names{"a", "b", "c", "d", "e"};
    std::string a = t.alpha.cycles(names), b = t.beta.cycles(names);
    o.pass = a == "(b d)" && b == "(a e)" && t.nontrivial() && is_tf_automorphism(p5, t);
    o.notes.push_back("alpha = " + a + ", beta = " + b);
    return o;
}

// 6. Every triangle image under every non-trivial TF pair classifies into
// one of the four configurations; nothing is left over.
Outcome triangle_images_classify() {
    Outcome o;
    long long instances = 0, unclassified = 0;
    std::map<std::string, long long> dist;
    std::string first;
    for (const Graph& g : corpus_graphs(3, 6)) {
        std::vector<std::array<int, 3>> tris = g.triangles();
        if (tris.empty()) continue;
        TFGroup tf = tf_group_brute_force(g);
        for (const TFMap& t : tf.elements) {
            if (!t.nontrivial()) continue;
            for (const std::array<int, 3>& tri : tris) {
                ++instances;
                try {
                    TriangleImageReport rep = classify_triangle_image(g, t, tri);
                    ++dist[to_string(rep.config)];
                } catch (const std::exception& e) {
                    ++unclassified;
                    if (first.empty())
                        first = write_graph6(g) + " triangle {" + std::to_string(tri[0]) + "," +
                                std::to_string(tri[1]) + "," + std::to_string(tri[2]) + "}: " +
                                e.what();
                }
            }
        }
    }
    o.pass = instances > 0 && unclassified == 0;
    o.notes.push_back(std::to_string(instances) + " (pair, triangle) instances, " +
                      std::to_string(unclassified) + " unclassified");
    std::string d;
    for (const auto& [name, count] : dist) {
        if (!d.empty()) d += ", ";
        d += name + "=" + std::to_string(count);
    }
    o.notes.push_back("distribution: " + d);
    if (!first.empty()) o.notes.push_back("first unclassified: " + first);
    return o;
}

// 7. Vertex-determining graphs admit no non-trivial TF pair whose
// components are both automorphisms or differ in order.
Outcome vertex_determining_conflicts_empty() {
    Outcome o;
    int vd_pool = 0, with_ntf = 0, bad = 0;
    std::string first;
    for (const Graph& g : corpus_graphs(3, 7)) {
        if (!g.is_vertex_determining()) continue;
        ++vd_pool;
        TFGroup tf = tf_group_via_cover(g);
        if (!has_nontrivial(tf)) continue;
        ++with_ntf;
        VertexDeterminingCheck chk = vertex_determining_conflicts(g, tf);
        if (!chk.applicable || !chk.violations.empty()) {
            ++bad;
            if (first.empty()) first = write_graph6(g);
        }
    }
    o.pass = vd_pool > 0 && with_ntf > 0 && bad == 0;
    o.notes.push_back(std::to_string(vd_pool) + " vertex-determining graphs, " +
                      std::to_string(with_ntf) + " with a non-trivial TF pair, " +
                      std::to_string(bad) + " with conflicts");
    if (!first.empty()) o.notes.push_back("first conflict: " + first);
    return o;
}

// 8. An anti-automorphism of order outside {1,2} should exist exactly when
// a non-trivial TF pair does. One direction is constructive (the C4
// rotation fixture below); the converse is measured across the corpus and
// reported as found.
Outcome anti_automorphism_biconditional() {
    Outcome o;
    Graph c4 = Graph::cycle(4);
    Permutation rot = Permutation::from_images({1, 2, 3, 0});
    std::optional<TFMap> cert = instability_from_anti(c4, rot);
    bool fixture_ok = cert.has_value() && cert->nontrivial() && is_tf_automorphism(c4, *cert) &&
                      cert->alpha.cycles() == "(0 1 2 3)" && cert->beta.cycles() == "(0 3 2 1)";
    o.notes.push_back(std::string("C4 rotation of order 4 certifies: alpha = ") +
                      (cert ? cert->alpha.cycles() : "none") + ", beta = " +
                      (cert ? cert->beta.cycles() : "none") + (fixture_ok ? "" : " [MISMATCH]"));

    int pool = 0, anti_without_tf = 0, tf_without_anti = 0;
    std::string first;
    for (const Graph& g : corpus_graphs(3, 6)) {
        ++pool;
        bool anti_big = false;
        for (const Permutation& p : all_permutations(g.vertex_count())) {
            if (!is_anti_automorphism(g, p)) continue;
            std::uint64_t k = p.order();
            if (k != 1 && k != 2) {
                anti_big = true;
                break;
            }
        }
        bool ntf = has_nontrivial(tf_group_brute_force(g));
        if (anti_big && !ntf) ++anti_without_tf;
        if (!anti_big && ntf) {
            ++tf_without_anti;
            if (first.empty()) first = write_graph6(g);
        }
    }
    o.pass = fixture_ok && anti_without_tf == 0 && tf_without_anti == 0;
    o.notes.push_back(std::to_string(pool) + " graphs swept");
    o.notes.push_back("anti-automorphism of order > 2 without a non-trivial TF pair: " +
                      std::to_string(anti_without_tf) + " graphs");
    o.notes.push_back("non-trivial TF pair without such an anti-automorphism: " +
                      std::to_string(tf_without_anti) + " graphs" +
                      (first.empty() ? "" : " (first: " + first + ")"));
    return o;
}

// 9. The eight-layer octagon stack passes the full battery; the seven-layer
// variant is refused with diameter 3, and its measured report shows which
// of the two circulating diameter formulas holds.
Outcome layered_counterexample() {
    Outcome o;
    Graph c8 = Graph::cycle(8);
    TFMap link = cycle_even_odd_shift(8);

    Counterexample ce = build_verified_counterexample(8, c8, link);
    const CounterexampleSummary& s = ce.summary;
    bool eight_ok = s.n == 64 && s.edge_count == 576 && s.connected && s.diameter == 4 &&
                    s.every_edge_on_triangle && s.vertex_determining && s.tf_valid &&
                    s.tf_nontrivial;
    o.notes.push_back("m=8: " + std::to_string(s.n) + " vertices, " +
                      std::to_string(s.edge_count) + " edges, diameter " +
                      (s.diameter ? std::to_string(*s.diameter) : "inf") +
                      ", every edge on a triangle, vertex-determining, non-trivial TF valid" +
                      (eight_ok ? "" : " [MISMATCH]"));

    bool seven_refused = false;
    std::string msg;
    try {
        build_verified_counterexample(7, c8, link);
    } catch (const PropertyFalsified& e) {
        seven_refused = true;
        msg = e.what();
    }
    LayeredSpec spec = layered_demo_spec(7, c8, link);
    LayeredGraph lg = build_layered_graph(spec);
    LayeredVerification ver = verify_layered_properties(lg, assemble_tf(spec, lg));
    bool seven_ok = seven_refused && msg.find("diameter 3") != std::string::npos &&
                    ver.diameter_bfs == 3 && ver.formula_printed == 4 && !ver.printed_matches &&
                    ver.formula_derived == 3 && ver.derived_matches;
    o.notes.push_back("m=7: builder refused (\"" + msg + "\")");
    o.notes.push_back("m=7 measured: diameter " +
                      (ver.diameter_bfs ? std::to_string(*ver.diameter_bfs) : "inf") +
                      ", formulas " + std::to_string(ver.formula_printed) + " printed / " +
                      std::to_string(ver.formula_derived) + " derived" +
                      (seven_ok ? "" : " [MISMATCH]"));
    o.pass = eight_ok && seven_ok;
    return o;
}

// 10. The cyclic stack's BFS diameter is floor(m/2) for every m in 4..12
// and every small layer family.
Outcome layered_diameter_law() {
    Outcome o;
    std::vector<Graph> layers{Graph::complete(2), Graph::path(3), Graph::cycle(4),
                              Graph::cycle(8)};
    int combos = 0, bad = 0;
    std::string first;
    for (const Graph& layer : layers) {
        for (int m = 4; m <= 12; ++m) {
            ++combos;
            LayeredSpec spec;
            spec.layers.assign(static_cast<std::size_t>(m), layer);
            std::optional<int> d = build_layered_graph(spec).graph.diameter();
            if (d != m / 2) {
                ++bad;
                if (first.empty())
                    first = "m=" + std::to_string(m) + ", layer n=" +
                            std::to_string(layer.vertex_count()) + ": diameter " +
                            (d ? std::to_string(*d) : "inf");
            }
        }
    }
    o.pass = bad == 0;
    o.notes.push_back(std::to_string(combos) + " (m, layer) combinations, " +
                      std::to_string(bad) + " off the law");
    if (!first.empty()) o.notes.push_back("first: " + first);
    return o;
}

// 11. Mapping a Z-trail through a TF pair should preserve length and
// closure class, with the parity rule intact on the images. Length and
// parity are measured alongside the class so the three claims are graded
// separately.
Outcome ztrail_mapping_invariance() {
    Outcome o;
    long long tested = 0, class_breaks = 0, len_breaks = 0, parity_breaks = 0;
    std::string first;
    for (const Graph& g : corpus_graphs(3, 6)) {
        if (g.edge_count() == 0) continue;
        TFGroup tf = tf_group_brute_force(g);
        std::vector<ZTrail> trails = random_trails(g, 100, 8, 20240811u);
        for (const TFMap& t : tf.elements) {
            for (const ZTrail& z : trails) {
                ZTrail img = map_ztrail(g, t, z);
                ++tested;
                if (img.length() != z.length()) ++len_breaks;
                ClosureClass before = classify_ztrail(z), after = classify_ztrail(img);
                if (before != after) {
                    ++class_breaks;
                    if (first.empty())
                        first = write_graph6(g) + ", trail " + arcs_string(z.arcs) + ": " +
                                to_string(before) + " -> " + to_string(after) + " under alpha = " +
                                t.alpha.cycles() + ", beta = " + t.beta.cycles();
                }
                bool odd = img.length() % 2 == 1;
                if (after == ClosureClass::SemiClosed && !odd) ++parity_breaks;
                if (after == ClosureClass::Closed && odd) ++parity_breaks;
            }
        }
    }
    o.pass = tested > 0 && class_breaks == 0 && len_breaks == 0 && parity_breaks == 0;
    o.notes.push_back(std::to_string(tested) + " (pair, trail) instances; length breaks " +
                      std::to_string(len_breaks) + ", parity breaks " +
                      std::to_string(parity_breaks) + ", closure class changes " +
                      std::to_string(class_breaks));
    if (!first.empty()) o.notes.push_back("first class change: " + first);
    return o;
}

// 12. graph6 decoding then encoding is the identity, byte for byte, on the
// exhaustive corpus and on random graphs up to 100 vertices.
Outcome graph6_roundtrip() {
    Outcome o;
    long long corpus_count = 0, corpus_bad = 0;
    std::string first;
    for (int n = 3; n <= 7; ++n) {
        for (const std::string& line : corpus_lines(n)) {
            ++corpus_count;
            if (write_graph6(parse_graph6(line)) != line) {
                ++corpus_bad;
                if (first.empty()) first = line;
            }
        }
    }
    std::mt19937 rng(987654321u);
    std::uniform_int_distribution<int> nd(1, 100);
    long long random_bad = 0;
    const int reps = 10000;
    for (int rep = 0; rep < reps; ++rep) {
        int n = nd(rng);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1u) edges.push_back({u, v});
        Graph g = Graph::from_edge_list(n, edges);
        std::string enc = write_graph6(g);
        if (parse_graph6(enc) != g) {
            ++random_bad;
            if (first.empty()) first = enc;
        }
    }
    o.pass = corpus_bad == 0 && random_bad == 0;
    o.notes.push_back(std::to_string(corpus_count) + " corpus lines, " +
                      std::to_string(corpus_bad) + " byte mismatches; " + std::to_string(reps) +
                      " random graphs, " + std::to_string(random_bad) + " decode mismatches");
    if (!first.empty()) o.notes.push_back("first mismatch: " + first);
    return o;
}

struct Criterion {
    int number;
    const char* title;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "cover automorphism order is twice the TF order on connected non-bipartite graphs, n <= 7",
     cover_order_law},
    {2, "order-based instability coincides with a non-trivial TF pair there; K2 separates them",
     order_test_matches_tf_test},
    {3, "brute-force and cover-extracted TF groups match element for element, connected n <= 6",
     tf_routes_agree},
    {4, "the Petersen graph is stable with orders 120 / 240 / 120", petersen_verdict},
    {5, "splitting the fixed 5-path cover automorphism gives alpha = (b d), beta = (a e)",
     path5_extraction_fixture},
    {6, "every triangle image under a non-trivial TF pair fits one of four configurations, n <= 6",
     triangle_images_classify},
    {7, "vertex-determining graphs yield no conflicting non-trivial TF components, n <= 7",
     vertex_determining_conflicts_empty},
    {8, "anti-automorphisms of order above 2 exist exactly when a non-trivial TF pair does, n <= 6",
     anti_automorphism_biconditional},
    {9, "the 8-layer octagon stack passes every check; the 7-layer variant measures diameter 3",
     layered_counterexample},
    {10, "layered graphs have BFS diameter floor(m/2) for m in 4..12 over four layer families",
     layered_diameter_law},
    {11, "mapping a Z-trail preserves length and closure class with the parity rule intact, n <= 6",
     ztrail_mapping_invariance},
    {12, "graph6 decode then encode is byte-exact on the corpus and on 10^4 random graphs",
     graph6_roundtrip},
};

} // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) {
        try {
            wanted.push_back(std::stoi(argv[i]));
        } catch (const std::exception&) {
            std::fprintf(stderr, "usage: %s [criterion-number...]\n", argv[0]);
            return 2;
        }
    }
    for (int w : wanted) {
        bool known = false;
        for (const Criterion& c : kCriteria) known = known || c.number == w;
        if (!known) {
            std::fprintf(stderr, "no criterion %d (valid: 1..12)\n", w);
            return 2;
        }
    }

    bool all_pass = true;
    for (const Criterion& c : kCriteria) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.number) == wanted.end())
            continue;
        Outcome o = c.run();
        std::printf("[%s] %2d  %s\n", o.pass ? "PASS" : "FAIL", c.number, c.title);
        for (const std::string& note : o.notes) std::printf("          %s\n", note.c_str());
        if (!o.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}
