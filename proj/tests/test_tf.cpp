#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "corpus.hpp"
#include "twofold/aut.hpp"
#include "twofold/double_cover.hpp"
#include "twofold/errors.hpp"
#include "twofold/graph.hpp"
#include "twofold/permutation.hpp"
#include "twofold/tf.hpp"

using namespace twofold;
using twofold_tests::corpus_graphs;

namespace {
Graph diamond() { return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

bool has_nontrivial(const TFGroup& tf) {
    for (const auto& t : tf.elements)
        if (t.nontrivial()) return true;
    return false;
}
} // namespace

TEST_CASE("pair algebra") {
    TFMap id = tf_identity(4);
    CHECK(!id.nontrivial());
    TFMap t{Permutation::from_images({1, 2, 3, 0}), Permutation::identity(4)};
    CHECK(t.nontrivial());
    // componentwise product, right factor first
    TFMap sq = compose(t, t);
    CHECK(sq.alpha(0) == 2);
    CHECK(sq.beta.is_identity());
    TFMap inv = inverse(t);
    CHECK(compose(t, inv) == id);
    CHECK(compose(inv, t) == id);
    TFMap diag = tf_diagonal(Permutation::from_images({1, 0, 2, 3}));
    CHECK(!diag.nontrivial());
    CHECK(diag.alpha == diag.beta);
}

TEST_CASE("arc test for TF-maps") {
    Graph c4 = Graph::cycle(4);
    // shifting only the odd class by two: arcs (u,v) -> (u, v+2) land on arcs
    TFMap t{Permutation::identity(4), Permutation::from_images({0, 3, 2, 1})};
    CHECK(is_tf_automorphism(c4, t));
    TFMap bad{Permutation::from_images({1, 0, 2, 3}), Permutation::identity(4)};
    CHECK(!is_tf_automorphism(c4, bad));
    // diagonal pairs reduce to plain automorphisms
    CHECK(is_tf_automorphism(c4, tf_diagonal(Permutation::from_images({1, 2, 3, 0}))));
    CHECK_THROWS_AS(is_tf_automorphism(c4, tf_identity(5)), std::invalid_argument);

    // isomorphism version across a relabelling
    Graph p4 = Graph::path(4);
    Permutation relab = Permutation::from_images({2, 0, 3, 1});
    Graph q = relabel(p4, relab);
    CHECK(is_tf_isomorphism(p4, q, tf_diagonal(relab)));
    CHECK(!is_tf_isomorphism(p4, Graph::cycle(4), tf_diagonal(Permutation::identity(4))));
}

TEST_CASE("splitting a class-preserving cover automorphism") {
    // the five-vertex path a-b-c-d-e: one cover automorphism fixes one copy
    // of the odd component and reverses the other, landing alpha and beta on
    // different permutations
    Graph p5 = Graph::path(5);
    DoubleCover dc = build_double_cover(p5);
    // images on cover indices 0..9: fixes a0 b1 c0 d1 c1 e0, swaps b0<->d0
    // and a1<->e1
    Permutation sigma = Permutation::from_images({0, 3, 2, 1, 4, 9, 6, 7, 8, 5});
    TFMap t = extract_tf_from_sigma(dc, sigma);
    std::vector<std::string> names{"a", "b", "c", "d", "e"};
    CHECK(t.alpha.cycles(names) == "(b d)");
    CHECK(t.beta.cycles(names) == "(a e)");
    CHECK(is_tf_automorphism(p5, t));
    CHECK(t.nontrivial());
    // a lift that moves V_0 off itself is rejected
    CHECK_THROWS_AS(extract_tf_from_sigma(dc, swap_map(dc)), std::invalid_argument);
    // a non-automorphism of the cover is rejected even when class-preserving
    Permutation notaut = Permutation::from_images({1, 0, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK_THROWS_AS(extract_tf_from_sigma(dc, notaut), std::invalid_argument);
}

TEST_CASE("the two TF group constructions agree element for element") {
    for (const Graph& g : corpus_graphs(3, 5)) {
        TFGroup brute = tf_group_brute_force(g);
        TFGroup cover = tf_group_via_cover(g);
        CHECK(brute.order == cover.order);
        CHECK(brute.elements == cover.elements);
    }
}

TEST_CASE("TF groups of named graphs") {
    CHECK(tf_group_brute_force(Graph::cycle(3)).order == 6);   // all diagonal
    CHECK(tf_group_brute_force(Graph::complete(2)).order == 2);
    TFGroup c4 = tf_group_brute_force(Graph::cycle(4));
    CHECK(c4.order == 32);
    CHECK(has_nontrivial(c4));
    TFGroup dia = tf_group_brute_force(diamond());
    CHECK(dia.order == 8);
    CHECK(has_nontrivial(dia));
    // group axioms on a nonabelian example: closure under product/inverse
    for (const auto& s : dia.elements) {
        CHECK(std::binary_search(dia.elements.begin(), dia.elements.end(), inverse(s)));
        for (const auto& t : dia.elements)
            CHECK(std::binary_search(dia.elements.begin(), dia.elements.end(), compose(s, t)));
    }
    CHECK_THROWS_AS(tf_group_brute_force(Graph::cycle(8), 6), ResourceLimitError);
}

TEST_CASE("stability verdicts") {
    SUBCASE("C4 is unstable with a pure-beta certificate") {
        StabilityReport rep = stability_verdict(Graph::cycle(4));
        CHECK(rep.aut_order == 8);
        CHECK(rep.cover_aut_order == 128);
        CHECK(rep.tf_order == 32);
        CHECK(rep.unstable_by_definition);
        CHECK(rep.has_nontrivial_tf);
        CHECK(rep.tf_criterion_consistent);
        REQUIRE(rep.tf_certificate.has_value());
        CHECK(rep.tf_certificate->alpha.is_identity());
        CHECK(rep.tf_certificate->beta.cycles() == "(1 3)");
        CHECK(is_tf_automorphism(Graph::cycle(4), *rep.tf_certificate));
    }
    SUBCASE("the Petersen graph is stable") {
        StabilityReport rep = stability_verdict(Graph::petersen());
        CHECK(rep.aut_order == 120);
        CHECK(rep.cover_aut_order == 240);
        CHECK(rep.tf_order == 120);
        CHECK(!rep.unstable_by_definition);
        CHECK(!rep.has_nontrivial_tf);
        CHECK(rep.tf_criterion_consistent);
        CHECK(!rep.tf_certificate.has_value());
        CHECK(!rep.unexpected_witness.has_value());
    }
    SUBCASE("K2 splits the two notions of instability") {
        // the cover is a 2-edge matching whose group (order 8) strictly
        // exceeds Aut(K2) x Z_2 (order 4), yet every TF pair is diagonal
        Graph k2 = Graph::complete(2);
        StabilityReport rep = stability_verdict(k2);
        CHECK(rep.aut_order == 2);
        CHECK(rep.cover_aut_order == 8);
        CHECK(rep.tf_order == 2);
        CHECK(rep.unstable_by_definition);
        CHECK(!rep.has_nontrivial_tf);
        CHECK(!rep.tf_criterion_consistent);
        CHECK(!rep.tf_certificate.has_value());
        REQUIRE(rep.unexpected_witness.has_value());
        DoubleCover dc = build_double_cover(k2);
        CHECK(is_automorphism(dc.graph, *rep.unexpected_witness));
    }
    SUBCASE("the diamond is unstable") {
        StabilityReport rep = stability_verdict(diamond());
        CHECK(rep.aut_order == 4);
        CHECK(rep.cover_aut_order == 16);
        CHECK(rep.tf_order == 8);
        CHECK(rep.unstable_by_definition);
        CHECK(rep.has_nontrivial_tf);
        REQUIRE(rep.tf_certificate.has_value());
        CHECK(rep.tf_certificate->nontrivial());
    }
}

TEST_CASE("anti-automorphisms") {
    Graph c4 = Graph::cycle(4);
    Permutation rot = Permutation::from_images({1, 2, 3, 0});
    CHECK(is_anti_automorphism(c4, rot));
    CHECK(rot.order() == 4);
    auto cert = instability_from_anti(c4, rot);
    REQUIRE(cert.has_value());
    CHECK(cert->alpha == rot);
    CHECK(cert->beta == rot.inverse());
    CHECK(cert->alpha.cycles() == "(0 1 2 3)");
    CHECK(cert->beta.cycles() == "(0 3 2 1)");
    CHECK(is_tf_automorphism(c4, *cert));

    // gamma of order 2 certifies nothing even when it is an anti-automorphism
    Graph dia = diamond();
    Permutation swap23 = Permutation::from_images({0, 1, 3, 2});
    CHECK(is_anti_automorphism(dia, swap23));
    CHECK(!instability_from_anti(dia, swap23).has_value());

    // non-anti input is a precondition violation: (0 2) sends the edge
    // {0,3} to the non-edge {2,3}
    Permutation swap02 = Permutation::from_images({2, 1, 0, 3});
    CHECK(!is_anti_automorphism(dia, swap02));
    CHECK_THROWS_AS(instability_from_anti(dia, swap02), std::invalid_argument);

    // round trip: gamma recovered from the pair it generates
    CHECK(anti_automorphism_from_tf(*cert) == compose(rot, rot));
    TFMap t{rot, Permutation::identity(4)};
    CHECK(anti_automorphism_from_tf(t) == rot);
}

TEST_CASE("twin-freeness constrains non-trivial pairs") {
    // not applicable when twins exist
    Graph dia = diamond();
    VertexDeterminingCheck chk = vertex_determining_conflicts(dia, tf_group_brute_force(dia));
    CHECK(!chk.applicable);
    // applicable and clean on twin-free graphs
    Graph c5 = Graph::cycle(5);
    chk = vertex_determining_conflicts(c5, tf_group_brute_force(c5));
    CHECK(chk.applicable);
    CHECK(chk.violations.empty());
    Graph p4 = Graph::path(4);
    chk = vertex_determining_conflicts(p4, tf_group_brute_force(p4));
    CHECK(chk.applicable);
    CHECK(chk.violations.empty());
}
