#include "doctest.h"

#include <sstream>
#include <stdexcept>

#include "corpus.hpp"
#include "twofold/census.hpp"
#include "twofold/graph.hpp"
#include "twofold/graph6.hpp"

using namespace twofold;

namespace {
std::vector<CensusRecord> census_of(const std::string& text, CensusOptions opt = {}) {
    std::istringstream in(text);
    return run_census(in, opt);
}

bool same_payload(const CensusRecord& a, const CensusRecord& b) {
    return a.index == b.index && a.graph6 == b.graph6 && a.error == b.error && a.n == b.n &&
           a.edge_count == b.edge_count && a.triangle_count == b.triangle_count &&
           a.connected == b.connected && a.bipartite == b.bipartite &&
           a.vertex_determining == b.vertex_determining &&
           a.every_edge_on_triangle == b.every_edge_on_triangle && a.aut_order == b.aut_order &&
           a.cover_aut_order == b.cover_aut_order && a.tf_order == b.tf_order &&
           a.unstable_by_definition == b.unstable_by_definition &&
           a.has_nontrivial_tf == b.has_nontrivial_tf &&
           a.tf_criterion_consistent == b.tf_criterion_consistent &&
           a.triangle_config_counts == b.triangle_config_counts;
}
} // namespace

TEST_CASE("single-graph classification") {
    SUBCASE("C4") {
        CensusRecord rec = classify_graph(Graph::cycle(4), CensusOptions{});
        CHECK(rec.n == 4);
        CHECK(rec.edge_count == 4);
        CHECK(rec.triangle_count == 0);
        CHECK(rec.connected);
        CHECK(rec.bipartite);
        CHECK(!rec.vertex_determining);
        CHECK(!rec.every_edge_on_triangle);
        CHECK(rec.aut_order == 8);
        CHECK(rec.cover_aut_order == 128);
        CHECK(rec.tf_order == 32);
        CHECK(rec.unstable_by_definition);
        CHECK(rec.has_nontrivial_tf);
        CHECK(rec.tf_criterion_consistent);
        REQUIRE(rec.triangle_config_counts.has_value());
        for (const auto& [cfg, count] : *rec.triangle_config_counts) CHECK(count == 0);
    }
    SUBCASE("the diamond counts its triangle images") {
        Graph dia = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
        CensusRecord rec = classify_graph(dia, CensusOptions{});
        CHECK(rec.triangle_count == 2);
        CHECK(rec.every_edge_on_triangle);
        CHECK(rec.tf_order == 8);
        CHECK(rec.unstable_by_definition);
        REQUIRE(rec.triangle_config_counts.has_value());
        // 4 non-trivial elements x 2 triangles, every image two triangles
        // over a shared edge
        CHECK(rec.triangle_config_counts->at(TriangleImageConfig::TwoTrianglesSharedEdge) == 8);
        CHECK(rec.triangle_config_counts->at(TriangleImageConfig::ClosedZ6) == 0);
    }
    SUBCASE("the Petersen graph goes through the cover route") {
        CensusOptions opt;
        opt.oracle_bound = 6;  // n = 10 forces the stabiliser extraction
        CensusRecord rec = classify_graph(Graph::petersen(), opt);
        CHECK(rec.aut_order == 120);
        CHECK(rec.cover_aut_order == 240);
        CHECK(rec.tf_order == 120);
        CHECK(!rec.unstable_by_definition);
        CHECK(!rec.has_nontrivial_tf);
        CHECK(rec.tf_criterion_consistent);
    }
    SUBCASE("a P4 line is unstable by the order test only") {
        CensusRecord rec = classify_graph(Graph::path(4), CensusOptions{});
        CHECK(rec.unstable_by_definition);
        CHECK(!rec.has_nontrivial_tf);
        CHECK(!rec.tf_criterion_consistent);
    }
}

TEST_CASE("census streams") {
    SUBCASE("empty input gives zero records") {
        CHECK(census_of("").empty());
        CHECK(census_of("\n\n").empty());
    }
    SUBCASE("records preserve input order and indices") {
        auto recs = census_of("Cl\nA_\nBw\n");
        REQUIRE(recs.size() == 3);
        CHECK(recs[0].graph6 == "Cl");
        CHECK(recs[0].index == 0);
        CHECK(recs[1].graph6 == "A_");
        CHECK(recs[1].n == 2);
        CHECK(recs[2].index == 2);
    }
    SUBCASE("parse failures become error records and processing continues") {
        auto recs = census_of("Cl\n!!!\nA_\n");
        REQUIRE(recs.size() == 3);
        CHECK(!recs[0].error);
        REQUIRE(recs[1].error.has_value());
        CHECK(recs[1].error->find("line 2") != std::string::npos);
        CHECK(recs[1].graph6 == "!!!");
        CHECK(!recs[2].error);
        CHECK(recs[2].n == 2);
    }
    SUBCASE("worker count does not change the records") {
        std::string text;
        for (const std::string& line : twofold_tests::corpus_lines(5)) text += line + "\n";
        CensusOptions serial;
        CensusOptions parallel;
        parallel.jobs = 4;
        auto a = census_of(text, serial);
        auto b = census_of(text, parallel);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(same_payload(a[i], b[i]));
    }
    SUBCASE("beyond the oracle bound the stabiliser supplies the TF order") {
        CensusOptions tight;
        tight.oracle_bound = 3;
        auto recs = census_of("Cl\n", tight);
        REQUIRE(recs.size() == 1);
        CHECK(recs[0].tf_order == 32);  // same numbers, different route
        CHECK(recs[0].triangle_config_counts.has_value());
    }
    SUBCASE("config counts are withheld when elements cannot be enumerated") {
        CensusOptions tiny;
        tiny.oracle_bound = 3;
        tiny.enum_cap = 4;  // the 32-element stabiliser refuses to enumerate
        auto recs = census_of("Cl\n", tiny);
        REQUIRE(recs.size() == 1);
        CHECK(recs[0].tf_order == 32);  // order still known from the chain
        CHECK(!recs[0].triangle_config_counts.has_value());
    }
}

TEST_CASE("predicate language") {
    CensusRecord c4 = classify_graph(Graph::cycle(4), CensusOptions{});
    CensusRecord dia = classify_graph(
        Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), CensusOptions{});

    CHECK(eval_predicate(c4, "unstable"));
    CHECK(eval_predicate(c4, "bipartite && !has_triangle"));
    CHECK(!eval_predicate(c4, "connected && every_edge_on_triangle"));
    CHECK(eval_predicate(c4, "n == 4 && edges == 4"));
    CHECK(eval_predicate(c4, "tf_order >= 32 && tf_order <= 32"));
    CHECK(eval_predicate(c4, "aut_order != 7"));
    CHECK(eval_predicate(c4, "n < 5 && edges > 3"));
    CHECK(eval_predicate(dia, "shared_edge == 8"));
    CHECK(eval_predicate(dia, "has_triangle && triangles == 2"));
    // precedence: ! binds tighter than &&, which binds tighter than ||
    CHECK(eval_predicate(c4, "has_triangle && n == 9 || unstable"));
    CHECK(eval_predicate(c4, "!(bipartite && has_triangle)"));
    CHECK(!eval_predicate(c4, "!bipartite && !has_triangle"));

    CHECK_THROWS_AS(eval_predicate(c4, "colour == 3"), std::invalid_argument);
    CHECK_THROWS_AS(eval_predicate(c4, "n =="), std::invalid_argument);
    CHECK_THROWS_AS(eval_predicate(c4, "(n == 4"), std::invalid_argument);
    CHECK_THROWS_AS(eval_predicate(c4, "n == 4 extra"), std::invalid_argument);

    // error records never match
    auto recs = census_of("!!!\n");
    REQUIRE(recs.size() == 1);
    CHECK(!eval_predicate(recs[0], "n >= 0 || unstable"));

    // absent config counts make their comparisons false, not errors
    CensusOptions tiny;
    tiny.oracle_bound = 3;
    tiny.enum_cap = 4;
    auto held = census_of("Cl\n", tiny);
    CHECK(!eval_predicate(held[0], "shared_edge == 0"));
    CHECK(eval_predicate(held[0], "unstable"));
}

TEST_CASE("minimal matching records") {
    std::string text;
    for (int n = 3; n <= 4; ++n)
        for (const std::string& line : twofold_tests::corpus_lines(n)) text += line + "\n";
    auto recs = census_of(text);

    SUBCASE("the least unstable record is the edgeless 3-graph") {
        auto mins = find_minimal(recs, "unstable");
        REQUIRE(mins.size() == 1);
        CHECK(mins[0].graph6 == "B?");
        CHECK(mins[0].n == 3);
        CHECK(mins[0].edge_count == 0);
        // C4 matches the predicate but loses on size
        CensusRecord c4 = classify_graph(Graph::cycle(4), CensusOptions{});
        CHECK(eval_predicate(c4, "unstable"));
    }
    SUBCASE("sharper predicates reach the diamond") {
        auto mins = find_minimal(recs, "unstable && connected && every_edge_on_triangle");
        REQUIRE(mins.size() == 1);
        CHECK(mins[0].graph6 == "C|");
        CHECK(mins[0].n == 4);
        CHECK(mins[0].edge_count == 5);
    }
    SUBCASE("unsatisfiable predicates give an empty result") {
        CHECK(find_minimal(recs, "n > 90").empty());
    }
    SUBCASE("an empty corpus is an input error") {
        CHECK_THROWS_AS(find_minimal({}, "unstable"), std::invalid_argument);
    }
    SUBCASE("ties are reported in graph6 order") {
        // both two-edge 4-vertex graphs (the path P3 plus an isolated vertex
        // and the perfect matching) tie at (n, edges) = (4, 2)
        auto mins = find_minimal(recs, "n == 4 && edges == 2");
        REQUIRE(mins.size() == 2);
        CHECK(mins[0].graph6 == "CB");
        CHECK(mins[1].graph6 == "C`");
    }
}
