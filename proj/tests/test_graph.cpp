#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "synex/errors.hpp"
#include "synex/graph.hpp"
#include "synex/lexicon.hpp"
#include "test_util.hpp"

using namespace synex;
using testutil::t;

namespace {

std::vector<std::vector<std::string>> surfaces(const std::vector<CyclicPath>& paths) {
    std::vector<std::vector<std::string>> out;
    for (const auto& p : paths) {
        std::vector<std::string> nodes;
        for (const auto& term : p.nodes) nodes.push_back(term.surface);
        out.push_back(std::move(nodes));
    }
    return out;
}

} // namespace

TEST_CASE("co-membership build") {
    SynonymyGraph g = SynonymyGraph::build(testutil::triangle());
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 6);

    NodeId a = *g.node_of(t("a")), b = *g.node_of(t("b")), c = *g.node_of(t("c"));
    for (auto [u, v] : {std::pair{a, b}, {b, c}, {c, a}}) {
        CHECK(g.has_edge(u, v));
        CHECK(g.has_edge(v, u)); // symmetric by construction
        CHECK_FALSE(g.has_edge(u, u));
    }

    SynonymyGraph chain = SynonymyGraph::build(testutil::chain());
    CHECK(chain.edge_count() == 4);
    CHECK_FALSE(chain.has_edge(*chain.node_of(t("a")), *chain.node_of(t("c"))));
}

TEST_CASE("shared terms do not duplicate edges") {
    // a and b co-occur twice; the edge pair must appear once.
    Lexicon lex({testutil::synset("s1", {t("a"), t("b")}),
                 testutil::synset("s2", {t("a"), t("b"), t("c")})});
    SynonymyGraph g = SynonymyGraph::build(lex);
    CHECK(g.edge_count() == 6);
    CHECK(g.successors(*g.node_of(t("a"))).size() == 2);
}

TEST_CASE("build rejects an empty lexicon") {
    CHECK_THROWS_AS(SynonymyGraph::build(Lexicon{}), ArgumentError);
}

TEST_CASE("nodes are sorted by (lang, surface)") {
    Lexicon lex({testutil::synset("s1", {t("zed", "en"), t("ب", "ar"), t("apple", "en")})});
    SynonymyGraph g = SynonymyGraph::build(lex);
    REQUIRE(g.node_count() == 3);
    CHECK(g.term_of(0) == t("ب", "ar"));
    CHECK(g.term_of(1) == t("apple", "en"));
    CHECK(g.term_of(2) == t("zed", "en"));
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto succ = g.successors(u);
        CHECK(std::is_sorted(succ.begin(), succ.end()));
    }
}

TEST_CASE("triangle enumeration is exact and lexicographic") {
    SynonymyGraph g = SynonymyGraph::build(testutil::triangle());

    auto level3 = enumerate_cycles(g, t("a"), 3);
    CHECK(surfaces(level3) == std::vector<std::vector<std::string>>{
                                  {"a", "b", "a"},
                                  {"a", "b", "c", "a"},
                                  {"a", "c", "a"},
                                  {"a", "c", "b", "a"},
                              });
    for (const auto& p : level3) {
        CHECK(p.root() == t("a"));
        CHECK(p.length() >= 2);
        CHECK(p.length() <= 3);
    }

    auto level2 = enumerate_cycles(g, t("a"), 2);
    CHECK(surfaces(level2) == std::vector<std::vector<std::string>>{
                                  {"a", "b", "a"},
                                  {"a", "c", "a"},
                              });
}

TEST_CASE("every co-member pair produces a 2-cycle") {
    Lexicon lex({testutil::synset("s1", {t("a"), t("b"), t("c")}),
                 testutil::synset("s2", {t("c"), t("d")}),
                 testutil::synset("s3", {t("d"), t("e"), t("a")})});
    SynonymyGraph g = SynonymyGraph::build(lex);
    for (const Synset& s : lex.synsets()) {
        for (const Term& u : s.terms) {
            auto cycles = enumerate_cycles(g, u, 2);
            for (const Term& v : s.terms) {
                if (u == v) continue;
                CyclicPath expected{{u, v, u}};
                bool found = false;
                for (const auto& p : cycles) found |= p.nodes == expected.nodes;
                CHECK(found);
            }
        }
    }
}

TEST_CASE("synset enumeration pools per-root cycles in synset order") {
    SynonymyGraph g = SynonymyGraph::build(testutil::triangle());
    Synset s = testutil::synset("q", {t("a"), t("b")});

    SynsetCycles cycles = enumerate_synset_cycles(g, s, 3, FirstHop::any_neighbor);
    CHECK(cycles.paths.size() == 8);
    CHECK(cycles.roots_present == std::vector<Term>{t("a"), t("b")});
    CHECK(cycles.skipped_terms.empty());
    // First four rooted at a, last four at b.
    for (std::size_t i = 0; i < 4; ++i) CHECK(cycles.paths[i].root() == t("a"));
    for (std::size_t i = 4; i < 8; ++i) CHECK(cycles.paths[i].root() == t("b"));
}

TEST_CASE("absent synset terms are skipped and reported") {
    SynonymyGraph g = SynonymyGraph::build(testutil::triangle());
    Synset s = testutil::synset("q", {t("a"), t("ghost")});
    SynsetCycles cycles = enumerate_synset_cycles(g, s, 3, FirstHop::any_neighbor);
    CHECK(cycles.roots_present == std::vector<Term>{t("a")});
    CHECK(cycles.skipped_terms == std::vector<Term>{t("ghost")});
    CHECK(cycles.paths.size() == 4);
}

TEST_CASE("synset-restricted first hop reproduces the ride example") {
    auto lex = load_lexicon(testutil::data_path("ride_mini.tsv")).lexicon;
    SynonymyGraph g = SynonymyGraph::build(lex);
    const Synset* query = lex.find("m1");
    REQUIRE(query != nullptr);

    SynsetCycles cycles = enumerate_synset_cycles(g, *query, 4, FirstHop::synset_terms);
    REQUIRE(cycles.paths.size() == 10);

    const std::string rakiba = "رَكِبَ";
    const std::string imtata = "إِمتَطَى";
    CHECK(surfaces(cycles.paths) == std::vector<std::vector<std::string>>{
                                        {rakiba, "ride", imtata, rakiba},
                                        {rakiba, "ride", imtata, "sit", rakiba},
                                        {rakiba, "ride", rakiba},
                                        {rakiba, "ride", "sit", imtata, rakiba},
                                        {rakiba, "ride", "sit", rakiba},
                                        {"ride", rakiba, imtata, "ride"},
                                        {"ride", rakiba, imtata, "sit", "ride"},
                                        {"ride", rakiba, "ride"},
                                        {"ride", rakiba, "sit", imtata, "ride"},
                                        {"ride", rakiba, "sit", "ride"},
                                    });

    // Unrestricted enumeration adds first hops leaving the synset.
    SynsetCycles loose = enumerate_synset_cycles(g, *query, 4, FirstHop::any_neighbor);
    CHECK(loose.paths.size() > 10);
}

TEST_CASE("from_edges builds arbitrary digraphs") {
    std::vector<Term> nodes = {t("a"), t("b"), t("c")};
    SynonymyGraph g = SynonymyGraph::from_edges(nodes, {{t("a"), t("b")}, {t("b"), t("c")},
                                                        {t("c"), t("a")}});
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(*g.node_of(t("a")), *g.node_of(t("b"))));
    CHECK_FALSE(g.has_edge(*g.node_of(t("b")), *g.node_of(t("a"))));

    // One directed 3-cycle, no 2-cycles.
    auto cycles = enumerate_cycles(g, t("a"), 4);
    CHECK(surfaces(cycles) == std::vector<std::vector<std::string>>{{"a", "b", "c", "a"}});

    CHECK_THROWS_AS(SynonymyGraph::from_edges({t("a"), t("a")}, {}), ArgumentError);
    CHECK_THROWS_AS(SynonymyGraph::from_edges(nodes, {{t("a"), t("a")}}), ArgumentError);
    CHECK_THROWS_AS(SynonymyGraph::from_edges(nodes, {{t("a"), t("nope")}}), ArgumentError);
    CHECK_THROWS_AS(SynonymyGraph::from_edges(nodes, {{t("a"), t("b")}, {t("a"), t("b")}}),
                    ArgumentError);
}

TEST_CASE("enumeration guards") {
    SynonymyGraph g = SynonymyGraph::build(testutil::triangle());
    CHECK_THROWS_AS(enumerate_cycles(g, t("a"), 1), ArgumentError);
    CHECK(enumerate_cycles(g, t("ghost"), 3).empty());

    EnumerationOptions tight;
    tight.max_paths_per_root = 3;
    CHECK_THROWS_AS(enumerate_cycles(g, t("a"), 3, tight), CycleLimitError);
    tight.max_paths_per_root = 4;
    CHECK_NOTHROW(enumerate_cycles(g, t("a"), 3, tight));

    try {
        tight.max_paths_per_root = 1;
        enumerate_cycles(g, t("a"), 3, tight);
        FAIL("expected CycleLimitError");
    } catch (const CycleLimitError& e) {
        CHECK(e.limit() == 1);
        CHECK(e.root() == "xx:a");
    }
}

TEST_CASE("oracle equivalence on fixed digraphs") {
    // Dense symmetric graph plus a directed appendix.
    std::vector<Term> nodes;
    for (char c = 'a'; c <= 'f'; ++c) nodes.push_back(t(std::string(1, c)));
    std::vector<std::pair<Term, Term>> edges;
    auto both = [&](const char* u, const char* v) {
        edges.push_back({t(u), t(v)});
        edges.push_back({t(v), t(u)});
    };
    both("a", "b");
    both("a", "c");
    both("b", "c");
    both("c", "d");
    both("d", "e");
    edges.push_back({t("e"), t("a")});
    edges.push_back({t("a"), t("f")});
    edges.push_back({t("f"), t("b")});
    SynonymyGraph g = SynonymyGraph::from_edges(nodes, edges);

    for (int level = 2; level <= 5; ++level) {
        for (NodeId root = 0; root < g.node_count(); ++root) {
            auto expected = oracle::cycles(g, root, level);
            auto actual = enumerate_cycles(g, g.term_of(root), level);
            REQUIRE(actual.size() == expected.size());
            for (std::size_t i = 0; i < actual.size(); ++i)
                CHECK(oracle::to_ids(g, actual[i]) == expected[i]);
        }
    }
}

TEST_CASE("format_path") {
    CyclicPath p{{t("a", "en"), t("b", "fr"), t("a", "en")}};
    CHECK(format_path(p) == "en:a -> fr:b -> en:a");
}
