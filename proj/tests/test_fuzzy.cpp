#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "synex/errors.hpp"
#include "synex/fuzzy.hpp"
#include "synex/random.hpp"
#include "test_util.hpp"

using namespace synex;
using testutil::t;

TEST_CASE("params validation") {
    CHECK_NOTHROW(FuzzyParams{0.5, 0.5, 4}.validate());
    CHECK_NOTHROW(FuzzyParams{1.0, 0.0, 2}.validate());
    CHECK_THROWS_AS((FuzzyParams{0.6, 0.6, 4}.validate()), ArgumentError);
    CHECK_THROWS_AS((FuzzyParams{-0.1, 1.1, 4}.validate()), ArgumentError);
    CHECK_THROWS_AS((FuzzyParams{0.5, 0.5, 1}.validate()), ArgumentError);
    // Tiny drift inside the tolerance is fine.
    CHECK_NOTHROW(FuzzyParams{0.3, 0.7 + 5e-10, 3}.validate());
}

TEST_CASE("extract_candidates drops synset members") {
    SynonymyGraph g = SynonymyGraph::build(testutil::triangle());
    auto paths = enumerate_cycles(g, t("a"), 3);
    Synset s = testutil::synset("q", {t("a")});
    auto candidates = extract_candidates(paths, s);
    CHECK(candidates == std::set<Term>{t("b"), t("c")});

    Synset wider = testutil::synset("q", {t("a"), t("b")});
    CHECK(extract_candidates(paths, wider) == std::set<Term>{t("c")});
}

TEST_CASE("single-root triangle scores") {
    SynonymyGraph g = SynonymyGraph::build(testutil::triangle());
    Synset s = testutil::synset("q", {t("a")});
    SynsetCycles cycles = enumerate_synset_cycles(g, s, 3, FirstHop::any_neighbor);
    REQUIRE(cycles.paths.size() == 4);

    ExpansionResult r = score_candidates(cycles, s, FuzzyParams{0.5, 0.5, 3});
    REQUIRE(r.candidates.size() == 2);
    // b and c each sit on 3 of the 4 cycles and cover the only root.
    for (const auto& c : r.candidates) {
        CHECK(c.paths_containing == 3);
        CHECK(c.total_paths == 4);
        CHECK(c.roots_covered == 1);
        CHECK(c.total_roots == 1);
        CHECK(c.path_coverage == doctest::Approx(0.75).epsilon(1e-12));
        CHECK(c.fuzzy == doctest::Approx(0.875).epsilon(1e-12));
    }

    ExpansionResult p_only = score_candidates(cycles, s, FuzzyParams{1.0, 0.0, 3});
    CHECK(p_only.candidates[0].fuzzy == doctest::Approx(0.75).epsilon(1e-12));
    ExpansionResult q_only = score_candidates(cycles, s, FuzzyParams{0.0, 1.0, 3});
    CHECK(q_only.candidates[0].fuzzy == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ride worked example") {
    auto lex = load_lexicon(testutil::data_path("ride_mini.tsv")).lexicon;
    const Synset* query = lex.find("m1");
    REQUIRE(query != nullptr);

    ExpandOptions options; // defaults: level 4, theta 0.5/0.5, synset first hop
    ExpansionResult r = expand_synset(lex, *query, options);

    CHECK(r.cycle_count == 10);
    REQUIRE(r.candidates.size() == 2);
    // Equal scores; the Arabic term sorts first on the (lang, surface) tie.
    CHECK(r.candidates[0].term == Term{"إِمتَطَى", "ar"});
    CHECK(r.candidates[1].term == Term{"sit", "en"});
    for (const auto& c : r.candidates) {
        CHECK(c.paths_containing == 6);
        CHECK(c.total_paths == 10);
        CHECK(c.roots_covered == 2);
        CHECK(c.total_roots == 2);
        CHECK(c.fuzzy == doctest::Approx(0.8).epsilon(1e-12));
    }
    CHECK(r.skipped_terms.empty());
}

TEST_CASE("candidates sort by fuzzy, then language, then surface") {
    // Star around hub h: {h,x1},{h,x2},{h,y}; expanding {h, x1}.
    Lexicon lex({testutil::synset("s1", {t("h"), t("x1")}),
                 testutil::synset("s2", {t("h"), t("x2")}),
                 testutil::synset("s3", {t("h"), t("y", "aa")})});
    SynonymyGraph g = SynonymyGraph::build(lex);
    Synset q = testutil::synset("q", {t("h"), t("x1")});

    ExpandOptions options;
    options.params.level = 4;
    options.first_hop = FirstHop::any_neighbor;
    ExpansionResult r = expand_synset(g, q, options);
    REQUIRE(r.candidates.size() == 2);
    // x2 and aa:y are symmetric here, so the tie resolves by language.
    CHECK(r.candidates[0].term == t("y", "aa"));
    CHECK(r.candidates[1].term == t("x2"));
    CHECK(r.candidates[0].fuzzy == r.candidates[1].fuzzy);

    for (std::size_t i = 1; i < r.candidates.size(); ++i)
        CHECK(r.candidates[i - 1].fuzzy >= r.candidates[i].fuzzy);
}

TEST_CASE("strict root accounting") {
    SynonymyGraph g = SynonymyGraph::build(testutil::triangle());
    Synset q = testutil::synset("q", {t("a"), t("b"), t("ghost")});

    ExpandOptions options;
    options.params.level = 3;
    options.first_hop = FirstHop::any_neighbor;
    ExpansionResult lax = expand_synset(g, q, options);
    REQUIRE(lax.candidates.size() == 1);
    CHECK(lax.candidates[0].term == t("c"));
    CHECK(lax.candidates[0].total_roots == 2);
    CHECK(lax.skipped_terms == std::vector<Term>{t("ghost")});

    options.strict_roots = true;
    ExpansionResult strict = expand_synset(g, q, options);
    CHECK(strict.candidates[0].total_roots == 3);
    CHECK(strict.candidates[0].root_coverage ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(strict.candidates[0].fuzzy < lax.candidates[0].fuzzy);
}

TEST_CASE("threshold filtering") {
    SynonymyGraph g = SynonymyGraph::build(testutil::triangle());
    Synset q = testutil::synset("q", {t("a")});
    ExpandOptions options;
    options.params.level = 3;
    options.first_hop = FirstHop::any_neighbor;
    ExpansionResult r = expand_synset(g, q, options);
    REQUIRE(r.candidates.size() == 2);

    CHECK(apply_threshold(r, 0.875).candidates.size() == 2); // f >= threshold keeps ties
    CHECK(apply_threshold(r, 0.88).candidates.empty());
    CHECK(apply_threshold(r, 0.0).candidates.size() == 2);
    CHECK_THROWS_AS(apply_threshold(r, 1.5), ArgumentError);
    CHECK_THROWS_AS(apply_threshold(r, -0.1), ArgumentError);
}

TEST_CASE("no cycles means no candidates") {
    // Pair synset: both terms' cycles only touch synset members.
    Lexicon lex({testutil::synset("s1", {t("p"), t("q")})});
    ExpansionResult r = expand_synset(lex, *lex.find("s1"), {});
    CHECK(r.cycle_count == 2);
    CHECK(r.candidates.empty());

    // Fully absent synset.
    Synset ghost = testutil::synset("g", {t("nope1"), t("nope2")});
    ExpansionResult empty = expand_synset(lex, ghost, {});
    CHECK(empty.cycle_count == 0);
    CHECK(empty.candidates.empty());
    CHECK(empty.skipped_terms.size() == 2);
}

TEST_CASE("scores match the oracle over randomized co-membership lexicons") {
    synex::Rng rng(2024);
    for (int round = 0; round < 40; ++round) {
        // 4..9 synsets over a small shared vocabulary.
        std::size_t vocabulary = 5 + rng.below(5);
        std::size_t synsets = 4 + rng.below(6);
        std::vector<Synset> built;
        for (std::size_t i = 0; i < synsets; ++i) {
            Synset s;
            s.id = "s" + std::to_string(i);
            std::size_t size = 2 + rng.below(3);
            while (s.terms.size() < size) {
                Term candidate = t("w" + std::to_string(rng.below(vocabulary)));
                bool seen = false;
                for (const Term& existing : s.terms) seen |= existing == candidate;
                if (!seen) s.terms.push_back(candidate);
            }
            built.push_back(std::move(s));
        }
        Lexicon lex(std::move(built));
        SynonymyGraph g = SynonymyGraph::build(lex);
        const Synset& query = lex.synsets()[rng.below(lex.size())];
        int level = 2 + static_cast<int>(rng.below(3));
        FirstHop hop = rng.below(2) ? FirstHop::synset_terms : FirstHop::any_neighbor;

        SynsetCycles cycles = enumerate_synset_cycles(g, query, level, hop);
        FuzzyParams params{0.3, 0.7, level};
        ExpansionResult r = score_candidates(cycles, query, params);
        auto expected = oracle::score(cycles, query, params.theta1, params.theta2,
                                      cycles.roots_present.size());

        REQUIRE(r.candidates.size() == expected.size());
        for (const auto& c : r.candidates) {
            auto it = expected.find(c.term);
            REQUIRE(it != expected.end());
            CHECK(c.path_coverage == doctest::Approx(it->second.p).epsilon(1e-12));
            CHECK(c.root_coverage == doctest::Approx(it->second.q).epsilon(1e-12));
            CHECK(c.fuzzy == doctest::Approx(it->second.f).epsilon(1e-12));
            // The blend stays between its two components.
            CHECK(c.fuzzy >= std::min(c.path_coverage, c.root_coverage) - 1e-12);
            CHECK(c.fuzzy <= std::max(c.path_coverage, c.root_coverage) + 1e-12);
        }
    }
}
