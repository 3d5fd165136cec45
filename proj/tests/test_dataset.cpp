#include "doctest.h"

#include <sstream>

#include "synex/dataset.hpp"
#include "synex/errors.hpp"
#include "test_util.hpp"

using namespace synex;

TEST_CASE("csv happy path") {
    auto result = load_dataset(testutil::data_path("agreement_small.csv"));
    CHECK(result.stats.had_header);
    REQUIRE(result.dataset.rows.size() == 2);

    const AnnotatedCandidate& first = result.dataset.rows[0];
    CHECK(first.synset_id == "s1");
    CHECK(first.candidate == Term{"alpha", "en"});
    CHECK(first.linguist_scores[0] == doctest::Approx(0.0));
    CHECK(first.linguist_scores[3] == doctest::Approx(0.6));
    CHECK(first.average == doctest::Approx(0.3));

    CHECK(result.dataset.synset_count() == 2);
    CHECK(result.dataset.candidate_count() == 2);
    CHECK(result.dataset.synset_ids() == std::vector<std::string>{"s1", "s2"});
}

TEST_CASE("seven columns compute the average") {
    std::istringstream in("s1,w,en,10,20,30,40\n");
    auto result = parse_dataset(in);
    CHECK_FALSE(result.stats.had_header);
    CHECK(result.dataset.rows[0].average == doctest::Approx(0.25));
}

TEST_CASE("stored average mismatches are recomputed with a warning") {
    std::istringstream in("s1,w,en,10,20,30,40,80\n");
    auto result = parse_dataset(in);
    CHECK(result.stats.average_recomputed == 1);
    CHECK(result.stats.warnings.size() == 1);
    CHECK(result.dataset.rows[0].average == doctest::Approx(0.25));

    // Rounded stored averages within half a point pass silently.
    std::istringstream ok("s1,w,en,10,20,30,41,25.3\n");
    CHECK(parse_dataset(ok).stats.average_recomputed == 0);
}

TEST_CASE("quoted fields") {
    std::istringstream in("s1,\"a, b\",en,10,20,30,40\ns2,\"say \"\"hi\"\"\",en,1,2,3,4\n");
    auto result = parse_dataset(in);
    CHECK(result.dataset.rows[0].candidate.surface == "a, b");
    CHECK(result.dataset.rows[1].candidate.surface == "say \"hi\"");
}

TEST_CASE("csv errors name the line") {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return parse_dataset(in, "scores.csv");
    };
    CHECK_THROWS_AS(parse("s1,w,en,10,20,30\n"), ParseError);          // six fields
    CHECK_THROWS_AS(parse("s1,w,en,10,20,30,40,50,60\n"), ParseError); // nine fields
    CHECK_THROWS_AS(parse("s1,w,en,101,20,30,40\n"), ParseError);      // out of range
    CHECK_THROWS_AS(parse("s1,w,en,-3,20,30,40\n"), ParseError);
    CHECK_THROWS_AS(parse("s1,w,en,abc,20,30,40\n"), ParseError);
    CHECK_THROWS_AS(parse("s1,w,en,10,20,30,40,190\n"), ParseError);
    CHECK_THROWS_AS(parse(",w,en,10,20,30,40\n"), ParseError);
    CHECK_THROWS_AS(parse("s1,,en,10,20,30,40\n"), ParseError);
    CHECK_THROWS_AS(parse("s1,w,,10,20,30,40\n"), ParseError);
    CHECK_THROWS_AS(parse("s1,\"w,en,10,20,30,40\n"), ParseError); // unterminated quote
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("synset_id,candidate,lang,s1,s2,s3,s4\n"), ParseError); // header only

    try {
        parse("s1,w,en,10,20,30,40\ns2,w,en,10,20,30,777\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("load errors on a missing file") {
    CHECK_THROWS_AS(load_dataset("/nonexistent/scores.csv"), Error);
}

TEST_CASE("write round-trips through parse") {
    auto original = load_dataset(testutil::data_path("agreement_small.csv")).dataset;
    std::ostringstream out;
    write_dataset(original, out);
    std::istringstream in(out.str());
    auto reloaded = parse_dataset(in);

    REQUIRE(reloaded.dataset.rows.size() == original.rows.size());
    for (std::size_t i = 0; i < original.rows.size(); ++i) {
        const auto& a = original.rows[i];
        const auto& b = reloaded.dataset.rows[i];
        CHECK(a.synset_id == b.synset_id);
        CHECK(a.candidate == b.candidate);
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(a.linguist_scores[j] == doctest::Approx(b.linguist_scores[j]).epsilon(1e-9));
        CHECK(a.average == doctest::Approx(b.average).epsilon(1e-9));
    }
}
