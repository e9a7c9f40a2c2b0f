#include <catch2/catch_amalgamated.hpp>

#include "oracle_helpers.hpp"
#include "reference_tables.hpp"
#include "repwords/enumerate.hpp"

using namespace repwords;

TEST_CASE("count_free reference values", "[enumerate]") {
    CHECK(count_free(parse_exponent_bound("2+"), 10).counts[10] == 44);
    CHECK(count_free(parse_exponent_bound("7/3"), 9).counts[9] == 40);

    auto a = count_free(parse_exponent_bound("2+"), 16);
    auto b = count_free(parse_exponent_bound("7/3"), 16);
    auto c = count_free(parse_exponent_bound("7/3+"), 16);
    auto d = count_free(parse_exponent_bound("3"), 16);
    for (std::size_t n = 0; n <= 16; ++n) {
        CHECK(a.counts[n] == reference::kOverlapFree[n]);
        CHECK(b.counts[n] == reference::kSevenThirds[n]);
        CHECK(c.counts[n] == reference::kSevenThirdsPlus[n]);
        CHECK(d.counts[n] == reference::kCubefree[n]);
    }
}

TEST_CASE("count series basics", "[enumerate]") {
    auto s = count_free(parse_exponent_bound("7/3"), 12);
    CHECK(s.counts[0] == 1);
    CHECK(s.counts[1] == 2);
    for (std::size_t n = 1; n <= 12; ++n) CHECK(s.counts[n] <= 2 * s.counts[n - 1]);
}

TEST_CASE("pruned search equals the brute filter", "[enumerate]") {
    const std::vector<ExponentBound> bounds = {
        parse_exponent_bound("2+"), parse_exponent_bound("7/3"),
        parse_exponent_bound("7/3+"), parse_exponent_bound("3")};
    for (const auto& bound : bounds) {
        auto series = count_free(bound, 16);
        for (std::size_t n = 0; n <= 16; ++n)
            REQUIRE(series.counts[n] == oracle::count_free_brute(bound, n));
    }
}

TEST_CASE("list_free spot cases", "[enumerate]") {
    auto words = list_free(parse_exponent_bound("3"), 2);
    REQUIRE(words.size() == 4);
    CHECK(words[0] == Word::parse("00"));
    CHECK(words[1] == Word::parse("01"));
    CHECK(words[2] == Word::parse("10"));
    CHECK(words[3] == Word::parse("11"));

    CHECK(list_free(parse_exponent_bound("2"), 4).empty());

    auto empty_only = list_free(parse_exponent_bound("7/3"), 0);
    REQUIRE(empty_only.size() == 1);
    CHECK(empty_only[0].empty());
}

TEST_CASE("list_free yields each free word once in lexicographic order",
          "[enumerate]") {
    for (std::size_t n : {5, 9, 13}) {
        auto words = list_free(parse_exponent_bound("7/3+"), n);
        CHECK(words.size() ==
              count_free(parse_exponent_bound("7/3+"), n).counts[n]);
        CHECK(std::is_sorted(words.begin(), words.end()));
        CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
        for (const Word& w : words) {
            REQUIRE(w.size() == n);
            REQUIRE(is_free(w, parse_exponent_bound("7/3+")));
        }
    }
}

TEST_CASE("free-word sets nest by bound strength", "[enumerate]") {
    auto a = count_free(parse_exponent_bound("2+"), 18);
    auto b = count_free(parse_exponent_bound("7/3"), 18);
    auto c = count_free(parse_exponent_bound("7/3+"), 18);
    auto d = count_free(parse_exponent_bound("3"), 18);
    for (std::size_t n = 0; n <= 18; ++n) {
        CHECK(a.counts[n] <= b.counts[n]);
        CHECK(b.counts[n] <= c.counts[n]);
        CHECK(c.counts[n] <= d.counts[n]);
    }
}

TEST_CASE("cubefree count at length 5 matches avoidance of 000 and 111",
          "[enumerate]") {
    std::uint64_t avoiding = oracle::count_avoiding_brute(
        {Word::parse("000"), Word::parse("111")}, 5);
    CHECK(avoiding == 16);
    CHECK(count_free(parse_exponent_bound("3"), 5).counts[5] == 16);
}

TEST_CASE("deep exponential enumerations need force", "[enumerate]") {
    CHECK_THROWS_AS(count_free(parse_exponent_bound("3"), 41), BudgetError);
    CHECK_THROWS_AS(count_free(parse_exponent_bound("7/3+"), 41), BudgetError);
    CHECK_THROWS_AS(list_free(parse_exponent_bound("3"), 41), BudgetError);
    // polynomial bounds pass the guard
    CHECK_NOTHROW(count_free(parse_exponent_bound("7/3"), 41));
    // force works on a small case without changing results
    CHECK(count_free(parse_exponent_bound("3"), 10, true).counts ==
          count_free(parse_exponent_bound("3"), 10).counts);
}

TEST_CASE("time budget interrupts the search", "[enumerate]") {
    CHECK_THROWS_AS(
        count_free(parse_exponent_bound("3"), 26, false, Budget::with_seconds(0.0)),
        BudgetError);
    CHECK_NOTHROW(
        count_free(parse_exponent_bound("3"), 10, false, Budget::with_seconds(60.0)));
}

TEST_CASE("sharded counting is shard-invariant", "[enumerate]") {
    auto single = count_free(parse_exponent_bound("3"), 18);
    for (unsigned shards : {2u, 4u, 7u}) {
        auto sharded = count_free_sharded(parse_exponent_bound("3"), 18, shards);
        REQUIRE(sharded.counts == single.counts);
    }
    auto shallow = count_free_sharded(parse_exponent_bound("7/3"), 8, 4);
    CHECK(shallow.counts ==
          count_free(parse_exponent_bound("7/3"), 8).counts);
    CHECK_THROWS_AS(count_free_sharded(parse_exponent_bound("3"), 10, 0),
                    std::invalid_argument);
}
