#include <catch2/catch_amalgamated.hpp>

#include "oracle_helpers.hpp"
#include "repwords/word.hpp"

using namespace repwords;

namespace {

// English-word fixtures mapped onto small alphabets, first letter = 0.
Word from_letters(std::string_view letters) {
    std::vector<Symbol> syms;
    std::vector<char> seen;
    for (char c : letters) {
        auto it = std::find(seen.begin(), seen.end(), c);
        if (it == seen.end()) {
            seen.push_back(c);
            it = seen.end() - 1;
        }
        syms.push_back(static_cast<Symbol>(it - seen.begin()));
    }
    return Word(std::move(syms), static_cast<int>(seen.size()));
}

const std::vector<ExponentBound> kBounds = {
    parse_exponent_bound("2"),    parse_exponent_bound("2+"),
    parse_exponent_bound("9/4"),  parse_exponent_bound("7/3"),
    parse_exponent_bound("7/3+"), parse_exponent_bound("5/2"),
    parse_exponent_bound("3"),    parse_exponent_bound("3+")};

}  // namespace

TEST_CASE("minimal period of known words", "[words]") {
    CHECK(minimal_period(from_letters("alfalfa")) == 3);
    CHECK(minimal_period(from_letters("ionization")) == 7);
    CHECK(minimal_period(Word::parse("000")) == 1);
    CHECK(minimal_period(Word::parse("0")) == 1);
    CHECK(minimal_period(Word::parse("01101")) == 3);
    CHECK_THROWS_AS(minimal_period(Word({}, 2)), std::invalid_argument);
}

TEST_CASE("word exponent is an exact reduced fraction", "[words]") {
    CHECK(word_exponent(from_letters("murmur")) == Fraction{2, 1});
    CHECK(word_exponent(Word::parse("0")) == Fraction{1, 1});
    CHECK(word_exponent(from_letters("alfalfa")) == Fraction{7, 3});
    CHECK(word_exponent(Word::parse("010101")) == Fraction{3, 1});
    CHECK_THROWS_AS(word_exponent(Word({}, 2)), std::invalid_argument);

    oracle::for_all_binary_words(10, [](const Word& w) {
        Fraction e = word_exponent(w);
        REQUIRE(std::gcd(e.num, e.den) == 1);
    });
}

TEST_CASE("find_violation reports the leftmost-ending smallest-period witness",
          "[words]") {
    auto v = find_violation(Word::parse("0110"), parse_exponent_bound("2"));
    REQUIRE(v.has_value());
    CHECK(v->start == 1);
    CHECK(v->length == 2);
    CHECK(v->period == 1);
    CHECK(v->exponent == Fraction{2, 1});

    Word squarefree = from_letters("squarefree");
    auto sq = find_violation(squarefree, parse_exponent_bound("2"));
    REQUIRE(sq.has_value());
    CHECK(sq->start == 8);  // the doubled letter "ee" at the end
    CHECK(sq->length == 2);
    CHECK(sq->period == 1);
    CHECK(squarefree[sq->start] == squarefree[sq->start + 1]);

    // fourth iterate of the 0 -> 01, 1 -> 10 morphism is overlap-free
    CHECK_FALSE(
        find_violation(Word::parse("0110100110010110"), parse_exponent_bound("2+")));

    CHECK_FALSE(find_violation(Word({}, 2), parse_exponent_bound("2")));
}

TEST_CASE("violation factor has the reported period", "[words]") {
    oracle::for_all_binary_words(10, [](const Word& w) {
        for (const auto& b : kBounds) {
            auto v = find_violation(w, b);
            if (!v) continue;
            REQUIRE(v->start + v->length <= w.size());
            for (std::size_t i = v->start; i + v->period < v->start + v->length; ++i)
                REQUIRE(w[i] == w[i + v->period]);
            REQUIRE(b.violated_by(v->length, v->period));
            REQUIRE(minimal_period(w.slice(v->start, v->length)) == v->period);
        }
    });
}

TEST_CASE("find_violation agrees with brute force up to length 12", "[words]") {
    for (std::size_t n = 0; n <= 12; ++n)
        oracle::for_all_binary_words(n, [](const Word& w) {
            for (const auto& b : kBounds)
                REQUIRE(find_violation(w, b).has_value() ==
                        oracle::has_violation_brute(w, b));
        });
}

TEST_CASE("extension_safe agrees with the full checker up to length 14",
          "[words]") {
    const std::vector<ExponentBound> bounds = {
        parse_exponent_bound("2"), parse_exponent_bound("2+"),
        parse_exponent_bound("7/3"), parse_exponent_bound("7/3+"),
        parse_exponent_bound("3")};
    for (std::size_t n = 1; n <= 14; ++n)
        oracle::for_all_binary_words(n, [&](const Word& w) {
            Word prefix = w.slice(0, w.size() - 1);
            for (const auto& b : bounds) {
                if (find_violation(prefix, b)) continue;  // precondition
                REQUIRE(extension_safe(w, b) == !find_violation(w, b).has_value());
            }
        });
}

TEST_CASE("extension_safe spot cases", "[words]") {
    CHECK(extension_safe(Word::parse("0110100"), parse_exponent_bound("2+")));
    CHECK(extension_safe(Word::parse("011011"), parse_exponent_bound("7/3")));
    CHECK_FALSE(extension_safe(Word::parse("011011"), parse_exponent_bound("2")));
    CHECK_FALSE(extension_safe(Word::parse("01101101"), parse_exponent_bound("7/3")));
}

TEST_CASE("freeness is monotone in the bound", "[words]") {
    // sorted weakest-to-strongest: free at alpha closed implies free at every
    // larger closed bound and at alpha open
    const std::vector<ExponentBound> closed = {
        parse_exponent_bound("2"), parse_exponent_bound("9/4"),
        parse_exponent_bound("7/3"), parse_exponent_bound("5/2"),
        parse_exponent_bound("3")};
    oracle::for_all_binary_words(10, [&](const Word& w) {
        for (std::size_t i = 0; i < closed.size(); ++i) {
            if (!is_free(w, closed[i])) continue;
            for (std::size_t j = i; j < closed.size(); ++j)
                REQUIRE(is_free(w, closed[j]));
            REQUIRE(is_free(w, ExponentBound::make(closed[i].num, closed[i].den, true)));
        }
    });
}

TEST_CASE("bound 3 closed means cubefree", "[words]") {
    const ExponentBound three = parse_exponent_bound("3");
    for (std::size_t n = 0; n <= 12; ++n)
        oracle::for_all_binary_words(n, [&](const Word& w) {
            REQUIRE(is_free(w, three) == !oracle::contains_cube_brute(w));
        });
}

TEST_CASE("exponent bound parsing", "[words]") {
    ExponentBound b = parse_exponent_bound("7/3+");
    CHECK(b.num == 7);
    CHECK(b.den == 3);
    CHECK(b.open);
    CHECK(b.str() == "7/3+");

    b = parse_exponent_bound("2+");
    CHECK(b.num == 2);
    CHECK(b.den == 1);
    CHECK(b.open);

    b = parse_exponent_bound("3");
    CHECK(b.num == 3);
    CHECK(b.den == 1);
    CHECK_FALSE(b.open);

    b = parse_exponent_bound("14/6");
    CHECK(b.num == 7);
    CHECK(b.den == 3);

    CHECK_THROWS_AS(parse_exponent_bound(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_exponent_bound("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_exponent_bound("7/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_exponent_bound("7/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_exponent_bound("1/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_exponent_bound("3++"), std::invalid_argument);
    CHECK_THROWS_AS(parse_exponent_bound("-2"), std::invalid_argument);
}

TEST_CASE("bound comparisons use exact integer arithmetic", "[words]") {
    const ExponentBound b = parse_exponent_bound("7/3");
    CHECK(b.violated_by(7, 3));        // exponent exactly 7/3, closed
    CHECK_FALSE(b.violated_by(7, 4));  // 7/4 < 7/3
    CHECK(b.violated_by(8, 3));
    const ExponentBound bp = parse_exponent_bound("7/3+");
    CHECK_FALSE(bp.violated_by(7, 3));  // exactly 7/3 is allowed on the open side
    CHECK(bp.violated_by(8, 3));
}

TEST_CASE("word parsing and serialization", "[words]") {
    Word w = Word::parse("0110");
    CHECK(w.size() == 4);
    CHECK(w.alphabet() == 2);
    CHECK(w.str() == "0110");
    CHECK(Word::parse("012").alphabet() == 3);
    CHECK(Word::parse("01", 4).alphabet() == 4);
    CHECK_THROWS_AS(Word::parse("01x"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("012", 2), std::invalid_argument);
    CHECK_THROWS_AS(Word({0, 5}, 3), std::invalid_argument);
}

TEST_CASE("max_square_root finds the largest repeated block", "[words]") {
    CHECK(max_square_root(Word::parse("0110")) == 1);
    CHECK(max_square_root(Word::parse("010010")) == 3);
    CHECK(max_square_root(Word::parse("01020")) == 0);
    CHECK(max_square_root(Word({}, 2)) == 0);

    oracle::for_all_binary_words(12, [](const Word& w) {
        std::size_t brute = 0;
        for (std::size_t start = 0; start < w.size(); ++start)
            for (std::size_t half = 1; start + 2 * half <= w.size(); ++half) {
                bool square = true;
                for (std::size_t i = 0; i < half; ++i)
                    if (w[start + i] != w[start + half + i]) {
                        square = false;
                        break;
                    }
                if (square) brute = std::max(brute, half);
            }
        REQUIRE(max_square_root(w) == brute);
    });
}

TEST_CASE("squarefree enumeration matches the brute filter", "[words]") {
    for (int k = 2; k <= 4; ++k)
        for (std::size_t n = 0; n <= 5; ++n) {
            std::vector<Word> listed;
            for_each_squarefree(k, n, [&](const Word& w) {
                REQUIRE(oracle::is_squarefree_brute(w));
                listed.push_back(w);
            });
            std::uint64_t expected = 0;
            std::vector<Symbol> syms(n, 0);
            // odometer over all k^n words
            while (true) {
                Word w(syms, k);
                if (oracle::is_squarefree_brute(w)) ++expected;
                std::size_t pos = n;
                bool done = (n == 0);
                while (pos > 0) {
                    --pos;
                    if (++syms[pos] < k) break;
                    syms[pos] = 0;
                    if (pos == 0) done = true;
                }
                if (done) break;
            }
            REQUIRE(listed.size() == expected);
            REQUIRE(std::is_sorted(listed.begin(), listed.end()));
        }
}
