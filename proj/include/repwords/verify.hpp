#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repwords/enumerate.hpp"
#include "repwords/morphism.hpp"
#include "repwords/word.hpp"

namespace repwords {

// Result of one exhaustive certificate check. universe_size counts the cases
// examined; failures lists counterexamples and is expected to stay empty.
struct CheckReport {
    std::string name;
    std::uint64_t universe_size = 0;
    std::vector<std::string> failures;
    double elapsed_seconds = 0.0;
    std::map<std::string, std::int64_t> stats;

    bool ok() const { return failures.empty(); }
};

namespace detail {
class CheckTimer {
public:
    explicit CheckTimer(CheckReport& report) : report_(report) {
        start_ = std::chrono::steady_clock::now();
    }
    ~CheckTimer() {
        report_.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count();
    }

private:
    CheckReport& report_;
    std::chrono::steady_clock::time_point start_;
};
}  // namespace detail

// Images of squarefree words of length 5 over four letters contain no square
// yy with |y| > 13. The universe must come to exactly 264 words.
inline CheckReport check_h_squares() {
    CheckReport report;
    report.name = "h_squares";
    detail::CheckTimer timer(report);
    const UniformMorphism& h = h21();
    std::int64_t worst = 0;
    for_each_squarefree(4, 5, [&](const Word& w) {
        report.universe_size += 1;
        Word image = apply(h, w);
        std::size_t root = max_square_root(image);
        worst = std::max<std::int64_t>(worst, static_cast<std::int64_t>(root));
        if (root > 13)
            report.failures.push_back(w.str() + " -> square root " +
                                      std::to_string(root));
    });
    report.stats["max_square_root"] = worst;
    return report;
}

// Images of the 36 squarefree length-3 words over four letters contain no
// power above 7/3. Checking the whole 63-letter image subsumes the bounded
// window the argument needs.
inline CheckReport check_h_powers() {
    CheckReport report;
    report.name = "h_powers";
    detail::CheckTimer timer(report);
    const UniformMorphism& h = h21();
    const ExponentBound bound = ExponentBound::make(7, 3, true);
    for_each_squarefree(4, 3, [&](const Word& w) {
        report.universe_size += 1;
        Word image = apply(h, w);
        if (auto bad = find_violation(image, bound))
            report.failures.push_back(w.str() + " -> violation at " +
                                      std::to_string(bad->start) + " exponent " +
                                      bad->exponent.str());
    });
    return report;
}

// Whenever h(c) occurs inside h(ab) at a nontrivial offset, the tail after
// it is not a prefix of any image.
inline CheckReport check_fact_i() {
    CheckReport report;
    report.name = "fact_i";
    detail::CheckTimer timer(report);
    const UniformMorphism& h = h21();
    const std::size_t width = h.image_width();
    for (Symbol a = 0; a < 4; ++a)
        for (Symbol b = 0; b < 4; ++b) {
            Word hab = h.image(a) + h.image(b);
            for (Symbol c = 0; c < 4; ++c)
                for (std::size_t off = 0; off + width <= hab.size(); ++off) {
                    report.universe_size += 1;
                    if (hab.slice(off, width) != h.image(c)) continue;
                    if (off == 0 || off == width) continue;  // trivial inclusion
                    Word tail = hab.slice(off + width, hab.size() - off - width);
                    for (Symbol d = 0; d < 4; ++d)
                        if (h.image(d).starts_with(tail))
                            report.failures.push_back(
                                std::string("a=") + std::to_string(a) + " b=" +
                                std::to_string(b) + " c=" + std::to_string(c) +
                                " offset=" + std::to_string(off) +
                                " tail prefixes image of " + std::to_string(d));
                }
        }
    return report;
}

// If an image h(c) is a prefix of one image glued to a suffix of another,
// the letters cannot all be distinct. Also checks the two stronger claims:
// distinct images never share a prefix of length 11 nor a suffix of
// length 11.
inline CheckReport check_fact_ii() {
    CheckReport report;
    report.name = "fact_ii";
    detail::CheckTimer timer(report);
    const UniformMorphism& h = h21();
    const std::size_t width = h.image_width();
    for (Symbol a = 0; a < 4; ++a)
        for (Symbol b = 0; b < 4; ++b)
            for (Symbol c = 0; c < 4; ++c)
                for (std::size_t cut = 0; cut <= width; ++cut) {
                    report.universe_size += 1;
                    Word glued = h.image(a).slice(0, cut) +
                                 h.image(b).slice(cut, width - cut);
                    if (glued == h.image(c) && a != c && b != c)
                        report.failures.push_back(
                            "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                            " c=" + std::to_string(c) + " cut=" + std::to_string(cut));
                }
    std::int64_t prefix_pairs = 0, suffix_pairs = 0;
    for (Symbol a = 0; a < 4; ++a)
        for (Symbol b = a + 1; b < 4; ++b) {
            prefix_pairs += 1;
            suffix_pairs += 1;
            report.universe_size += 2;
            if (h.image(a).slice(0, 11) == h.image(b).slice(0, 11))
                report.failures.push_back("images of " + std::to_string(a) + " and " +
                                          std::to_string(b) +
                                          " share a length-11 prefix");
            if (h.image(a).slice(width - 11, 11) == h.image(b).slice(width - 11, 11))
                report.failures.push_back("images of " + std::to_string(a) + " and " +
                                          std::to_string(b) +
                                          " share a length-11 suffix");
        }
    report.stats["prefix_pairs"] = prefix_pairs;
    report.stats["suffix_pairs"] = suffix_pairs;
    return report;
}

// Every free binary word (bound 7/3 closed) of length 2^(level+5) contains
// the factor mu^(level+2)(0), hence a square with root mu^level(1). Only
// levels 0 and 1 are within desk budget.
inline CheckReport check_large_squares(int level, const Budget& budget = {}) {
    if (level < 0 || level > 1)
        throw std::invalid_argument("level above 1 is over budget");
    CheckReport report;
    report.name = "large_squares_" + std::to_string(level);
    detail::CheckTimer timer(report);
    const ExponentBound bound = ExponentBound::make(7, 3, false);
    const std::size_t length = std::size_t{1} << (level + 5);
    const Word target =
        iterate(thue_morse(), 0, std::size_t{1} << (level + 2));
    for_each_free(bound, length, [&](const Word& w) {
        report.universe_size += 1;
        if (!w.contains(target))
            report.failures.push_back(w.str() + " misses factor " + target.str());
    }, budget);
    report.stats["word_length"] = static_cast<std::int64_t>(length);
    report.stats["factor_length"] = static_cast<std::int64_t>(target.size());
    return report;
}

// Longest binary word avoiding cubes and squares xx with |x| >= 3. The
// search tree itself is the oracle: maximum depth reached is 29 and nothing
// survives to length 30. This avoided set is a bespoke predicate, not an
// exponent bound.
inline CheckReport check_dekking_bound(const Budget& budget = {}) {
    CheckReport report;
    report.name = "dekking_bound";
    detail::CheckTimer timer(report);
    std::int64_t max_length = 0;
    Word w({}, 2);
    auto ext_ok = [&]() {
        std::size_t n = w.size();
        for (std::size_t p = 1; p < n; ++p) {
            std::size_t m = 0;
            while (m < n - p && w[n - 1 - m] == w[n - 1 - p - m]) ++m;
            std::size_t len = m + p;
            if (len >= 3 * p) return false;            // cube
            if (p >= 3 && len >= 2 * p) return false;  // long square
        }
        return true;
    };
    auto dfs = [&](auto&& self) -> void {
        budget.check();
        report.universe_size += 1;
        max_length = std::max<std::int64_t>(max_length,
                                            static_cast<std::int64_t>(w.size()));
        if (w.size() == 30) {
            report.failures.push_back(w.str());
            return;
        }
        for (Symbol c = 0; c < 2; ++c) {
            w.push_back(c);
            if (ext_ok()) self(self);
            w.pop_back();
        }
    };
    dfs(dfs);
    report.stats["max_length"] = max_length;
    return report;
}

// Registry used by the command-line driver. expected_universe pins the
// cardinalities the certificate arguments rely on; a mismatch is reported
// separately from check failures.
struct NamedCheck {
    std::string name;
    std::function<CheckReport(const Budget&)> run;
    std::optional<std::uint64_t> expected_universe;
};

inline const std::vector<NamedCheck>& all_checks() {
    static const std::vector<NamedCheck> checks = {
        {"h_squares", [](const Budget&) { return check_h_squares(); }, 264},
        {"h_powers", [](const Budget&) { return check_h_powers(); }, 36},
        {"fact_i", [](const Budget&) { return check_fact_i(); }, 1408},
        {"fact_ii", [](const Budget&) { return check_fact_ii(); }, 1420},
        {"large_squares_0",
         [](const Budget& b) { return check_large_squares(0, b); }, std::nullopt},
        {"large_squares_1",
         [](const Budget& b) { return check_large_squares(1, b); }, std::nullopt},
        {"dekking_bound",
         [](const Budget& b) { return check_dekking_bound(b); }, std::nullopt},
    };
    return checks;
}

}  // namespace repwords
