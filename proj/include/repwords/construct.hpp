#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "repwords/morphism.hpp"
#include "repwords/word.hpp"

namespace repwords {

// An exponentially large family of power-free binary words: a squarefree
// ternary source word, shifted so zeros are frequent, expanded through the
// substitution g and mapped through the 21-uniform morphism.
struct FamilyReport {
    Word source;                      // shifted ternary source
    std::size_t zeros = 0;            // r = |source|_0; |members| = 2^r
    std::vector<Word> members;        // sorted, pairwise distinct
    std::size_t member_length = 0;    // 21 * |source|
    std::size_t max_square_root = 0;  // largest |x| over square factors xx
};

// Lexicographically least squarefree word of the given length over three
// letters, by backtracking. Exists for every length.
inline Word squarefree_ternary(std::size_t m) {
    const ExponentBound square = ExponentBound::make(2, 1, false);
    Word w({}, 3);
    auto dfs = [&](auto&& self) -> bool {
        if (w.size() == m) return true;
        for (Symbol c = 0; c < 3; ++c) {
            w.push_back(c);
            if (extension_safe(w, square) && self(self)) return true;
            w.pop_back();
        }
        return false;
    };
    if (!dfs(dfs)) throw std::logic_error("no squarefree ternary word found");
    return w;
}

// Maps each symbol b to b - a (mod 3) where a is the most frequent symbol
// (ties broken toward the smallest), so the result has at least ceil(m/3)
// zeros. Shifting permutes letters, hence preserves squarefreeness.
inline Word shift_maximize_zeros(const Word& w) {
    if (w.alphabet() != 3) throw std::invalid_argument("expected a ternary word");
    if (!is_squarefree(w)) throw std::invalid_argument("input word is not squarefree");
    std::size_t freq[3] = {0, 0, 0};
    for (std::size_t i = 0; i < w.size(); ++i) freq[w[i]] += 1;
    int a = 0;
    for (int c = 1; c < 3; ++c)
        if (freq[c] > freq[a]) a = c;
    std::vector<Symbol> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out.push_back(static_cast<Symbol>((w[i] + 3 - a) % 3));
    return Word(std::move(out), 3);
}

inline FamilyReport build_family(std::size_t m) {
    if (m < 1) throw std::invalid_argument("family size parameter must be >= 1");
    FamilyReport report;
    report.source = shift_maximize_zeros(squarefree_ternary(m));
    report.zeros = report.source.count(0);
    report.member_length = 21 * m;

    const ExponentBound bound = ExponentBound::make(7, 3, true);
    const UniformMorphism& h = h21();
    for_each_expansion(substitution_g(), report.source, [&](const Word& expanded) {
        Word member = apply(h, expanded);
        if (member.size() != report.member_length)
            throw std::logic_error("family member has wrong length");
        if (!is_free(member, bound))
            throw std::logic_error("family member violates the bound: " + member.str());
        report.max_square_root =
            std::max(report.max_square_root, max_square_root(member));
        report.members.push_back(std::move(member));
    });
    std::sort(report.members.begin(), report.members.end());
    auto dup = std::adjacent_find(report.members.begin(), report.members.end());
    if (dup != report.members.end())
        throw std::logic_error("family members are not pairwise distinct");
    if (report.members.size() != (std::size_t{1} << report.zeros))
        throw std::logic_error("family size is not 2^zeros");
    return report;
}

}  // namespace repwords
