#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "repwords/morphism.hpp"
#include "repwords/word.hpp"

namespace repwords {

// One step of the structure factorization: x = u mu(y) v with u, v drawn
// from {eps, 0, 1, 00, 11} and y free for the same bound.
struct Factorization {
    Word u;
    Word y;
    Word v;

    Word reconstruct() const { return u + apply(thue_morse(), y) + v; }
};

// Iterated structure factorization x = u1 mu(u2) ... mu^{t-1}(ut) mu^t(core)
// mu^{t-1}(vt) ... v1. prefixes holds u1..ut; suffixes holds vt..v1.
struct DecompositionChain {
    std::vector<Word> prefixes;
    Word core;
    std::vector<Word> suffixes;

    std::size_t depth() const { return prefixes.size(); }

    Word reconstruct() const {
        Word x = core;
        for (std::size_t i = 0; i < depth(); ++i)
            x = prefixes[depth() - 1 - i] + apply(thue_morse(), x) + suffixes[i];
        return x;
    }
};

// The factorization theorem holds for closed bounds in (2, 7/3] and open
// bounds in (2, 7/3). The open bound 7/3+ admits 7/3-powers such as 0110110,
// which cannot be factorized, so it is out of scope.
inline bool structure_bound_applicable(const ExponentBound& b) {
    __int128 a_num = b.num, a_den = b.den;
    bool above_two = a_num > 2 * a_den;
    if (!above_two) return false;
    __int128 lhs = 3 * a_num, rhs = 7 * a_den;  // alpha vs 7/3
    return b.open ? lhs < rhs : lhs <= rhs;
}

namespace detail {
inline const std::vector<Word>& short_affixes() {
    static const std::vector<Word> affixes = {Word({}, 2), Word::parse("0"),
                                              Word::parse("1"), Word::parse("00"),
                                              Word::parse("11")};
    return affixes;
}
}  // namespace detail

// Tries all 25 (u, v) affix pairs in lexicographic order (eps < 0 < 1 < 00 <
// 11 componentwise), deinterleaves the middle, and keeps pairs whose y is
// free. No precondition checks; see factor_once for the checked entry point.
inline std::vector<Factorization> factor_candidates(const Word& x,
                                                    const ExponentBound& bound) {
    std::vector<Factorization> out;
    const auto& affixes = detail::short_affixes();
    for (const Word& u : affixes) {
        if (!x.starts_with(u)) continue;
        for (const Word& v : affixes) {
            if (u.size() + v.size() > x.size()) continue;
            if (!x.ends_with(v)) continue;
            Word middle = x.slice(u.size(), x.size() - u.size() - v.size());
            auto y = mu_inverse(middle);
            if (!y) continue;
            if (is_free(*y, bound)) out.push_back(Factorization{u, *y, v});
        }
    }
    return out;
}

inline std::vector<Factorization> factor_once(const Word& x,
                                              const ExponentBound& bound) {
    if (!structure_bound_applicable(bound))
        throw std::invalid_argument("structure theorem inapplicable for bound " +
                                    bound.str());
    if (!is_free(x, bound))
        throw std::invalid_argument("word is not free for bound " + bound.str());
    return factor_candidates(x, bound);
}

// Factors repeatedly, always taking the lexicographically least (u, v)
// candidate, until the chosen factorization no longer shrinks the core
// (its y is empty). The final core then has length 1..4, or 0 for an
// empty input, and the depth t obeys log2|x| - 3 < t <= log2|x|.
inline DecompositionChain chain(const Word& x, const ExponentBound& bound) {
    if (!structure_bound_applicable(bound))
        throw std::invalid_argument("structure theorem inapplicable for bound " +
                                    bound.str());
    if (!is_free(x, bound))
        throw std::invalid_argument("word is not free for bound " + bound.str());
    DecompositionChain result;
    std::vector<Word> step_suffixes;
    Word core = x;
    while (!core.empty()) {
        auto fs = factor_candidates(core, bound);
        if (fs.empty())
            throw std::logic_error("no factorization for free word " + core.str());
        const Factorization& f = fs.front();
        if (f.y.empty()) break;
        result.prefixes.push_back(f.u);
        step_suffixes.push_back(f.v);
        core = f.y;
    }
    result.core = core;
    result.suffixes.assign(step_suffixes.rbegin(), step_suffixes.rend());
    return result;
}

// Explicit counting ceiling 66 * n^(log2 25) implied by the factorization
// chain: 5 choices for each affix, 22 possible cores, 3 possible depths.
inline std::uint64_t count_bound_witness(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("length must be >= 1");
    double v = 66.0 * std::pow(static_cast<double>(n), std::log2(25.0));
    return static_cast<std::uint64_t>(std::ceil(v));
}

}  // namespace repwords
