#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "repwords/bignat.hpp"
#include "repwords/word.hpp"

namespace repwords {

// Antichain of binary words under the factor order: none is a factor of
// another. Sorted by length, then lexicographically.
struct ForbiddenSet {
    std::vector<Word> words;

    std::size_t max_word_length() const {
        std::size_t m = 0;
        for (const Word& w : words) m = std::max(m, w.size());
        return m;
    }

    bool contains(const Word& w) const {
        return std::find(words.begin(), words.end(), w) != words.end();
    }
};

// Minimal forbidden words for an open bound: for each period p <= max_period
// and each root x of length p, the length floor(alpha*p)+1 word with period p
// is the shortest crossing of the bound; words containing a shorter member
// are dropped to keep an antichain.
inline ForbiddenSet minimal_forbidden(const ExponentBound& bound,
                                      std::size_t max_period) {
    if (!bound.open)
        throw std::invalid_argument(
            "minimal forbidden sets are generated for open bounds only");
    if (max_period < 1) throw std::invalid_argument("max period must be >= 1");
    if (max_period > 26)
        throw std::invalid_argument("max period above 26 is over budget");

    std::vector<Word> candidates;
    for (std::size_t p = 1; p <= max_period; ++p) {
        std::size_t len =
            static_cast<std::size_t>((static_cast<__int128>(bound.num) * p) /
                                     bound.den) + 1;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p); ++bits) {
            std::vector<Symbol> syms(len);
            for (std::size_t i = 0; i < len; ++i)
                syms[i] = static_cast<Symbol>((bits >> (i % p)) & 1u);
            candidates.emplace_back(std::move(syms), 2);
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Word& a, const Word& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    ForbiddenSet result;
    for (const Word& w : candidates) {
        bool redundant = false;
        for (const Word& kept : result.words)
            if (w.contains(kept)) {
                redundant = true;
                break;
            }
        if (!redundant) result.words.push_back(w);
    }
    return result;
}

// Deterministic complete automaton over {0,1} whose live states are the
// factor-free suffix classes; any transition that would complete a forbidden
// word goes to the absorbing dead state.
struct AvoidanceAutomaton {
    static constexpr std::uint32_t dead = 0xFFFFFFFFu;

    // transitions[s][c] is the successor live state or dead. State 0 is the
    // start state (empty suffix class).
    std::vector<std::array<std::uint32_t, 2>> transitions;

    std::size_t live_states() const { return transitions.size(); }
};

// Aho-Corasick construction: trie of the forbidden words, breadth-first
// failure links, terminal flags propagated along them, then goto-completion.
inline AvoidanceAutomaton build_automaton(const ForbiddenSet& forbidden) {
    struct Node {
        std::int32_t child[2] = {-1, -1};
        std::int32_t fail = 0;
        bool terminal = false;
    };
    std::vector<Node> trie(1);
    for (const Word& w : forbidden.words) {
        if (w.empty())
            throw std::invalid_argument("forbidden words must be nonempty");
        if (w.alphabet() != 2)
            throw std::invalid_argument("forbidden words must be binary");
        std::int32_t cur = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            Symbol c = w[i];
            if (trie[cur].child[c] < 0) {
                trie[cur].child[c] = static_cast<std::int32_t>(trie.size());
                trie.emplace_back();
            }
            cur = trie[cur].child[c];
        }
        trie[cur].terminal = true;
    }

    std::vector<std::array<std::int32_t, 2>> delta(trie.size());
    std::deque<std::int32_t> queue;
    for (int c = 0; c < 2; ++c) {
        std::int32_t ch = trie[0].child[c];
        delta[0][c] = ch < 0 ? 0 : ch;
        if (ch >= 0) {
            trie[ch].fail = 0;
            queue.push_back(ch);
        }
    }
    while (!queue.empty()) {
        std::int32_t u = queue.front();
        queue.pop_front();
        if (trie[trie[u].fail].terminal) trie[u].terminal = true;
        for (int c = 0; c < 2; ++c) {
            std::int32_t ch = trie[u].child[c];
            if (ch >= 0) {
                trie[ch].fail = delta[trie[u].fail][c];
                delta[u][c] = ch;
                queue.push_back(ch);
            } else {
                delta[u][c] = delta[trie[u].fail][c];
            }
        }
    }

    std::vector<std::int32_t> live_id(trie.size(), -1);
    std::int32_t live = 0;
    for (std::size_t i = 0; i < trie.size(); ++i)
        if (!trie[i].terminal) live_id[i] = live++;
    if (live_id[0] < 0)
        throw std::invalid_argument("start state is dead (empty forbidden word?)");

    AvoidanceAutomaton a;
    a.transitions.resize(static_cast<std::size_t>(live));
    for (std::size_t i = 0; i < trie.size(); ++i) {
        if (trie[i].terminal) continue;
        for (int c = 0; c < 2; ++c) {
            std::int32_t t = delta[i][c];
            a.transitions[live_id[i]][c] =
                trie[t].terminal ? AvoidanceAutomaton::dead
                                 : static_cast<std::uint32_t>(live_id[t]);
        }
    }
    return a;
}

// counts[n] = number of length-n binary words avoiding the forbidden set,
// by iterating the transfer matrix on an exact occupancy vector.
inline std::vector<BigNat> count_avoiding(const AvoidanceAutomaton& a,
                                          std::size_t n_max) {
    std::vector<BigNat> occupancy(a.live_states());
    occupancy[0] = BigNat(1);
    std::vector<BigNat> counts;
    counts.reserve(n_max + 1);
    counts.push_back(BigNat(1));
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<BigNat> next(a.live_states());
        for (std::size_t s = 0; s < a.live_states(); ++s) {
            if (occupancy[s].is_zero()) continue;
            for (int c = 0; c < 2; ++c) {
                std::uint32_t t = a.transitions[s][c];
                if (t != AvoidanceAutomaton::dead) next[t] += occupancy[s];
            }
        }
        occupancy = std::move(next);
        BigNat total;
        for (const BigNat& v : occupancy) total += v;
        counts.push_back(std::move(total));
    }
    return counts;
}

// Spectral radius of the live-state transfer matrix and a prefix of the
// counting sequence it governs.
struct GrowthEstimate {
    double dominant_root = 0.0;
    double tolerance = 0.0;
    std::vector<BigNat> counts;
};

// Power iteration on the shifted matrix M + I; the shift defeats bipartite
// oscillation without moving eigenvectors and adds exactly 1 to every
// eigenvalue, which is subtracted on output. Converged when three successive
// Rayleigh quotients agree within tol.
inline GrowthEstimate dominant_root(const AvoidanceAutomaton& a, double tol,
                                    std::size_t count_prefix = 30) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    const std::size_t m = a.live_states();
    std::vector<double> v(m, 1.0), next(m);
    double last = -1.0;
    int stable = 0;
    const std::size_t cap = 1000000;
    for (std::size_t it = 0; it < cap; ++it) {
        for (std::size_t s = 0; s < m; ++s) next[s] = v[s];  // + I v
        for (std::size_t s = 0; s < m; ++s)
            for (int c = 0; c < 2; ++c) {
                std::uint32_t t = a.transitions[s][c];
                if (t != AvoidanceAutomaton::dead) next[t] += v[s];
            }
        double dot = 0, norm2 = 0;
        for (std::size_t s = 0; s < m; ++s) {
            dot += next[s] * v[s];
            norm2 += v[s] * v[s];
        }
        double rayleigh = dot / norm2;
        double scale = 0;
        for (double x : next) scale += x * x;
        scale = std::sqrt(scale);
        if (scale == 0) {  // nilpotent transfer matrix, growth rate 0
            return GrowthEstimate{0.0, tol, count_avoiding(a, count_prefix)};
        }
        for (std::size_t s = 0; s < m; ++s) v[s] = next[s] / scale;
        if (std::abs(rayleigh - last) < tol) {
            if (++stable >= 3)
                return GrowthEstimate{rayleigh - 1.0, tol,
                                      count_avoiding(a, count_prefix)};
        } else {
            stable = 0;
        }
        last = rayleigh;
    }
    throw std::runtime_error(
        "power iteration did not converge after 1000000 iterations (last "
        "quotient " + std::to_string(last) + ")");
}

}  // namespace repwords
