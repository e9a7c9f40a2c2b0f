#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "repwords/word.hpp"

namespace repwords {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Optional wall-clock cap for long searches. check() samples the clock every
// 1024 calls and throws BudgetError past the deadline.
class Budget {
public:
    Budget() = default;

    static Budget with_seconds(double seconds) {
        Budget b;
        b.deadline_ = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(seconds));
        return b;
    }

    void check() const {
        if (!deadline_) return;
        if ((++tick_ & 1023u) != 0) return;
        if (std::chrono::steady_clock::now() > *deadline_)
            throw BudgetError("search time budget exceeded");
    }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    mutable unsigned tick_ = 0;
};

// Exact counts of free binary words per length.
struct CountSeries {
    ExponentBound bound;
    std::vector<std::uint64_t> counts;  // counts[n] for n = 0 .. n_max
};

// Bounds weaker than 7/3 (strictly above it, or 7/3 itself on the open side)
// admit exponentially many free words; deep counts there need to be forced.
inline bool exponential_regime(const ExponentBound& b) {
    __int128 lhs = 3 * static_cast<__int128>(b.num);
    __int128 rhs = 7 * static_cast<__int128>(b.den);
    return b.open ? lhs >= rhs : lhs > rhs;
}

namespace detail {
constexpr std::size_t kBudgetGuardLength = 40;

inline void guard_enumeration(const ExponentBound& bound, std::size_t n_max,
                              bool force) {
    if (!force && n_max > kBudgetGuardLength && exponential_regime(bound))
        throw BudgetError("enumeration to length " + std::to_string(n_max) +
                          " for bound " + bound.str() +
                          " grows exponentially; pass force to run anyway");
}

// DFS over the prefix-closed tree of free words: every free word's prefixes
// are free, so extending only safe prefixes visits exactly the free words.
template <typename Visit>
void dfs_free(Word& w, std::size_t n_max, const ExponentBound& bound,
              const Budget& budget, Visit&& visit) {
    budget.check();
    visit(static_cast<const Word&>(w));
    if (w.size() == n_max) return;
    for (Symbol c = 0; c < 2; ++c) {
        w.push_back(c);
        if (extension_safe(w, bound)) dfs_free(w, n_max, bound, budget, visit);
        w.pop_back();
    }
}
}  // namespace detail

// Visits every free word of length exactly n, in lexicographic order.
template <typename F>
void for_each_free(const ExponentBound& bound, std::size_t n, F&& fn,
                   const Budget& budget = {}, bool force = false) {
    detail::guard_enumeration(bound, n, force);
    Word w({}, 2);
    detail::dfs_free(w, n, bound, budget, [&](const Word& x) {
        if (x.size() == n) fn(x);
    });
}

inline std::vector<Word> list_free(const ExponentBound& bound, std::size_t n,
                                   const Budget& budget = {}, bool force = false) {
    std::vector<Word> out;
    for_each_free(bound, n, [&](const Word& w) { out.push_back(w); }, budget, force);
    return out;
}

inline CountSeries count_free(const ExponentBound& bound, std::size_t n_max,
                              bool force = false, const Budget& budget = {}) {
    detail::guard_enumeration(bound, n_max, force);
    CountSeries series{bound, std::vector<std::uint64_t>(n_max + 1, 0)};
    Word w({}, 2);
    detail::dfs_free(w, n_max, bound, budget,
                     [&](const Word& x) { series.counts[x.size()] += 1; });
    return series;
}

// Shards the search tree by fixed-length free prefixes and sums per-shard
// counts. Totals are shard-invariant; only listing order would not be.
inline CountSeries count_free_sharded(const ExponentBound& bound, std::size_t n_max,
                                      unsigned shards, bool force = false,
                                      const Budget& budget = {}) {
    if (shards < 1) throw std::invalid_argument("shard count must be >= 1");
    detail::guard_enumeration(bound, n_max, force);
    if (shards == 1) return count_free(bound, n_max, force, budget);

    const std::size_t prefix_len = std::min<std::size_t>(11, n_max);
    CountSeries series{bound, std::vector<std::uint64_t>(n_max + 1, 0)};
    std::vector<Word> roots;
    {
        Word w({}, 2);
        detail::dfs_free(w, prefix_len, bound, budget, [&](const Word& x) {
            series.counts[x.size()] += 1;
            if (x.size() == prefix_len) roots.push_back(x);
        });
    }
    if (prefix_len == n_max) return series;

    std::vector<std::vector<std::uint64_t>> partial(
        shards, std::vector<std::uint64_t>(n_max + 1, 0));
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(shards);
    for (unsigned s = 0; s < shards; ++s) {
        workers.emplace_back([&, s] {
            try {
                Budget local = budget;
                for (std::size_t i = s; i < roots.size(); i += shards) {
                    Word w = roots[i];
                    detail::dfs_free(w, n_max, bound, local, [&](const Word& x) {
                        if (x.size() > prefix_len) partial[s][x.size()] += 1;
                    });
                }
            } catch (...) {
                errors[s] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (unsigned s = 0; s < shards; ++s)
        for (std::size_t n = 0; n <= n_max; ++n) series.counts[n] += partial[s][n];
    return series;
}

}  // namespace repwords
