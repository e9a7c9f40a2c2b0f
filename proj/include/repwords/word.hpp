#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace repwords {

using Symbol = std::uint8_t;

// Finite word over the alphabet {0, ..., alphabet_size - 1}. Value type;
// everything operating on words is a pure function, so words are safe to
// share across threads.
class Word {
public:
    Word() = default;

    Word(std::vector<Symbol> symbols, int alphabet_size)
        : symbols_(std::move(symbols)), alphabet_(alphabet_size) {
        if (alphabet_ < 1 || alphabet_ > 10)
            throw std::invalid_argument("alphabet size out of range [1, 10]");
        for (Symbol s : symbols_)
            if (static_cast<int>(s) >= alphabet_)
                throw std::invalid_argument("symbol out of range for alphabet");
    }

    // Parses a digit string like "0110". alphabet_size 0 infers the smallest
    // alphabet covering the digits seen, but never smaller than binary.
    static Word parse(std::string_view digits, int alphabet_size = 0) {
        std::vector<Symbol> syms;
        syms.reserve(digits.size());
        int seen = 2;
        for (char c : digits) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("word must be a digit string, got '" +
                                            std::string(digits) + "'");
            syms.push_back(static_cast<Symbol>(c - '0'));
            seen = std::max(seen, c - '0' + 1);
        }
        return Word(std::move(syms), alphabet_size == 0 ? seen : alphabet_size);
    }

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    int alphabet() const { return alphabet_; }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    void push_back(Symbol s) {
        if (static_cast<int>(s) >= alphabet_)
            throw std::invalid_argument("symbol out of range for alphabet");
        symbols_.push_back(s);
    }
    void pop_back() { symbols_.pop_back(); }

    Word slice(std::size_t pos, std::size_t len) const {
        if (pos + len > size()) throw std::out_of_range("slice out of range");
        return Word(std::vector<Symbol>(symbols_.begin() + pos,
                                        symbols_.begin() + pos + len),
                    alphabet_);
    }

    bool starts_with(const Word& prefix) const {
        if (prefix.size() > size()) return false;
        for (std::size_t i = 0; i < prefix.size(); ++i)
            if (symbols_[i] != prefix[i]) return false;
        return true;
    }

    bool ends_with(const Word& suffix) const {
        if (suffix.size() > size()) return false;
        std::size_t off = size() - suffix.size();
        for (std::size_t i = 0; i < suffix.size(); ++i)
            if (symbols_[off + i] != suffix[i]) return false;
        return true;
    }

    bool contains(const Word& needle) const {
        if (needle.empty()) return true;
        if (needle.size() > size()) return false;
        for (std::size_t i = 0; i + needle.size() <= size(); ++i) {
            std::size_t j = 0;
            while (j < needle.size() && symbols_[i + j] == needle[j]) ++j;
            if (j == needle.size()) return true;
        }
        return false;
    }

    std::size_t count(Symbol s) const {
        std::size_t n = 0;
        for (Symbol t : symbols_)
            if (t == s) ++n;
        return n;
    }

    std::string str() const {
        std::string out;
        out.reserve(size());
        for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
        return out;
    }

    friend Word operator+(const Word& a, const Word& b) {
        std::vector<Symbol> syms = a.symbols_;
        syms.insert(syms.end(), b.symbols_.begin(), b.symbols_.end());
        return Word(std::move(syms), std::max(a.alphabet_, b.alphabet_));
    }

    // Equality and order look at symbols only; the alphabet is a typing
    // attribute, not part of the value.
    friend bool operator==(const Word& a, const Word& b) {
        return a.symbols_ == b.symbols_;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b) {
        return a.symbols_ < b.symbols_;
    }

private:
    std::vector<Symbol> symbols_;
    int alphabet_ = 2;
};

// Exact rational, always kept reduced with positive denominator.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Fraction reduced(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::invalid_argument("zero denominator");
        std::int64_t g = std::gcd(n, d);
        if (g == 0) g = 1;
        return Fraction{n / g, d / g};
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return static_cast<__int128>(a.num) * b.den <
               static_cast<__int128>(b.num) * a.den;
    }
};

// Exponent threshold alpha = num/den. Closed bounds forbid factors of
// exponent >= alpha; open bounds ("alpha+") forbid exponent > alpha only.
struct ExponentBound {
    std::int64_t num = 2;
    std::int64_t den = 1;
    bool open = false;

    static ExponentBound make(std::int64_t n, std::int64_t d, bool open_) {
        if (n <= 0 || d <= 0) throw std::invalid_argument("bound must be positive");
        if (n < d) throw std::invalid_argument("bound below 1 forbids everything");
        std::int64_t g = std::gcd(n, d);
        return ExponentBound{n / g, d / g, open_};
    }

    // Does a factor of the given length and period violate this bound?
    bool violated_by(std::size_t length, std::size_t period) const {
        auto lhs = static_cast<__int128>(length) * den;
        auto rhs = static_cast<__int128>(num) * period;
        return open ? lhs > rhs : lhs >= rhs;
    }

    std::string str() const {
        std::string s = Fraction{num, den}.str();
        if (open) s += '+';
        return s;
    }

    friend bool operator==(const ExponentBound& a, const ExponentBound& b) {
        return a.num == b.num && a.den == b.den && a.open == b.open;
    }
};

// A repetition exceeding a bound: the factor w[start .. start+length) has
// period `period` and exponent length/period on the wrong side of the bound.
struct Violation {
    std::size_t start = 0;
    std::size_t length = 0;
    std::size_t period = 0;
    Fraction exponent;
};

// Grammar: <int>[/<int>][+], e.g. "2+", "7/3", "7/3+", "3".
inline ExponentBound parse_exponent_bound(std::string_view s) {
    std::string_view rest = s;
    bool open = false;
    if (!rest.empty() && rest.back() == '+') {
        open = true;
        rest.remove_suffix(1);
    }
    auto parse_int = [](std::string_view t) -> std::int64_t {
        if (t.empty() || t.size() > 18)
            throw std::invalid_argument("malformed exponent bound");
        std::int64_t v = 0;
        for (char c : t) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("malformed exponent bound");
            v = v * 10 + (c - '0');
        }
        return v;
    };
    std::int64_t num, den = 1;
    auto slash = rest.find('/');
    if (slash == std::string_view::npos) {
        num = parse_int(rest);
    } else {
        num = parse_int(rest.substr(0, slash));
        den = parse_int(rest.substr(slash + 1));
    }
    if (den == 0) throw std::invalid_argument("zero denominator in exponent bound");
    if (num < den)
        throw std::invalid_argument("exponent bound below 1: " + std::string(s));
    return ExponentBound::make(num, den, open);
}

// Smallest p >= 1 with w[i] == w[i + p] for all 0 <= i < |w| - p; computed
// from the longest border of w.
inline std::size_t minimal_period(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word has no period");
    std::size_t n = w.size();
    std::vector<std::size_t> border(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t b = border[i - 1];
        while (b > 0 && w[i] != w[b]) b = border[b - 1];
        if (w[i] == w[b]) ++b;
        border[i] = b;
    }
    return n - border[n - 1];
}

inline Fraction word_exponent(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word has no exponent");
    return Fraction::reduced(static_cast<std::int64_t>(w.size()),
                             static_cast<std::int64_t>(minimal_period(w)));
}

// Scans end positions left to right, and for each end the candidate periods
// smallest first, so the reported witness is the leftmost-ending violation
// with the smallest period. The factor reported is the longest suffix with
// that period ending there; it dominates the exponent of every shorter one.
inline std::optional<Violation> find_violation(const Word& w,
                                               const ExponentBound& bound) {
    // Bounds at or below exponent 1 are violated by any single letter.
    if (bound.violated_by(1, 1)) {
        if (w.empty()) return std::nullopt;
        return Violation{0, 1, 1, Fraction{1, 1}};
    }
    std::size_t n = w.size();
    for (std::size_t end = 2; end <= n; ++end) {
        for (std::size_t p = 1; p < end; ++p) {
            std::size_t m = 0;
            while (m < end - p && w[end - 1 - m] == w[end - 1 - p - m]) ++m;
            if (m == 0) continue;
            std::size_t len = m + p;
            if (bound.violated_by(len, p))
                return Violation{end - len, len, p,
                                 Fraction::reduced(static_cast<std::int64_t>(len),
                                                   static_cast<std::int64_t>(p))};
        }
    }
    return std::nullopt;
}

// Incremental checker for depth-first enumeration: assuming w minus its last
// letter is already free, w is free iff no suffix of w violates the bound.
// Only suffix runs are inspected.
inline bool extension_safe(const Word& w, const ExponentBound& bound) {
    if (bound.violated_by(1, 1)) return w.empty();
    std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        std::size_t m = 0;
        while (m < n - p && w[n - 1 - m] == w[n - 1 - p - m]) ++m;
        if (m > 0 && bound.violated_by(m + p, p)) return false;
    }
    return true;
}

inline bool is_free(const Word& w, const ExponentBound& bound) {
    return !find_violation(w, bound).has_value();
}

inline bool is_squarefree(const Word& w) {
    return is_free(w, ExponentBound::make(2, 1, false));
}

// Largest q such that w contains a square xx with |x| = q; 0 if squarefree.
inline std::size_t max_square_root(const Word& w) {
    std::size_t n = w.size();
    std::size_t best = 0;
    for (std::size_t p = 1; 2 * p <= n; ++p) {
        std::size_t run = 0;
        for (std::size_t j = 0; j + p < n; ++j) {
            if (w[j] == w[j + p]) {
                if (++run >= p) {
                    best = p;
                    break;
                }
            } else {
                run = 0;
            }
        }
    }
    return best;
}

// Enumerates all squarefree words of the given length over the alphabet,
// lexicographically. fn receives each word as a const Word&.
template <typename F>
void for_each_squarefree(int alphabet_size, std::size_t length, F&& fn) {
    const ExponentBound square = ExponentBound::make(2, 1, false);
    Word w({}, alphabet_size);
    auto dfs = [&](auto&& self) -> void {
        if (w.size() == length) {
            fn(static_cast<const Word&>(w));
            return;
        }
        for (int c = 0; c < alphabet_size; ++c) {
            w.push_back(static_cast<Symbol>(c));
            if (extension_safe(w, square)) self(self);
            w.pop_back();
        }
    };
    dfs(dfs);
}

}  // namespace repwords
