#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "repwords/word.hpp"

namespace repwords {

// Morphism whose letter images all share one length r ("r-uniform").
class UniformMorphism {
public:
    explicit UniformMorphism(std::vector<Word> images) : images_(std::move(images)) {
        if (images_.empty()) throw std::invalid_argument("morphism needs at least one image");
        width_ = images_[0].size();
        if (width_ < 1) throw std::invalid_argument("images must be nonempty");
        codomain_ = 1;
        for (const Word& im : images_) {
            if (im.size() != width_)
                throw std::invalid_argument("images must all have the same length");
            codomain_ = std::max(codomain_, im.alphabet());
        }
    }

    int domain_size() const { return static_cast<int>(images_.size()); }
    int codomain_size() const { return codomain_; }
    std::size_t image_width() const { return width_; }

    const Word& image(Symbol a) const {
        if (a >= images_.size()) throw std::invalid_argument("letter outside domain");
        return images_[a];
    }

private:
    std::vector<Word> images_;
    std::size_t width_ = 0;
    int codomain_ = 1;
};

inline Word apply(const UniformMorphism& m, const Word& w) {
    std::vector<Symbol> out;
    out.reserve(m.image_width() * w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Word& im = m.image(w[i]);
        for (std::size_t j = 0; j < im.size(); ++j) out.push_back(im[j]);
    }
    return Word(std::move(out), m.codomain_size());
}

// Length-n prefix of the fixed point obtained by iterating m from the seed
// letter. Realized by repeated application; the seed image must start with
// the seed and the morphism must actually grow.
inline Word iterate(const UniformMorphism& m, Symbol seed, std::size_t target_length) {
    if (target_length < 1) throw std::invalid_argument("target length must be >= 1");
    if (m.codomain_size() > m.domain_size())
        throw std::invalid_argument("not an endomorphism, cannot iterate");
    const Word& im = m.image(seed);
    if (im[0] != seed)
        throw std::invalid_argument("morphism not prolongable on seed");
    Word w({seed}, m.domain_size());
    if (m.image_width() == 1) {
        if (target_length > 1)
            throw std::invalid_argument("fixed point of a 1-uniform morphism does not grow");
        return w;
    }
    while (w.size() < target_length) w = apply(m, w);
    return w.slice(0, target_length);
}

// Deinterleaves w under the Thue-Morse morphism: returns v with mu(v) = w if
// |w| is even and every aligned pair is 01 or 10, otherwise nullopt.
inline std::optional<Word> mu_inverse(const Word& w) {
    if (w.size() % 2 != 0) return std::nullopt;
    std::vector<Symbol> out;
    out.reserve(w.size() / 2);
    for (std::size_t i = 0; i < w.size(); i += 2) {
        if (w[i] == 0 && w[i + 1] == 1)
            out.push_back(0);
        else if (w[i] == 1 && w[i + 1] == 0)
            out.push_back(1);
        else
            return std::nullopt;
    }
    return Word(std::move(out), 2);
}

// Letter-to-language map: each position expands independently to one of the
// listed image words.
struct Substitution {
    std::vector<std::vector<Word>> images;

    const std::vector<Word>& image(Symbol a) const {
        if (a >= images.size()) throw std::invalid_argument("letter outside domain");
        if (images[a].empty()) throw std::invalid_argument("empty image set");
        return images[a];
    }
};

// Visits every word of the expansion language (one image choice per
// position) without materializing the set.
template <typename F>
void for_each_expansion(const Substitution& g, const Word& w, F&& fn) {
    Word acc({}, 1);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == w.size()) {
            fn(static_cast<const Word&>(acc));
            return;
        }
        for (const Word& choice : g.image(w[i])) {
            Word saved = acc;
            acc = acc + choice;
            self(self, i + 1);
            acc = std::move(saved);
        }
    };
    rec(rec, 0);
}

inline std::vector<Word> expand(const Substitution& g, const Word& w) {
    std::vector<Word> out;
    for_each_expansion(g, w, [&](const Word& x) { out.push_back(x); });
    return out;
}

// --- built-ins ---------------------------------------------------------

// 0 -> 01, 1 -> 10.
inline const UniformMorphism& thue_morse() {
    static const UniformMorphism m({Word::parse("01"), Word::parse("10")});
    return m;
}

// The 21-uniform morphism from four letters to binary whose images of
// squarefree words stay free of high powers.
inline const UniformMorphism& h21() {
    static const UniformMorphism m({Word::parse("011010011001001101001"),
                                    Word::parse("100101100100110010110"),
                                    Word::parse("100101100110110010110"),
                                    Word::parse("011010011011001101001")});
    return m;
}

// Projection 0,3 -> 0; 1 -> 1; 2 -> 2 (left inverse of the substitution g).
inline const UniformMorphism& projection_f() {
    static const UniformMorphism m({Word::parse("0", 3), Word::parse("1", 3),
                                    Word::parse("2", 3), Word::parse("0", 3)});
    return m;
}

// 0 -> {0, 3}, 1 -> {1}, 2 -> {2} over a four-letter codomain.
inline const Substitution& substitution_g() {
    static const Substitution g{{{Word::parse("0", 4), Word::parse("3", 4)},
                                 {Word::parse("1", 4)},
                                 {Word::parse("2", 4)}}};
    return g;
}

inline const UniformMorphism* named_morphism(std::string_view name) {
    if (name == "mu") return &thue_morse();
    if (name == "h21") return &h21();
    if (name == "f") return &projection_f();
    return nullptr;
}

inline const Substitution* named_substitution(std::string_view name) {
    if (name == "g") return &substitution_g();
    return nullptr;
}

// Plain-text morphism files: one line per letter, "a -> image", letters
// listed in order starting from 0. Blank lines and '#' comments allowed.
inline UniformMorphism parse_morphism(std::string_view text) {
    std::map<int, Word> images;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto arrow = line.find("->");
        if (arrow == std::string::npos) {
            bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
            if (blank) continue;
            throw std::invalid_argument("morphism line missing '->': " + line);
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string lhs = trim(line.substr(0, arrow));
        std::string rhs = trim(line.substr(arrow + 2));
        if (lhs.size() != 1 || lhs[0] < '0' || lhs[0] > '9')
            throw std::invalid_argument("morphism letter must be a single digit: " + lhs);
        int letter = lhs[0] - '0';
        if (images.count(letter))
            throw std::invalid_argument("duplicate image for letter " + lhs);
        images.emplace(letter, Word::parse(rhs));
    }
    if (images.empty()) throw std::invalid_argument("morphism file has no images");
    std::vector<Word> ordered;
    for (int a = 0; a < static_cast<int>(images.size()); ++a) {
        auto it = images.find(a);
        if (it == images.end())
            throw std::invalid_argument("missing image for letter " + std::to_string(a));
        ordered.push_back(it->second);
    }
    return UniformMorphism(std::move(ordered));
}

}  // namespace repwords
