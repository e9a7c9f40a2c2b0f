#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace repwords {

// Arbitrary-precision unsigned integer supporting exactly what transfer-
// matrix counting needs: addition, comparison, decimal output. Limbs are
// base 10^9, least significant first; zero is the empty limb vector.
class BigNat {
public:
    BigNat() = default;

    BigNat(std::uint64_t v) {  // NOLINT: implicit by design
        while (v > 0) {
            limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
            v /= kBase;
        }
    }

    bool is_zero() const { return limbs_.empty(); }

    BigNat& operator+=(const BigNat& o) {
        std::uint64_t carry = 0;
        std::size_t n = std::max(limbs_.size(), o.limbs_.size());
        limbs_.resize(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = carry + limbs_[i] +
                              (i < o.limbs_.size() ? o.limbs_[i] : 0u);
            limbs_[i] = static_cast<std::uint32_t>(s % kBase);
            carry = s / kBase;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }

    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }

    friend bool operator==(const BigNat& a, const BigNat& b) {
        return a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigNat& a, const BigNat& b) { return !(a == b); }
    friend bool operator<(const BigNat& a, const BigNat& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
        return false;
    }
    friend bool operator<=(const BigNat& a, const BigNat& b) { return !(b < a); }
    friend bool operator>(const BigNat& a, const BigNat& b) { return b < a; }
    friend bool operator>=(const BigNat& a, const BigNat& b) { return !(a < b); }

    std::string str() const {
        if (limbs_.empty()) return "0";
        std::string out = std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            out += std::string(9 - part.size(), '0') + part;
        }
        return out;
    }

    double to_double() const {
        double v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            v = v * kBase + limbs_[i];
        return v;
    }

    bool fits_u64() const {
        if (limbs_.size() > 3) return false;
        unsigned __int128 v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
        return v <= ~std::uint64_t{0};
    }

    std::uint64_t as_u64() const {
        std::uint64_t v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            v = v * kBase + limbs_[i];
        return v;
    }

private:
    static constexpr std::uint64_t kBase = 1000000000;
    std::vector<std::uint32_t> limbs_;
};

}  // namespace repwords
