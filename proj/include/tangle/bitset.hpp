#pragma once

#include <cstdint>
#include <vector>

namespace tangle {

// Fixed-capacity bitset sized at runtime; used for supporter sets and
// conflict masks where membership tests dominate.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    void resize(std::size_t bits) {
        bits_ = bits;
        words_.assign((bits + 63) / 64, 0);
    }

    std::size_t size() const { return bits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    // Returns true when the bit was newly set.
    bool set(std::size_t i) {
        std::uint64_t& w = words_[i >> 6];
        const std::uint64_t m = 1ull << (i & 63);
        if (w & m) return false;
        w |= m;
        return true;
    }

    bool reset(std::size_t i) {
        std::uint64_t& w = words_[i >> 6];
        const std::uint64_t m = 1ull << (i & 63);
        if (!(w & m)) return false;
        w &= ~m;
        return true;
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool intersects(const Bitset& other) const {
        const std::size_t n = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    bool contains(const Bitset& other) const {
        const std::size_t n = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (other.words_[i] & ~words_[i]) return false;
        for (std::size_t i = n; i < other.words_.size(); ++i)
            if (other.words_[i]) return false;
        return true;
    }

    void unite(const Bitset& other) {
        if (other.words_.size() > words_.size()) {
            words_.resize(other.words_.size(), 0);
            bits_ = other.bits_;
        }
        for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int b = __builtin_ctzll(w);
                fn(wi * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        const std::size_t n = std::max(a.words_.size(), b.words_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
            const std::uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
            if (wa != wb) return false;
        }
        return true;
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace tangle
