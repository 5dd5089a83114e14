#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace fca {

/// Fixed-width dynamic bit vector. Width is set at construction; all binary
/// operations require equal widths. Bits past the width are kept zero.
class BitVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t width, bool value = false)
        : width_(width), words_((width + kWordBits - 1) / kWordBits, value ? ~Word{0} : Word{0}) {
        trim();
    }

    std::size_t width() const noexcept { return width_; }

    bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
    void assign(std::size_t i, bool v) noexcept { v ? set(i) : reset(i); }

    void fill() noexcept {
        for (auto& w : words_) w = ~Word{0};
        trim();
    }
    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool none() const noexcept {
        for (Word w : words_)
            if (w) return false;
        return true;
    }
    bool all() const noexcept { return count() == width_; }

    BitVector& operator&=(const BitVector& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    BitVector& operator|=(const BitVector& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    /// Set difference.
    BitVector& operator-=(const BitVector& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend BitVector operator&(BitVector a, const BitVector& b) noexcept { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) noexcept { return a |= b; }
    friend BitVector operator-(BitVector a, const BitVector& b) noexcept { return a -= b; }

    bool is_subset_of(const BitVector& o) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    /// True when both vectors agree on every bit with index < limit.
    bool equal_below(const BitVector& o, std::size_t limit) const noexcept {
        const std::size_t full = limit / kWordBits;
        for (std::size_t k = 0; k < full; ++k)
            if (words_[k] != o.words_[k]) return false;
        const std::size_t rest = limit % kWordBits;
        if (rest == 0) return true;
        const Word mask = (Word{1} << rest) - 1;
        return ((words_[full] ^ o.words_[full]) & mask) == 0;
    }

    /// Clears every bit with index >= from.
    void truncate(std::size_t from) noexcept {
        for (std::size_t i = from; i < width_ && i % kWordBits != 0; ++i) reset(i);
        for (std::size_t k = (from + kWordBits - 1) / kWordBits; k < words_.size(); ++k) words_[k] = 0;
    }

    /// Index of the first set bit at or after `from`, or width() if none.
    std::size_t find_next(std::size_t from) const noexcept {
        if (from >= width_) return width_;
        std::size_t k = from / kWordBits;
        Word w = words_[k] & (~Word{0} << (from % kWordBits));
        while (true) {
            if (w) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return width_;
            w = words_[k];
        }
    }
    std::size_t find_first() const noexcept { return find_next(0); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = find_first(); i < width_; i = find_next(i + 1)) f(i);
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::size_t hash() const noexcept {
        std::size_t h = std::hash<std::size_t>{}(width_);
        for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void trim() noexcept {
        if (width_ % kWordBits != 0 && !words_.empty()) words_.back() &= (Word{1} << (width_ % kWordBits)) - 1;
    }

    std::size_t width_ = 0;
    std::vector<Word> words_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector& v) const noexcept { return v.hash(); }
};

}  // namespace fca
