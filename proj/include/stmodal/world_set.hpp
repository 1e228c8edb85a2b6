#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace stmodal {

/// Fixed-universe bitset over world indices [0, universe).
///
/// All binary operations require both operands to share a universe size.
class WorldSet {
public:
    WorldSet() = default;
    explicit WorldSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    static WorldSet full(std::size_t universe) {
        WorldSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    [[nodiscard]] std::size_t universe() const { return universe_; }

    void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void erase(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    [[nodiscard]] bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    [[nodiscard]] std::size_t size() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    [[nodiscard]] bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    [[nodiscard]] bool is_subset_of(const WorldSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        return true;
    }
    [[nodiscard]] bool intersects(const WorldSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & o.words_[i]) != 0) return true;
        return false;
    }

    WorldSet& operator|=(const WorldSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    WorldSet& operator&=(const WorldSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    WorldSet& operator-=(const WorldSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend WorldSet operator|(WorldSet a, const WorldSet& b) { return a |= b; }
    friend WorldSet operator&(WorldSet a, const WorldSet& b) { return a &= b; }
    friend WorldSet operator-(WorldSet a, const WorldSet& b) { return a -= b; }

    [[nodiscard]] WorldSet complement() const {
        WorldSet c = *this;
        for (auto& w : c.words_) w = ~w;
        c.trim();
        return c;
    }

    /// Smallest member, or universe() when empty.
    [[nodiscard]] std::size_t first() const { return next(0); }

    /// Smallest member >= from, or universe() when none.
    [[nodiscard]] std::size_t next(std::size_t from) const {
        if (from >= universe_) return universe_;
        std::size_t wi = from / 64;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from % 64));
        while (true) {
            if (w != 0) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return universe_;
            w = words_[wi];
        }
    }

    [[nodiscard]] std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t i = first(); i < universe_; i = next(i + 1)) out.push_back(i);
        return out;
    }

    friend bool operator==(const WorldSet&, const WorldSet&) = default;

private:
    void trim() {
        if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace stmodal
