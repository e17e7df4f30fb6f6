#ifndef CPERS_VERTEX_SET_HPP
#define CPERS_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cpers {

/// Fixed-capacity bitset over vertex indices 0..capacity-1.
class VertexSet {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    static VertexSet full(std::size_t capacity) {
        VertexSet s(capacity);
        for (std::size_t v = 0; v < capacity; ++v)
            s.set(v);
        return s;
    }

    std::size_t capacity() const noexcept { return capacity_; }

    void set(std::size_t v) { words_[v / 64] |= bit(v); }
    void reset(std::size_t v) { words_[v / 64] &= ~bit(v); }
    bool test(std::size_t v) const { return (words_[v / 64] & bit(v)) != 0; }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    /// Smallest member >= from, or npos.
    std::size_t next(std::size_t from = 0) const noexcept {
        if (from >= capacity_)
            return npos;
        std::size_t wi = from / 64;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from % 64));
        while (true) {
            if (w != 0)
                return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size())
                return npos;
            w = words_[wi];
        }
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (auto v = next(0); v != npos; v = next(v + 1))
            out.push_back(v);
        return out;
    }

    VertexSet &operator&=(const VertexSet &o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet &operator|=(const VertexSet &o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet &operator-=(const VertexSet &o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

    bool intersects(const VertexSet &o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & o.words_[i]) != 0)
                return true;
        return false;
    }

    std::size_t intersection_count(const VertexSet &o) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
    static std::uint64_t bit(std::size_t v) noexcept { return std::uint64_t{1} << (v % 64); }

    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace cpers

#endif
