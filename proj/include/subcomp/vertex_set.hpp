#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "error.hpp"

namespace sc {

using Vertex = std::size_t;

/// A subset of the vertices {0, ..., cap-1} of some graph, stored as a
/// bitmask. Sets over at most 256 vertices need no heap storage.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t cap) : cap_(cap), words_(word_count(cap)) {}
    VertexSet(std::size_t cap, std::initializer_list<Vertex> members) : VertexSet(cap) {
        for (Vertex v : members) insert(v);
    }

    template <typename Range>
    static VertexSet from_range(std::size_t cap, const Range& members) {
        VertexSet s(cap);
        for (auto v : members) s.insert(static_cast<Vertex>(v));
        return s;
    }

    static VertexSet full(std::size_t cap) {
        VertexSet s(cap);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }

    /// Low-order bits of `mask` become members (vertex i <-> bit i).
    static VertexSet from_mask(std::size_t cap, std::uint64_t mask) {
        VertexSet s(cap);
        if (!s.words_.empty()) s.words_[0] = mask;
        s.trim();
        return s;
    }

    std::size_t cap() const noexcept { return cap_; }
    std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }

    bool test(Vertex v) const noexcept {
        return v < cap_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
    }
    bool contains(Vertex v) const noexcept { return test(v); }

    void insert(Vertex v) {
        check_index(v);
        words_[v / kWordBits] |= Word{1} << (v % kWordBits);
    }
    void erase(Vertex v) {
        check_index(v);
        words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }
    void flip(Vertex v) {
        check_index(v);
        words_[v / kWordBits] ^= Word{1} << (v % kWordBits);
    }
    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }
    bool any() const noexcept { return !empty(); }

    /// Smallest member, or cap() when empty.
    Vertex first() const noexcept { return next_from(0); }
    /// Smallest member >= from, or cap() when none.
    Vertex next_from(Vertex from) const noexcept {
        if (from >= cap_) return cap_;
        std::size_t wi = from / kWordBits;
        Word w = words_[wi] & (~Word{0} << (from % kWordBits));
        while (true) {
            if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi >= words_.size()) return cap_;
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            Word w = words_[wi];
            while (w != 0) {
                f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    VertexSet& operator&=(const VertexSet& o) {
        same_cap(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        same_cap(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) {
        same_cap(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        same_cap(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement relative to {0, ..., cap-1}.
    VertexSet operator~() const {
        VertexSet r = *this;
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    bool intersects(const VertexSet& o) const {
        same_cap(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & o.words_[i]) != 0) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        same_cap(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        return true;
    }
    std::size_t intersection_count(const VertexSet& o) const {
        same_cap(o);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.cap_ == b.cap_ && std::equal(a.words_.begin(), a.words_.end(), b.words_.begin());
    }

    /// Orders sets as unsigned integers with vertex i worth 2^i.
    friend bool bitmask_less(const VertexSet& a, const VertexSet& b) {
        a.same_cap(b);
        for (std::size_t i = a.words_.size(); i-- > 0;) {
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        }
        return false;
    }

private:
    static std::size_t word_count(std::size_t cap) { return (cap + kWordBits - 1) / kWordBits; }

    void trim() noexcept {
        if (cap_ % kWordBits != 0 && !words_.empty())
            words_.back() &= (Word{1} << (cap_ % kWordBits)) - 1;
    }
    void check_index(Vertex v) const {
        if (v >= cap_)
            throw Error(Errc::CapMismatch,
                        "vertex " + std::to_string(v) + " outside set of cap " + std::to_string(cap_));
    }
    void same_cap(const VertexSet& o) const {
        if (o.cap_ != cap_)
            throw Error(Errc::CapMismatch,
                        "sets over " + std::to_string(cap_) + " and " + std::to_string(o.cap_) + " vertices");
    }

    /// Fixed-length word buffer; up to kInline words are stored in place.
    class Words {
    public:
        static constexpr std::size_t kInline = 4;

        Words() = default;
        explicit Words(std::size_t n) : size_(n) {
            if (n > kInline) heap_.assign(n, Word{0});
        }

        std::size_t size() const noexcept { return size_; }
        bool empty() const noexcept { return size_ == 0; }
        Word* data() noexcept { return size_ > kInline ? heap_.data() : inline_.data(); }
        const Word* data() const noexcept { return size_ > kInline ? heap_.data() : inline_.data(); }
        Word& operator[](std::size_t i) noexcept { return data()[i]; }
        const Word& operator[](std::size_t i) const noexcept { return data()[i]; }
        Word* begin() noexcept { return data(); }
        Word* end() noexcept { return data() + size_; }
        const Word* begin() const noexcept { return data(); }
        const Word* end() const noexcept { return data() + size_; }
        Word& back() noexcept { return data()[size_ - 1]; }

    private:
        std::size_t size_ = 0;
        std::array<Word, kInline> inline_{};
        std::vector<Word> heap_;
    };

    std::size_t cap_ = 0;
    Words words_;
};

} // namespace sc
