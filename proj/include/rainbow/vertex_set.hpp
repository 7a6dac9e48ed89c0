#pragma once

// Dynamic bitset over dense vertex ids.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace rainbow {

using Vertex = int;
using Color = int;

class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
        for (auto v : members) insert(v);
    }

    template <class Range>
    static VertexSet from_range(std::size_t universe, const Range &members) {
        VertexSet out(universe);
        for (auto v : members) out.insert(static_cast<Vertex>(v));
        return out;
    }

    static VertexSet full(std::size_t universe) {
        VertexSet out(universe);
        for (std::size_t v = 0; v < universe; ++v) out.insert(static_cast<Vertex>(v));
        return out;
    }

    std::size_t universe() const { return universe_; }

    bool contains(Vertex v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= universe_) return false;
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void insert(Vertex v) {
        check(v);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(Vertex v) {
        check(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    std::size_t size() const {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    bool intersects(const VertexSet &other) const {
        const auto n = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet &operator&=(const VertexSet &other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
        return *this;
    }

    VertexSet &operator|=(const VertexSet &other) {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] |= other.words_[i];
        trim();
        return *this;
    }

    VertexSet &operator-=(const VertexSet &other) {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

    friend bool operator==(const VertexSet &a, const VertexSet &b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    /// Smallest member, or -1 when empty.
    Vertex first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
        return -1;
    }

    template <class Fn>
    void for_each(Fn &&fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                fn(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    /// Members in increasing id order.
    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    /// Low 64 members as a machine word; only meaningful when universe() <= 64.
    std::uint64_t word() const { return words_.empty() ? 0 : words_[0]; }

private:
    void check(Vertex v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= universe_)
            throw std::out_of_range("vertex id outside the vertex set universe");
    }

    void trim() {
        if (universe_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace rainbow
