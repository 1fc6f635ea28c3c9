#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace augcolor {

using Vertex = std::uint32_t;

/// Fixed-universe bitset over vertices 0..universe-1.
class VertexSet {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0)
    {
    }
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    static VertexSet full(std::size_t universe);
    static VertexSet from(std::size_t universe, std::span<const Vertex> members);

    std::size_t universe() const { return universe_; }

    bool contains(Vertex v) const
    {
        return (words_[v >> 6] >> (v & 63)) & 1U;
    }
    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t size() const;
    bool empty() const;

    // First member with index >= from, or npos.
    std::size_t next(std::size_t from = 0) const;

    bool intersects(const VertexSet& other) const;
    std::size_t intersection_size(const VertexSet& other) const;

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::vector<Vertex> members() const;

    template <typename F> void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::span<const std::uint64_t> words() const { return words_; }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace augcolor
