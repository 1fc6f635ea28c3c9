#include "augcolor/vertex_set.hpp"

#include "augcolor/errors.hpp"

#include <string>

namespace augcolor {

namespace {

void check_member(std::size_t universe, Vertex v)
{
    if (v >= universe)
        throw InputError("vertex " + std::to_string(v) + " outside universe of size "
                         + std::to_string(universe));
}

void check_same_universe(const VertexSet& a, const VertexSet& b)
{
    if (a.universe() != b.universe())
        throw InputError("vertex sets over different universes");
}

} // namespace

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe)
{
    for (Vertex v : members) {
        check_member(universe, v);
        insert(v);
    }
}

VertexSet VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    for (auto& w : s.words_)
        w = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty())
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

VertexSet VertexSet::from(std::size_t universe, std::span<const Vertex> members)
{
    VertexSet s(universe);
    for (Vertex v : members) {
        check_member(universe, v);
        s.insert(v);
    }
    return s;
}

std::size_t VertexSet::size() const
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const
{
    for (auto w : words_)
        if (w != 0)
            return false;
    return true;
}

std::size_t VertexSet::next(std::size_t from) const
{
    if (from >= universe_)
        return npos;
    std::size_t w = from >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (bits != 0)
            return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == words_.size())
            return npos;
        bits = words_[w];
    }
}

bool VertexSet::intersects(const VertexSet& other) const
{
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & other.words_[i]) != 0)
            return true;
    return false;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const
{
    check_same_universe(*this, other);
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return total;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

} // namespace augcolor
