#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace psigma {

/// Maximum label usable in a VertexSet (labels run 1..kMaxLabel).
inline constexpr int kMaxLabel = 31;

/// A set of vertex labels in 1..31, stored as a bitmask (label l <-> bit l-1).
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> labels)
    {
        for (int l : labels)
            insert(l);
    }
    explicit VertexSet(const std::vector<int>& labels)
    {
        for (int l : labels)
            insert(l);
    }

    /// {1, ..., n}
    static constexpr VertexSet range(int n)
    {
        return VertexSet(n >= 32 ? ~0u : ((1u << n) - 1u));
    }
    static constexpr VertexSet single(int label) { return VertexSet(1u << (label - 1)); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int label) const { return (bits_ >> (label - 1)) & 1u; }
    constexpr void insert(int label) { bits_ |= 1u << (label - 1); }
    constexpr void erase(int label) { bits_ &= ~(1u << (label - 1)); }

    /// Smallest label; undefined on the empty set.
    constexpr int min() const { return std::countr_zero(bits_) + 1; }
    /// Largest label; undefined on the empty set.
    constexpr int max() const { return 32 - std::countl_zero(bits_); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Lexicographic order on the increasing label sequences ({1,2} < {1,2,3} < {1,3}).
    constexpr std::strong_ordering operator<=>(VertexSet o) const
    {
        if (bits_ == o.bits_)
            return std::strong_ordering::equal;
        const std::uint32_t diff = bits_ ^ o.bits_;
        const std::uint32_t low = diff & (~diff + 1u);
        const std::uint32_t above = ~((low << 1) - 1u);
        if (bits_ & low) {
            // we hold the smaller next element unless the other sequence has run out
            return (o.bits_ & above) ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return (bits_ & above) ? std::strong_ordering::greater : std::strong_ordering::less;
    }

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
        constexpr iterator& operator++()
        {
            rest_ &= rest_ - 1u;
            return *this;
        }
        constexpr iterator operator++(int)
        {
            auto t = *this;
            ++*this;
            return t;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint32_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

    /// "{1,2,3}"
    std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        for (int l : *this) {
            if (!first)
                s += ',';
            s += std::to_string(l);
            first = false;
        }
        return s + "}";
    }

private:
    std::uint32_t bits_ = 0;
};

struct VertexSetHash {
    std::size_t operator()(VertexSet s) const noexcept { return s.bits(); }
};

} // namespace psigma
