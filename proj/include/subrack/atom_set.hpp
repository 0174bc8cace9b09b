#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace subrack {

/// Largest element count any set-based structure in the library can address.
inline constexpr int kMaxAtoms = 64;

/**
 * A subset of {0, ..., 63} stored in one machine word.
 *
 * Every element set in the library (subgroups, subracks, lattice elements,
 * partition blocks) is an AtomSet; set algebra is word-parallel.
 *
 * Ordering is the numeric value of the mask, so the empty set sorts first
 * and a set containing a high index sorts after any set of lower indices.
 */
class AtomSet {
public:
    using Word = std::uint64_t;

    constexpr AtomSet() = default;
    constexpr explicit AtomSet(Word bits) : bits_(bits) {}
    AtomSet(std::initializer_list<int> members)
    {
        for (int m : members)
            insert(m);
    }

    static constexpr AtomSet full(int n)
    {
        return AtomSet(n >= 64 ? ~Word{0} : ((Word{1} << n) - 1));
    }
    static constexpr AtomSet single(int i) { return AtomSet(Word{1} << i); }

    template <class Range>
    static AtomSet from_range(const Range& r)
    {
        AtomSet s;
        for (auto v : r)
            s.insert(static_cast<int>(v));
        return s;
    }

    constexpr Word bits() const { return bits_; }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
    constexpr void insert(int i) { bits_ |= Word{1} << i; }
    constexpr void erase(int i) { bits_ &= ~(Word{1} << i); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    /// Smallest member; undefined on the empty set.
    constexpr int min() const { return std::countr_zero(bits_); }
    constexpr int max() const { return 63 - std::countl_zero(bits_); }

    constexpr bool subset_of(AtomSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool proper_subset_of(AtomSet o) const { return subset_of(o) && bits_ != o.bits_; }
    constexpr bool intersects(AtomSet o) const { return (bits_ & o.bits_) != 0; }

    /// Members strictly below index i.
    constexpr AtomSet below(int i) const
    {
        return AtomSet(i >= 64 ? bits_ : bits_ & ((Word{1} << i) - 1));
    }
    constexpr AtomSet complement(int n) const { return AtomSet(~bits_) & full(n); }

    friend constexpr AtomSet operator&(AtomSet a, AtomSet b) { return AtomSet(a.bits_ & b.bits_); }
    friend constexpr AtomSet operator|(AtomSet a, AtomSet b) { return AtomSet(a.bits_ | b.bits_); }
    friend constexpr AtomSet operator^(AtomSet a, AtomSet b) { return AtomSet(a.bits_ ^ b.bits_); }
    friend constexpr AtomSet operator-(AtomSet a, AtomSet b) { return AtomSet(a.bits_ & ~b.bits_); }
    constexpr AtomSet& operator&=(AtomSet o) { bits_ &= o.bits_; return *this; }
    constexpr AtomSet& operator|=(AtomSet o) { bits_ |= o.bits_; return *this; }
    constexpr AtomSet& operator-=(AtomSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr bool operator==(AtomSet, AtomSet) = default;
    friend constexpr auto operator<=>(AtomSet a, AtomSet b) { return a.bits_ <=> b.bits_; }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(Word w) : w_(w) {}
        constexpr int operator*() const { return std::countr_zero(w_); }
        constexpr iterator& operator++()
        {
            w_ &= w_ - 1;
            return *this;
        }
        constexpr iterator operator++(int)
        {
            iterator t = *this;
            ++*this;
            return t;
        }
        friend constexpr bool operator==(iterator, iterator) = default;

    private:
        Word w_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

private:
    Word bits_ = 0;
};

struct AtomSetHash {
    std::size_t operator()(AtomSet s) const noexcept
    {
        // splitmix64 finalizer
        auto z = s.bits() + 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(z ^ (z >> 31));
    }
};

/// Gathers the bits of `s` selected by `mask` into the low bits (software pext).
inline AtomSet compress(AtomSet s, AtomSet mask)
{
    AtomSet out;
    int k = 0;
    for (int i : mask) {
        if (s.contains(i))
            out.insert(k);
        ++k;
    }
    return out;
}

/// Inverse of compress: spreads the low bits of `s` onto the positions of `mask`.
inline AtomSet expand(AtomSet s, AtomSet mask)
{
    AtomSet out;
    int k = 0;
    for (int i : mask) {
        if (s.contains(k))
            out.insert(i);
        ++k;
    }
    return out;
}

}  // namespace subrack
