#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subrack/atom_set.hpp"
#include "subrack/group.hpp"

namespace subrack {

/**
 * A finite rack stored as its operation table: op(a, b) = a ▷ b.
 *
 * Construction validates self-distributivity and bijectivity of every left
 * translation; conjugation racks are additionally checked to be quandles.
 */
class Rack {
public:
    enum class Backing { Conjugation, Abstract };

    Rack() = default;

    /// Throws InputError when the table violates the rack axioms.
    static Rack from_table(std::vector<std::vector<int>> table, Backing backing = Backing::Abstract);

    int size() const { return n_; }
    Backing backing() const { return backing_; }
    int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    AtomSet elements() const { return AtomSet::full(n_); }
    bool is_quandle() const;

    /// Orbits of the inner automorphism group, sorted by smallest member.
    const std::vector<AtomSet>& orbits() const { return orbits_; }

    /// Least subrack containing s.
    AtomSet generate(AtomSet s) const;
    /// Least subrack containing closed ∪ extra, given that `closed` is already a subrack.
    AtomSet extend(AtomSet closed, AtomSet extra) const;

private:
    int n_ = 0;
    Backing backing_ = Backing::Abstract;
    std::vector<std::uint8_t> table_;
    std::vector<AtomSet> orbits_;
};

/// a ▷ b = a b a^-1 over the group.
Rack conjugation_quandle(const FiniteGroup& g);

/// {s ▷ t : s ∈ S, t ∈ T}
AtomSet set_conjugate(AtomSet s, AtomSet t, const Rack& r);

/// S ▷ S ⊆ S; on a finite rack this already forces S ▷ S = S.
bool is_subrack(AtomSet s, const Rack& r);

inline AtomSet subrack_generated(AtomSet s, const Rack& r) { return r.generate(s); }

/// Union of the conjugacy classes of the elements of s.
AtomSet class_closure(AtomSet s, const FiniteGroup& g);

/// The left translation b -> a ▷ b.
struct InnerPermutation {
    int source;
    std::vector<int> images;
};

/// All phi_a together with the image group Phi(G), realized as distinct permutations.
struct InnerMap {
    std::vector<InnerPermutation> maps;      ///< indexed by element
    std::vector<std::vector<int>> distinct;  ///< Phi(G), in order of first occurrence
    std::vector<int> fiber_of;               ///< element -> index into `distinct`
};

InnerMap inner_map(const FiniteGroup& g);

}  // namespace subrack
