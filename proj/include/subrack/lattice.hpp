#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subrack/atom_set.hpp"
#include "subrack/error.hpp"
#include "subrack/group.hpp"
#include "subrack/rack.hpp"

namespace subrack {

/// Default cap on materialized lattice size.
inline constexpr std::size_t kExplicitCap = std::size_t{1} << 20;
/// Largest interval rack whose subrack lattice is enumerated to find its coatoms.
inline constexpr int kIntervalRackCap = 24;

/**
 * A finite lattice of subsets of its atoms, closed under intersection.
 *
 * Every lattice in this library is of this kind: meet is intersection and
 * join is generate(a ∪ b). Elements are AtomSets in the lattice's own atom
 * labels. Algorithms that are meant to be "lattice only" talk to this
 * interface and nothing else.
 */
class Lattice {
public:
    virtual ~Lattice() = default;

    virtual int atom_count() const = 0;
    /// Least element containing s.
    virtual AtomSet generate(AtomSet s) const = 0;
    /// Least element containing closed ∪ extra, where `closed` is an element.
    virtual AtomSet extend(AtomSet closed, AtomSet extra) const { return generate(closed | extra); }
    /// Elements covered by the maximum.
    virtual const std::vector<AtomSet>& coatoms() const = 0;
    virtual AtomSet top() const { return AtomSet::full(atom_count()); }

    bool is_element(AtomSet s) const { return s.subset_of(top()) && generate(s) == s; }
    AtomSet meet(AtomSet a, AtomSet b) const { return a & b; }
    AtomSet join(AtomSet a, AtomSet b) const { return generate(a | b); }
    /// Meet of the coatoms above s (the maximum if there are none). No element check.
    AtomSet coatom_meet(AtomSet s) const;
    /// atoms x, y with join({x}, {y}) = {x, y}
    bool atoms_commute(int x, int y) const;
};

/// Calls visit(element) once per element containing generate(from), by close-by-one search.
/// Throws CapExceeded once more than `cap` elements have been visited.
void for_each_element(const Lattice& l, const std::function<void(AtomSet)>& visit,
                      std::size_t cap = kExplicitCap, AtomSet from = {});

std::size_t count_elements(const Lattice& l, std::size_t cap = kExplicitCap);

/// Maximal elements strictly below the top, found by full enumeration.
std::vector<AtomSet> coatoms_by_enumeration(const Lattice& l, std::size_t cap = kExplicitCap);

/**
 * Implicit view of the subrack lattice of a rack. Nothing is materialized;
 * join is rack closure. Coatoms of conjugation racks are the complements of
 * the inner-automorphism orbits; for abstract racks they are found by
 * enumeration (rack size <= kIntervalRackCap).
 */
class RackLattice : public Lattice {
public:
    explicit RackLattice(Rack r) : rack_(std::move(r)) {}

    const Rack& rack() const { return rack_; }
    int atom_count() const override { return rack_.size(); }
    AtomSet generate(AtomSet s) const override { return rack_.generate(s); }
    AtomSet extend(AtomSet closed, AtomSet extra) const override { return rack_.extend(closed, extra); }
    const std::vector<AtomSet>& coatoms() const override;

private:
    Rack rack_;
    mutable std::optional<std::vector<AtomSet>> coatoms_;
};

/// The implicit query view over a rack.
inline RackLattice implicit_view(Rack r) { return RackLattice(std::move(r)); }

/**
 * The interval [generate(∅), t] of a parent lattice, with its atoms relabeled
 * 0..|t|-1 in increasing parent order. This is the subrack lattice of t seen
 * as a rack in its own right.
 */
class IntervalView : public Lattice {
public:
    IntervalView(const Lattice& parent, AtomSet t, int rack_cap = kIntervalRackCap);

    AtomSet to_parent(AtomSet local) const { return expand(local, t_); }
    AtomSet to_local(AtomSet s) const { return compress(s, t_); }
    AtomSet parent_top() const { return t_; }

    int atom_count() const override { return t_.size(); }
    AtomSet generate(AtomSet s) const override { return to_local(parent_.generate(to_parent(s))); }
    AtomSet extend(AtomSet closed, AtomSet extra) const override
    {
        return to_local(parent_.extend(to_parent(closed), to_parent(extra)));
    }
    const std::vector<AtomSet>& coatoms() const override;

private:
    const Lattice& parent_;
    AtomSet t_;
    int rack_cap_;
    mutable std::optional<std::vector<AtomSet>> coatoms_;
};

/**
 * A fully materialized lattice (or interval of one): sorted elements plus the
 * cover relation. Queries are answered from the stored elements only:
 * generate(s) descends the Hasse diagram from the top to the least stored
 * element containing s.
 */
class ExplicitLattice : public Lattice {
public:
    /// All elements of l in [generate(from), top], with Hasse covers.
    static ExplicitLattice enumerate(const Lattice& l, std::size_t cap = kExplicitCap, AtomSet from = {});

    const std::vector<AtomSet>& elements() const { return elements_; }
    /// Pairs (lower index, upper index) of covering elements.
    const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }
    /// Position of s in elements(), or -1.
    int index_of(AtomSet s) const;
    std::size_t size() const { return elements_.size(); }
    AtomSet bottom() const { return elements_.front(); }

    int atom_count() const override { return atoms_; }
    AtomSet generate(AtomSet s) const override;
    const std::vector<AtomSet>& coatoms() const override { return coatoms_; }
    AtomSet top() const override { return elements_.back(); }

private:
    int atoms_ = 0;
    std::vector<AtomSet> elements_;
    std::vector<std::pair<int, int>> hasse_;
    std::vector<AtomSet> coatoms_;
    std::vector<std::vector<int>> lower_;  ///< lower covers of each element
    std::unordered_map<AtomSet, int, AtomSetHash> index_;
};

/// The full subrack lattice of r, materialized. Throws CapExceeded above `cap` elements.
inline ExplicitLattice enumerate_lattice(const Rack& r, std::size_t cap = kExplicitCap)
{
    return ExplicitLattice::enumerate(RackLattice(r), cap);
}

/// One coatom per conjugacy class: G minus that class.
std::vector<AtomSet> maximal_subracks(const FiniteGroup& g);

/// Meet of the coatoms containing s. Throws PreconditionError if s is not an element.
AtomSet closure(AtomSet s, const Lattice& l);
bool is_closed(AtomSet s, const Lattice& l);

/// Meets of all subsets of coatoms, ordered canonically, with a Boolean-algebra test.
struct IntPoset {
    std::vector<AtomSet> elements;
    std::vector<AtomSet> atoms;  ///< minimal elements above the poset's bottom
    bool boolean = false;
};

IntPoset int_poset(const Lattice& l);

/// All elements u with s ⊆ u ⊆ t, materialized, labels as in l.
ExplicitLattice interval(AtomSet s, AtomSet t, const Lattice& l, int rack_cap = kIntervalRackCap);

/// Is every subset of a an element? Decided by pairwise commuting of atoms.
bool is_boolean_interval(AtomSet a, const Lattice& l);

}  // namespace subrack
