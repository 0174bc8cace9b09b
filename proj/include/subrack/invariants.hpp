#pragma once

#include <map>
#include <vector>

#include "subrack/atom_set.hpp"
#include "subrack/lattice.hpp"

namespace subrack {

// Everything in this header reads the lattice through the Lattice interface
// only; atoms are opaque labels.

/// class size -> number of classes of that size
using ClassSizeFrequency = std::map<int, int>;

/// Read off the coatoms: each coatom misses exactly one class.
ClassSizeFrequency class_size_frequency(const Lattice& l);

/// The classes themselves, as closures of single atoms, sorted by smallest member.
std::vector<AtomSet> lattice_classes(const Lattice& l);

AtomSet center_atoms(const Lattice& l);
AtomSet centralizer_atoms(AtomSet s, const Lattice& l);

/// Maximal cliques of the commuting relation, each a lattice element.
std::vector<AtomSet> maximal_commuting_cliques(const Lattice& l);

/// A(G) or N(G). For an abelian group the family is {top} and `abelian_group` is set.
struct AbelianFamily {
    bool abelian_group = false;
    std::vector<AtomSet> sets;
};

/// Maximal elements with a Boolean lower interval.
AbelianFamily maximal_abelian_A(const Lattice& l);
/// For each member of A(G), the union of the classes inside it; inclusion-maximal ones kept.
AbelianFamily maximal_normal_abelian_N(const Lattice& l);

struct MSet {
    std::vector<AtomSet> members;
    /// Candidates passing conditions 1-3 whose interval was too large for condition 4.
    std::vector<AtomSet> undecided;
};

/**
 * Elements S with
 *   1. S not closed,
 *   2. every element strictly above S contains closure(S),
 *   3. every element above closure(S) is closed,
 *   4. Int([bottom, closure(S)]) is not Boolean.
 * Conditions 2 and 3 are tested on single-atom extensions, which is
 * equivalent because every element above S is a join of S with atoms.
 */
MSet m_set(const Lattice& l, std::size_t cap = kExplicitCap, int interval_cap = kIntervalRackCap);

/// Checks conditions 1-4 for one element. Returns nullopt when condition 4 hits the cap.
std::optional<bool> in_m_set(AtomSet s, const Lattice& l, int interval_cap = kIntervalRackCap);

bool has_noncentral_abelian_normal(const Lattice& l);

struct InvariantReport {
    ClassSizeFrequency w;
    AtomSet center;
    AbelianFamily a;
    AbelianFamily n;
    MSet m;
    bool noncentral_abelian_normal = false;
};

InvariantReport invariant_report(const Lattice& l, std::size_t cap = kExplicitCap,
                                 int interval_cap = kIntervalRackCap);

}  // namespace subrack
