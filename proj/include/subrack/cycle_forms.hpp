#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "subrack/atom_set.hpp"
#include "subrack/group.hpp"
#include "subrack/lattice.hpp"
#include "subrack/nilpotence.hpp"

namespace subrack {

// Cycle forms of inner automorphisms, read off a centerless subrack lattice.
// Everything except the *_oracle helpers and the witness-proposed swaps uses
// Lattice queries only.

/// A partition of the atoms with a per-block "cycle part" mark.
struct AtomPartition {
    std::vector<AtomSet> blocks;  ///< sorted by smallest member
    std::vector<bool> marked;

    bool operator==(const AtomPartition& o) const { return blocks == o.blocks; }
};

/// join(s, t) ∩ K(t), where K(t) is the union of the classes meeting t.
AtomSet b_set(AtomSet s, AtomSet t, const Lattice& l);

/// Throws PreconditionError unless the located center is the single identity atom (or the lattice has one atom).
void require_centerless(const Lattice& l);

/// The unique atom forming a class on its own in a centerless lattice.
int identity_atom(const Lattice& l);

/// Atoms sharing a block lie in exactly the same sets B(a, g).
AtomPartition pseudo_cycle_form(int a, const Lattice& l);

/// Pseudo cycle forms of every atom, computed in parallel.
std::vector<AtomPartition> all_pseudo_cycle_forms(const Lattice& l);

/// p refines q: every block of q is a union of blocks of p.
bool partition_leq(const AtomPartition& p, const AtomPartition& q);

/// {x : [x'] <= [a']}, given all pseudo forms.
AtomSet associated_abelian(int a, const std::vector<AtomPartition>& pseudo);
AtomSet associated_abelian(int a, const Lattice& l);

/// Splits blocks by the fixed points of commuting atoms until stable, then re-marks.
AtomPartition refine_to_cycle_form(int a, const Lattice& l, const AtomPartition& pseudo);
AtomPartition refine_to_cycle_form(int a, const Lattice& l);

std::vector<AtomPartition> all_cycle_forms(const Lattice& l, const std::vector<AtomPartition>& pseudo);

/// One [a]-block P that is a union of [x]-blocks.
struct CycleLengthVerdict {
    AtomSet part;
    int length = 0;  ///< common length of the oracle x-cycles inside P (0 if they differ)
    bool holds = false;
};

/// Oracle check of the equal-cycle-length property for x in A(a); atom i is element i of g.
std::vector<CycleLengthVerdict> equal_cycle_length_check(int x, int a, const Lattice& l, const FiniteGroup& g);
std::vector<CycleLengthVerdict> equal_cycle_length_check(int x, int a, const Lattice& l, const FiniteGroup& g,
                                                         const std::vector<AtomPartition>& pseudo);

struct CycleFormCondition {
    bool holds = true;
    std::vector<std::pair<int, int>> tied_pairs;      ///< a < b with [a] = [b]
    std::optional<std::pair<int, int>> failing_pair;  ///< first pair without a swap
};

/**
 * For every pair with equal cycle forms, look for a permutation swapping a and b
 * and K(a) and K(b), fixing the rest, that induces a lattice automorphism. The
 * witness proposes g a g^-1 -> g b g^-1 first; otherwise a bounded search runs.
 */
CycleFormCondition cycle_form_condition(const Lattice& l, const FiniteGroup& g, CheckMode mode = CheckMode::Auto);

/// atom -> set of primes (the identity atom is absent).
using PrimeAssignment = std::map<int, std::vector<int>>;

/**
 * Processes the distinct associated abelian sets by increasing size. An
 * abelian group of order n = prod p^e has prod_{p in T} (p^e - 1) elements
 * whose order has prime support T; those counts are handed out to the atoms
 * of the set not yet assigned, largest supports first to atoms x with
 * A(x) equal to the set, then in atom order. Throws ConsistencyError on a
 * contradiction.
 */
PrimeAssignment theta_assignment(const Lattice& l);

/**
 * Atoms of a Sylow p-subrack, identity included. Direct when the atoms with
 * theta = {p} plus the identity number p^k; otherwise depth-first descent
 * through M-set members whose size is a multiple of p^k.
 */
AtomSet locate_sylow_subrack(int p, const PrimeAssignment& theta, const Lattice& l);

/// Conjugacy classes of the subrack t, read from the interval below t (sets of parent atoms).
std::vector<AtomSet> interval_classes(AtomSet t, const Lattice& l);

enum class PNilpotence { Yes, No, ConditionNotMet };

struct PNilpotenceReport {
    PNilpotence verdict = PNilpotence::Yes;
    int quotient_order = 0;  ///< |G / Z_inf|
    AtomSet sylow;           ///< in quotient atoms; empty when p does not divide the quotient order
    PrimeAssignment theta;
};

/**
 * Hypercenter quotient, cycle form condition, theta, Sylow subrack, then:
 * a normal p-complement exists iff for every x in P the P-class of x is the
 * quotient class of x intersected with P.
 */
PNilpotenceReport p_nilpotent_from_lattice(int p, std::shared_ptr<const Lattice> l, const FiniteGroup& g,
                                           CheckMode mode = CheckMode::Auto);

}  // namespace subrack
