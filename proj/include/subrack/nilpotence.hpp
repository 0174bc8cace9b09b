#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "subrack/atom_set.hpp"
#include "subrack/group.hpp"
#include "subrack/lattice.hpp"

namespace subrack {

/// images[x] is the image of atom x.
using AtomPermutation = std::vector<int>;

AtomSet apply(const AtomPermutation& pi, AtomSet s);

enum class CheckMode {
    Auto,        ///< Exhaustive when the lattice has at most kExhaustiveCheckCap elements
    Exhaustive,  ///< every element
    Sampled,     ///< pair-generated elements plus random generated elements
};

inline constexpr std::size_t kExhaustiveCheckCap = 20000;
inline constexpr int kRandomSamples = 1000;

/**
 * Does pi induce an automorphism of l? Exhaustive mode checks that every
 * element maps to an element, which suffices for a bijection of atoms.
 * Sampled mode checks join preservation on all atom pairs and on random
 * generated elements.
 */
bool is_lattice_automorphism(const Lattice& l, const AtomPermutation& pi, CheckMode mode = CheckMode::Auto,
                             std::uint64_t seed = 1);

/// Resolves the check mode once so repeated automorphism tests share one enumeration.
class AutomorphismChecker {
public:
    AutomorphismChecker(const Lattice& l, CheckMode mode = CheckMode::Auto, std::uint64_t seed = 1);
    bool operator()(const AtomPermutation& pi) const;
    bool exhaustive() const { return exhaustive_; }

private:
    const Lattice& l_;
    std::uint64_t seed_;
    bool exhaustive_ = false;
    std::vector<AtomSet> elements_;
    std::unordered_set<AtomSet, AtomSetHash> members_;
};

/**
 * The class-translating permutation for b = a z with z in the lattice-located
 * center: x -> x z on K(a), x -> x z^-1 on K(b) (when the classes differ),
 * identity elsewhere. The group only supplies z; the result is checked to be a
 * lattice automorphism. Throws PreconditionError if a^-1 b is not central and
 * ConsistencyError if verification fails.
 */
AtomPermutation central_swap(int a, int b, const Lattice& l, const FiniteGroup& g,
                             CheckMode mode = CheckMode::Auto);

/**
 * For <a> = <b>: g a g^-1 -> g b g^-1 on K(a) and back on K(b).
 * Throws PreconditionError if <a> != <b>, ConsistencyError if verification fails.
 */
AtomPermutation power_swap(int a, int b, const Lattice& l, const FiniteGroup& g,
                           CheckMode mode = CheckMode::Auto);

/// Cosets of a normal subgroup, each checked to be a subrack. Throws PreconditionError if n is not normal.
std::vector<AtomSet> coset_subracks(AtomSet n, const FiniteGroup& g);

/// For every set of cosets (up to 2^12 of them), is their join the union of the cosets meeting
/// the subrack generated by their smallest members?
bool coset_joins_hold(const std::vector<AtomSet>& cosets, const FiniteGroup& g);

struct CentralPartition {
    std::vector<AtomSet> blocks;  ///< sorted by smallest member
    int block_size = 0;
};

/// Result of checking the three partition conditions.
struct PartitionCheck {
    bool equal_sizes = false;          ///< (i) all blocks have the size of the located center
    bool blocks_are_elements = false;  ///< every block is itself a lattice element
    bool joins_are_unions = false;     ///< (ii)
    bool swaps_exist = false;          ///< (iii)
    std::string failure;

    bool ok() const { return equal_sizes && blocks_are_elements && joins_are_unions && swaps_exist; }
};

/// (ii): the join of any set of blocks is a union of blocks.
bool joins_are_block_unions(const Lattice& l, const std::vector<AtomSet>& blocks);

/// A permutation of atoms sending a <-> b, K(a) <-> K(b), fixing everything else,
/// mapping blocks to blocks, and inducing a lattice automorphism; found by search.
std::optional<AtomPermutation> find_block_swap(const Lattice& l, int a, int b, const std::vector<AtomSet>& blocks,
                                               CheckMode mode = CheckMode::Auto);

/// Checks (i)-(iii) plus block membership. When `g` is given, swaps are proposed by central_swap instead of searched for.
PartitionCheck check_central_partition(const Lattice& l, const std::vector<AtomSet>& blocks,
                                       const FiniteGroup* g = nullptr, CheckMode mode = CheckMode::Auto);

/**
 * The partition into cosets of the center, built from the group and then
 * verified against the lattice (the located center must equal Z(G) and all
 * three conditions must hold). Throws ConsistencyError on failure.
 */
CentralPartition build_central_partition(const Lattice& l, const FiniteGroup& g, CheckMode mode = CheckMode::Auto);

/**
 * The lattice of block unions of a parent lattice whose joins of blocks are
 * unions of blocks. Atom i is block i. Joins and closures are computed in the
 * parent.
 */
class BlockLattice : public Lattice {
public:
    BlockLattice(std::shared_ptr<const Lattice> parent, std::vector<AtomSet> blocks);

    const std::vector<AtomSet>& blocks() const { return blocks_; }
    const Lattice& parent() const { return *parent_; }
    AtomSet to_parent(AtomSet s) const;
    /// Throws ConsistencyError if s is not a union of blocks.
    AtomSet to_blocks(AtomSet s) const;

    int atom_count() const override { return static_cast<int>(blocks_.size()); }
    AtomSet generate(AtomSet s) const override;
    AtomSet extend(AtomSet closed, AtomSet extra) const override;
    const std::vector<AtomSet>& coatoms() const override;

private:
    std::shared_ptr<const Lattice> parent_;
    std::vector<AtomSet> blocks_;
    std::vector<int> block_of_;
    mutable std::optional<std::vector<AtomSet>> coatoms_;
};

/// J(C): the nonempty block-union elements, as sets of block indices.
struct QuotientPoset {
    std::vector<AtomSet> elements;
    std::vector<AtomSet> blocks;  ///< block i <-> quotient atom i
};

QuotientPoset quotient_poset(const CentralPartition& c, const Lattice& l);

/// Does J(C) equal R(G/Z) minus the empty set under block i <-> coset i?
bool quotient_poset_matches_oracle(const QuotientPoset& q, const FiniteGroup& g);

struct NilpotenceStep {
    int atoms = 0;           ///< atoms of the current lattice
    int center = 0;          ///< located center size
    int blocks = 0;          ///< blocks of the central partition
    std::size_t poset = 0;   ///< size of J(C)
};

struct NilpotenceResult {
    std::optional<int> nilpotence_class;  ///< nullopt: not nilpotent
    std::vector<NilpotenceStep> trace;
};

/**
 * Iterates central partition + quotient poset until the poset is a single
 * element (class = number of steps) or the located center is trivial on a
 * nontrivial lattice (not nilpotent).
 */
NilpotenceResult nilpotence_class_from_lattice(std::shared_ptr<const Lattice> l, const FiniteGroup& g,
                                               CheckMode mode = CheckMode::Auto);

struct HypercenterQuotient {
    std::shared_ptr<const Lattice> lattice;  ///< isomorphic to R(G/Z_inf)
    FiniteGroup group;                       ///< witness G/Z_inf, element i <-> atom i
    std::vector<AtomSet> blocks;             ///< atom i as a set of original atoms
    int steps = 0;
};

HypercenterQuotient hypercenter_quotient(std::shared_ptr<const Lattice> l, const FiniteGroup& g,
                                         CheckMode mode = CheckMode::Auto);

/// Witness-free variant for small lattices: at each step the first partition (in search order)
/// satisfying (i)-(iii) is used.
std::optional<int> nilpotence_class_by_search(std::shared_ptr<const Lattice> l);

/// Exhaustive survey of all partitions satisfying (i)-(iii), for small lattices.
struct PartitionSurvey {
    std::size_t partitions = 0;         ///< equal-size partitions examined
    std::size_t valid = 0;              ///< satisfying (i)-(iii)
    bool all_isomorphic = true;         ///< every valid J(C) isomorphic to the center-coset one
    bool same_answer = true;            ///< every valid partition leads to the class of the center-coset one
    std::size_t weak_premise_breaks = 0;  ///< (i), (ii), element blocks incl. the center, no (iii), non-isomorphic J(C)
};

PartitionSurvey survey_central_partitions(std::shared_ptr<const Lattice> l, const FiniteGroup& g);

/// Are two lattices on the same number of atoms isomorphic via some atom permutation?
bool atom_isomorphic(const std::vector<AtomSet>& a, const std::vector<AtomSet>& b, int atoms);

}  // namespace subrack
