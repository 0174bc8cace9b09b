#pragma once

#include <optional>
#include <vector>

#include "subrack/atom_set.hpp"
#include "subrack/group.hpp"

namespace subrack {

/// G/N with cosets indexed in order of their smallest member (N itself is coset 0).
struct QuotientGroup {
    FiniteGroup group;
    std::vector<AtomSet> cosets;
    std::vector<int> coset_of;  ///< element of G -> element of G/N
};

/**
 * Direct group-theoretic computations on a FiniteGroup.
 *
 * This is the ground truth that every lattice-derived result is compared
 * with. Nothing here looks at subrack lattices. The subgroup list is built
 * lazily by closing cyclic subgroups upward and then cached.
 */
class GroupOracle {
public:
    explicit GroupOracle(FiniteGroup g);

    const FiniteGroup& group() const { return g_; }

    AtomSet center() const;
    AtomSet centralizer(AtomSet s) const;
    int element_order(int a) const;
    AtomSet subgroup_generated(AtomSet s) const;
    bool is_subgroup(AtomSet s) const;
    bool is_normal(AtomSet h) const;
    bool is_abelian(AtomSet s) const;
    bool commute(int a, int b) const { return g_.mul(a, b) == g_.mul(b, a); }

    /// Every subgroup, sorted canonically.
    const std::vector<AtomSet>& subgroups() const;
    std::vector<AtomSet> normal_subgroups() const;
    /// Maximal proper subgroups (empty for the trivial group).
    std::vector<AtomSet> maximal_subgroups() const;
    std::vector<AtomSet> maximal_abelian_subgroups() const;
    std::vector<AtomSet> maximal_normal_abelian_subgroups() const;

    /// Z_0 = 1, Z_1 = Z(G), ... up to and including the first repeated term.
    std::vector<AtomSet> upper_central_series() const;
    AtomSet hypercenter() const;
    /// Length of the upper central series, or nullopt if it stops short of G.
    std::optional<int> nilpotence_class() const;

    /// Requires `n` normal; throws PreconditionError otherwise.
    QuotientGroup quotient(AtomSet n) const;

    /// First Sylow p-subgroup in canonical order. Throws if p is not a prime dividing |G|.
    AtomSet sylow_subgroup(int p) const;
    /// Does a normal subgroup of order |G|/p^k exist? Throws if p is not prime.
    bool has_normal_p_complement(int p) const;

    /// Cycles of the permutation x -> a x a^-1, each as a set of elements.
    std::vector<AtomSet> conjugation_cycles(int a) const;

private:
    FiniteGroup g_;
    mutable std::optional<std::vector<AtomSet>> subgroups_;
};

bool is_prime(int p);
std::vector<int> prime_divisors(int n);
/// Largest power of p dividing n.
int p_part(int n, int p);

}  // namespace subrack
