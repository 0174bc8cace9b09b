#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subrack/atom_set.hpp"

namespace subrack {

/// Images of 0..d-1 under a permutation of a d-point set.
using Permutation = std::vector<int>;

/**
 * A finite group given by its Cayley table over element indices 0..n-1.
 *
 * Index 0 is always the identity. The table is validated on construction
 * (Latin square, identity placement, associativity) and the group is
 * immutable afterwards.
 */
class FiniteGroup {
public:
    /// Orders up to this bound get an exhaustive associativity check by default.
    static constexpr int kDefaultFullAssociativityCap = 64;

    FiniteGroup() = default;

    /**
     * Validates and wraps a Cayley table; table[i][j] is the index of i*j.
     * Associativity is checked on all triples when order <= full_check_cap,
     * otherwise on 10*n^2 random triples drawn from `seed`.
     */
    static FiniteGroup from_table(std::string name, const std::vector<std::vector<int>>& table,
                                  int full_check_cap = kDefaultFullAssociativityCap,
                                  std::uint64_t seed = 0x5eed);

    int order() const { return n_; }
    const std::string& name() const { return name_; }

    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    /// a b a^-1
    int conj(int a, int b) const { return mul(mul(a, b), inverse_[a]); }
    /// a^k for k >= 0
    int power(int a, int k) const;

    AtomSet elements() const { return AtomSet::full(n_); }
    std::vector<std::vector<int>> table() const;

private:
    std::string name_;
    int n_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
};

/// Orbits of the conjugation action, sorted by smallest member (identity class first).
struct ConjugacyClasses {
    std::vector<AtomSet> classes;
    std::vector<int> class_of;

    int count() const { return static_cast<int>(classes.size()); }
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

/**
 * Closes `generators` (each a permutation of `degree` points) under composition.
 * Elements are ordered identity first, then by lexicographic image sequence.
 * Composition is right to left: (s*t)(x) = s(t(x)).
 */
FiniteGroup group_from_permutations(std::string name, int degree,
                                    const std::vector<Permutation>& generators,
                                    int max_order = 5040);

/// Group whose elements are exactly `elements`, in the given order (identity first).
FiniteGroup group_from_permutation_list(std::string name, const std::vector<Permutation>& elements);

/// Parses cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "()" is the identity.
Permutation parse_cycles(const std::string& cycles, int degree);

}  // namespace subrack
