#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "subrack/group.hpp"

namespace subrack {

struct CatalogEntry {
    std::string name;
    int order;
    std::string description;  ///< also documents the element ordering
};

/// All catalog groups, ordered by (order, listing position).
const std::vector<CatalogEntry>& catalog_entries();

/// Builds a catalog group by name ("S3", "Z2xZ4", "M4(16)", ...). Throws InputError if unknown.
FiniteGroup catalog_group(std::string_view name);

// Building blocks, exposed for tests and ad-hoc construction.
FiniteGroup cyclic_group(int n);
/// Order 2n; index k is r^k, index n+k is s r^k.
FiniteGroup dihedral_group(int n, std::string name);
/// Order 4n; index k + 2n e is a^k x^e with x^2 = a^n, x a x^-1 = a^-1.
FiniteGroup dicyclic_group(int n, std::string name);
/// Pairs (g, h) at index g*|H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::string name);

}  // namespace subrack
