#pragma once

#include <doctest.h>

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "subrack/atom_set.hpp"
#include "subrack/catalog.hpp"
#include "subrack/lattice.hpp"
#include "subrack/rack.hpp"

namespace testing {

using subrack::AtomSet;

/// Letters name atoms: "ace" is {0, 2, 4}.
inline AtomSet letters(std::string_view s)
{
    AtomSet out;
    for (char c : s)
        out.insert(c - 'a');
    return out;
}

inline std::vector<AtomSet> sorted(std::vector<AtomSet> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

inline subrack::RackLattice rack_lattice(std::string_view name)
{
    return subrack::RackLattice(subrack::conjugation_quandle(subrack::catalog_group(name)));
}

/// Catalog names with order in [lo, hi].
inline std::vector<std::string> catalog_names(int lo, int hi)
{
    std::vector<std::string> out;
    for (const auto& e : subrack::catalog_entries())
        if (e.order >= lo && e.order <= hi)
            out.push_back(e.name);
    return out;
}

/// Brute-force subrack filter over all 2^n subsets; the independent oracle for enumeration.
inline std::vector<AtomSet> brute_force_subracks(const subrack::Rack& r)
{
    std::vector<AtomSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << r.size()); ++m)
        if (subrack::is_subrack(AtomSet(m), r))
            out.push_back(AtomSet(m));
    return out;
}

}  // namespace testing

namespace doctest {

template <>
struct StringMaker<subrack::AtomSet> {
    static String convert(const subrack::AtomSet& s)
    {
        std::string out = "{";
        for (int x : s)
            out += (out.size() > 1 ? "," : "") + std::to_string(x);
        return (out + "}").c_str();
    }
};

}  // namespace doctest
