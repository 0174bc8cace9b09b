#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "subrack/atom_set.hpp"
#include "subrack/cycle_forms.hpp"
#include "subrack/group.hpp"
#include "subrack/invariants.hpp"
#include "subrack/lattice.hpp"

namespace subrack {

using Json = nlohmann::json;

/**
 * "catalog:<name>" or a path to a JSON file holding either
 *   {"name", "order", "table"}         (Cayley table, identity at index 0), or
 *   {"name", "degree", "generators"}   (each generator lists the images of 0..d-1).
 * Throws InputError on anything malformed.
 */
FiniteGroup build_group(const std::string& source);
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);

/// Letters a..z when there are at most 26 atoms, decimal indices otherwise.
std::string atom_label(int atom, int atom_count);
/// "{a,b}"; the empty set is "{}".
std::string format_set(AtomSet s, int atom_count);
/// Bracket notation: "[[a]] [[b]] [[c,d]] [e,f]", double brackets on marked blocks.
std::string format_partition(const AtomPartition& p, int atom_count);
/// Inverse of atom_label. Throws InputError on an unknown label.
int parse_atom(const std::string& label, int atom_count);

/// {"atoms": n, "elements": [[...]], "hasse": [[lo, hi]]}, elements in canonical order.
Json lattice_to_json(const ExplicitLattice& l);
/// The Hasse diagram, one node per element labeled by its atom set, bottom at the bottom.
std::string lattice_to_dot(const ExplicitLattice& l, const std::string& name = "subracks");

/// Parsed form of the lattice export.
struct LatticeExport {
    int atoms = 0;
    std::vector<AtomSet> elements;
    std::vector<std::pair<int, int>> hasse;

    bool operator==(const LatticeExport&) const = default;
};
LatticeExport lattice_export(const ExplicitLattice& l);
LatticeExport lattice_export_from_json(const Json& j);
Json to_json(const LatticeExport& e);

/// {"w", "center", "A", "N", "M", "noncentral_abelian_normal"}; "M_undecided" is added only when nonempty.
Json invariant_report_to_json(const InvariantReport& r);
InvariantReport invariant_report_from_json(const Json& j);

/// {"atom": i, "blocks": [[...]], "marked": [bool...]}
Json cycle_form_to_json(int atom, const AtomPartition& p);
AtomPartition cycle_form_from_json(const Json& j);

Json set_to_json(AtomSet s);
AtomSet set_from_json(const Json& j);

}  // namespace subrack
