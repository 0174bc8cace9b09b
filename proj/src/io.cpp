#include "subrack/io.hpp"

#include <fstream>
#include <sstream>

#include "subrack/catalog.hpp"
#include "subrack/error.hpp"

namespace subrack {

namespace {

constexpr std::string_view kCatalogPrefix = "catalog:";

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

FiniteGroup group_from_json(const Json& j)
{
    try {
        const std::string name = j.value("name", std::string("group"));
        if (j.contains("table")) {
            const auto table = field(j, "table").get<std::vector<std::vector<int>>>();
            if (j.contains("order") && field(j, "order").get<int>() != static_cast<int>(table.size()))
                throw InputError("'order' does not match the table size");
            return FiniteGroup::from_table(name, table);
        }
        if (j.contains("generators")) {
            const int degree = field(j, "degree").get<int>();
            if (degree < 1)
                throw InputError("'degree' must be positive");
            auto gens = field(j, "generators").get<std::vector<Permutation>>();
            return group_from_permutations(name, degree, gens);
        }
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed group JSON: ") + e.what());
    }
    throw InputError("group JSON needs either 'table' or 'generators'");
}

FiniteGroup build_group(const std::string& source)
{
    if (source.rfind(kCatalogPrefix, 0) == 0)
        return catalog_group(source.substr(kCatalogPrefix.size()));
    std::ifstream in(source);
    if (!in)
        throw InputError("cannot open group file '" + source + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw InputError("'" + source + "' is not valid JSON: " + e.what());
    }
    return group_from_json(j);
}

Json group_to_json(const FiniteGroup& g)
{
    std::vector<std::vector<int>> table(g.order(), std::vector<int>(g.order()));
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            table[a][b] = g.mul(a, b);
    return Json{{"name", g.name()}, {"order", g.order()}, {"table", table}};
}

std::string atom_label(int atom, int atom_count)
{
    if (atom_count <= 26)
        return std::string(1, static_cast<char>('a' + atom));
    return std::to_string(atom);
}

int parse_atom(const std::string& label, int atom_count)
{
    for (int x = 0; x < atom_count; ++x)
        if (atom_label(x, atom_count) == label)
            return x;
    throw InputError("unknown atom '" + label + "'");
}

std::string format_set(AtomSet s, int atom_count)
{
    std::string out = "{";
    bool first = true;
    for (int x : s) {
        if (!first)
            out += ",";
        out += atom_label(x, atom_count);
        first = false;
    }
    return out + "}";
}

std::string format_partition(const AtomPartition& p, int atom_count)
{
    std::string out;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        const bool m = i < p.marked.size() && p.marked[i];
        if (i)
            out += " ";
        out += m ? "[[" : "[";
        bool first = true;
        for (int x : p.blocks[i]) {
            if (!first)
                out += ",";
            out += atom_label(x, atom_count);
            first = false;
        }
        out += m ? "]]" : "]";
    }
    return out;
}

Json set_to_json(AtomSet s) { return s.to_vector(); }

AtomSet set_from_json(const Json& j)
{
    AtomSet s;
    for (int x : j.get<std::vector<int>>()) {
        if (x < 0 || x >= kMaxAtoms)
            throw InputError("atom index out of range");
        s.insert(x);
    }
    return s;
}

LatticeExport lattice_export(const ExplicitLattice& l)
{
    return {l.atom_count(), l.elements(), l.hasse()};
}

Json to_json(const LatticeExport& e)
{
    Json elems = Json::array();
    for (AtomSet s : e.elements)
        elems.push_back(set_to_json(s));
    Json hasse = Json::array();
    for (auto [lo, hi] : e.hasse)
        hasse.push_back({lo, hi});
    return Json{{"atoms", e.atoms}, {"elements", elems}, {"hasse", hasse}};
}

Json lattice_to_json(const ExplicitLattice& l) { return to_json(lattice_export(l)); }

LatticeExport lattice_export_from_json(const Json& j)
{
    try {
        LatticeExport e;
        e.atoms = field(j, "atoms").get<int>();
        for (const Json& s : field(j, "elements"))
            e.elements.push_back(set_from_json(s));
        for (const Json& h : field(j, "hasse")) {
            auto pair = h.get<std::vector<int>>();
            if (pair.size() != 2)
                throw InputError("hasse entries are [lower, upper] pairs");
            e.hasse.emplace_back(pair[0], pair[1]);
        }
        return e;
    } catch (const Json::exception& ex) {
        throw InputError(std::string("malformed lattice JSON: ") + ex.what());
    }
}

std::string lattice_to_dot(const ExplicitLattice& l, const std::string& name)
{
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < l.size(); ++i)
        out << "  n" << i << " [label=\"" << format_set(l.elements()[i], l.atom_count()) << "\"];\n";
    for (auto [lo, hi] : l.hasse())
        out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

namespace {

Json sets_to_json(const std::vector<AtomSet>& v)
{
    Json a = Json::array();
    for (AtomSet s : v)
        a.push_back(set_to_json(s));
    return a;
}

std::vector<AtomSet> sets_from_json(const Json& j)
{
    std::vector<AtomSet> v;
    for (const Json& s : j)
        v.push_back(set_from_json(s));
    return v;
}

}  // namespace

Json invariant_report_to_json(const InvariantReport& r)
{
    Json w = Json::object();
    for (auto [size, count] : r.w)
        w[std::to_string(size)] = count;
    Json j{{"w", w},
           {"center", set_to_json(r.center)},
           {"A", sets_to_json(r.a.sets)},
           {"N", sets_to_json(r.n.sets)},
           {"M", sets_to_json(r.m.members)},
           {"noncentral_abelian_normal", r.noncentral_abelian_normal}};
    if (!r.m.undecided.empty())
        j["M_undecided"] = sets_to_json(r.m.undecided);
    return j;
}

InvariantReport invariant_report_from_json(const Json& j)
{
    try {
        InvariantReport r;
        for (auto& [k, v] : field(j, "w").items())
            r.w[std::stoi(k)] = v.get<int>();
        r.center = set_from_json(field(j, "center"));
        r.a.sets = sets_from_json(field(j, "A"));
        r.n.sets = sets_from_json(field(j, "N"));
        r.m.members = sets_from_json(field(j, "M"));
        if (j.contains("M_undecided"))
            r.m.undecided = sets_from_json(j.at("M_undecided"));
        r.noncentral_abelian_normal = field(j, "noncentral_abelian_normal").get<bool>();
        // An abelian group reports its whole element set as the only member of A and N.
        r.a.abelian_group = r.n.abelian_group = r.a.sets.size() == 1 && r.a.sets.front() == r.center;
        return r;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed invariant report: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw InputError("malformed invariant report: non-numeric class size");
    }
}

Json cycle_form_to_json(int atom, const AtomPartition& p)
{
    Json marked = Json::array();
    for (bool m : p.marked)
        marked.push_back(m);
    return Json{{"atom", atom}, {"blocks", sets_to_json(p.blocks)}, {"marked", marked}};
}

AtomPartition cycle_form_from_json(const Json& j)
{
    try {
        AtomPartition p;
        p.blocks = sets_from_json(field(j, "blocks"));
        for (const Json& m : field(j, "marked"))
            p.marked.push_back(m.get<bool>());
        if (p.marked.size() != p.blocks.size())
            throw InputError("'marked' and 'blocks' differ in length");
        return p;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed cycle form: ") + e.what());
    }
}

}  // namespace subrack
