#include "subrack/invariants.hpp"

#include <algorithm>
#include <unordered_map>

namespace subrack {

ClassSizeFrequency class_size_frequency(const Lattice& l)
{
    ClassSizeFrequency w;
    for (AtomSet c : l.coatoms())
        ++w[l.atom_count() - c.size()];
    return w;
}

std::vector<AtomSet> lattice_classes(const Lattice& l)
{
    std::vector<AtomSet> out;
    AtomSet seen;
    for (int x : l.top()) {
        if (seen.contains(x))
            continue;
        AtomSet k = l.coatom_meet(AtomSet::single(x));
        seen |= k;
        out.push_back(k);
    }
    return out;
}

AtomSet centralizer_atoms(AtomSet s, const Lattice& l)
{
    AtomSet c;
    for (int x : l.top()) {
        bool all = true;
        for (int y : s)
            if (!l.atoms_commute(x, y)) {
                all = false;
                break;
            }
        if (all)
            c.insert(x);
    }
    return c;
}

AtomSet center_atoms(const Lattice& l) { return centralizer_atoms(l.top(), l); }

namespace {

struct BronKerbosch {
    std::vector<AtomSet> adj;
    std::vector<AtomSet> cliques;

    void run(AtomSet r, AtomSet p, AtomSet x)
    {
        if (p.empty() && x.empty()) {
            cliques.push_back(r);
            return;
        }
        int pivot = -1, best = -1;
        for (int u : (p | x)) {
            int k = (p & adj[u]).size();
            if (k > best) {
                best = k;
                pivot = u;
            }
        }
        for (int v : (p - adj[pivot])) {
            run(r | AtomSet::single(v), p & adj[v], x & adj[v]);
            p.erase(v);
            x.insert(v);
        }
    }
};

std::vector<AtomSet> maximal_only(std::vector<AtomSet> sets)
{
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<AtomSet> out;
    for (AtomSet s : sets) {
        bool maximal = true;
        for (AtomSet t : sets)
            if (s.proper_subset_of(t)) {
                maximal = false;
                break;
            }
        if (maximal)
            out.push_back(s);
    }
    return out;
}

}  // namespace

std::vector<AtomSet> maximal_commuting_cliques(const Lattice& l)
{
    const int n = l.atom_count();
    BronKerbosch bk;
    bk.adj.assign(n, AtomSet{});
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (l.atoms_commute(x, y)) {
                bk.adj[x].insert(y);
                bk.adj[y].insert(x);
            }
    bk.run(AtomSet{}, l.top(), AtomSet{});
    for (AtomSet c : bk.cliques)
        if (!l.is_element(c))
            throw ConsistencyError("maximal commuting clique is not a lattice element");
    std::sort(bk.cliques.begin(), bk.cliques.end());
    return bk.cliques;
}

AbelianFamily maximal_abelian_A(const Lattice& l)
{
    if (center_atoms(l) == l.top())
        return {true, {l.top()}};
    return {false, maximal_commuting_cliques(l)};
}

AbelianFamily maximal_normal_abelian_N(const Lattice& l)
{
    AbelianFamily a = maximal_abelian_A(l);
    if (a.abelian_group)
        return a;
    const auto classes = lattice_classes(l);
    std::vector<AtomSet> cores;
    for (AtomSet m : a.sets) {
        AtomSet core;
        for (AtomSet k : classes)
            if (k.subset_of(m))
                core |= k;
        cores.push_back(core);
    }
    return {false, maximal_only(std::move(cores))};
}

namespace {

/// Conditions 3 and 4, which depend on closure(S) only.
std::optional<bool> closure_conditions(AtomSet c, const Lattice& l, int interval_cap)
{
    for (int x : l.top() - c) {
        AtomSet k = l.coatom_meet(AtomSet::single(x));
        if (!k.subset_of(l.extend(c, AtomSet::single(x))))
            return false;
    }
    // The whole lattice already knows its coatoms; no interval enumeration needed.
    if (c == l.top())
        return !int_poset(l).boolean;
    try {
        IntervalView below(l, c, interval_cap);
        return !int_poset(below).boolean;
    } catch (const CapExceeded&) {
        return std::nullopt;
    }
}

bool extension_condition(AtomSet s, AtomSet c, const Lattice& l)
{
    for (int x : l.top() - s)
        if (!c.subset_of(l.extend(s, AtomSet::single(x))))
            return false;
    return true;
}

}  // namespace

std::optional<bool> in_m_set(AtomSet s, const Lattice& l, int interval_cap)
{
    const AtomSet c = l.coatom_meet(s);
    if (c == s || !extension_condition(s, c, l))
        return false;
    return closure_conditions(c, l, interval_cap);
}

MSet m_set(const Lattice& l, std::size_t cap, int interval_cap)
{
    MSet out;
    std::unordered_map<AtomSet, std::optional<bool>, AtomSetHash> by_closure;
    for_each_element(l, [&](AtomSet s) {
        const AtomSet c = l.coatom_meet(s);
        if (c == s || !extension_condition(s, c, l))
            return;
        auto it = by_closure.find(c);
        if (it == by_closure.end())
            it = by_closure.emplace(c, closure_conditions(c, l, interval_cap)).first;
        if (!it->second)
            out.undecided.push_back(s);
        else if (*it->second)
            out.members.push_back(s);
    }, cap);
    std::sort(out.members.begin(), out.members.end());
    std::sort(out.undecided.begin(), out.undecided.end());
    return out;
}

bool has_noncentral_abelian_normal(const Lattice& l)
{
    const AtomSet z = center_atoms(l);
    for (AtomSet n : maximal_normal_abelian_N(l).sets)
        if (z.proper_subset_of(n))
            return true;
    return false;
}

InvariantReport invariant_report(const Lattice& l, std::size_t cap, int interval_cap)
{
    InvariantReport r;
    r.w = class_size_frequency(l);
    r.center = center_atoms(l);
    r.a = maximal_abelian_A(l);
    r.n = maximal_normal_abelian_N(l);
    r.m = m_set(l, cap, interval_cap);
    r.noncentral_abelian_normal = has_noncentral_abelian_normal(l);
    return r;
}

}  // namespace subrack
