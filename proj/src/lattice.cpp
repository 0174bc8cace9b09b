#include "subrack/lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace subrack {

AtomSet Lattice::coatom_meet(AtomSet s) const
{
    AtomSet m = top();
    for (AtomSet c : coatoms())
        if (s.subset_of(c))
            m &= c;
    return m;
}

bool Lattice::atoms_commute(int x, int y) const
{
    if (x == y)
        return true;
    const AtomSet pair = AtomSet::single(x) | AtomSet::single(y);
    return generate(pair) == pair;
}

namespace {

struct CloseByOne {
    const Lattice& l;
    const std::function<void(AtomSet)>& visit;
    std::size_t cap;
    AtomSet universe;
    std::size_t seen = 0;

    void run(AtomSet s, int start)
    {
        if (++seen > cap)
            throw CapExceeded("lattice has more than " + std::to_string(cap) + " elements");
        visit(s);
        for (int j : (universe - s)) {
            if (j < start)
                continue;
            const AtomSet t = l.extend(s, AtomSet::single(j));
            // canonical iff closing did not add anything below j
            if ((t - s).below(j).empty())
                run(t, j + 1);
        }
    }
};

}  // namespace

void for_each_element(const Lattice& l, const std::function<void(AtomSet)>& visit, std::size_t cap, AtomSet from)
{
    CloseByOne cbo{l, visit, cap, l.top()};
    cbo.run(l.generate(from), 0);
}

std::size_t count_elements(const Lattice& l, std::size_t cap)
{
    std::size_t n = 0;
    for_each_element(l, [&](AtomSet) { ++n; }, cap);
    return n;
}

std::vector<AtomSet> coatoms_by_enumeration(const Lattice& l, std::size_t cap)
{
    std::vector<AtomSet> proper;
    const AtomSet top = l.top();
    for_each_element(l, [&](AtomSet s) {
        if (s != top)
            proper.push_back(s);
    }, cap);
    std::sort(proper.begin(), proper.end(), [](AtomSet a, AtomSet b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    // Anything contained in a larger proper element is contained in a coatom seen earlier.
    std::vector<AtomSet> found;
    for (AtomSet s : proper) {
        bool covered = false;
        for (AtomSet c : found)
            if (s.subset_of(c)) {
                covered = true;
                break;
            }
        if (!covered)
            found.push_back(s);
    }
    std::sort(found.begin(), found.end());
    return found;
}

const std::vector<AtomSet>& RackLattice::coatoms() const
{
    if (coatoms_)
        return *coatoms_;
    std::vector<AtomSet> c;
    if (rack_.backing() == Rack::Backing::Conjugation) {
        for (AtomSet orbit : rack_.orbits())
            c.push_back(orbit.complement(rack_.size()));
        std::sort(c.begin(), c.end());
    } else {
        if (rack_.size() > kIntervalRackCap)
            throw CapExceeded("abstract rack of size " + std::to_string(rack_.size()) +
                              " is too large for coatom enumeration");
        c = coatoms_by_enumeration(*this);
    }
    coatoms_ = std::move(c);
    return *coatoms_;
}

IntervalView::IntervalView(const Lattice& parent, AtomSet t, int rack_cap)
    : parent_(parent), t_(t), rack_cap_(rack_cap)
{
}

const std::vector<AtomSet>& IntervalView::coatoms() const
{
    if (coatoms_)
        return *coatoms_;
    if (t_.size() > rack_cap_)
        throw CapExceeded("interval rack of size " + std::to_string(t_.size()) + " exceeds cap " +
                          std::to_string(rack_cap_));
    coatoms_ = coatoms_by_enumeration(*this);
    return *coatoms_;
}

ExplicitLattice ExplicitLattice::enumerate(const Lattice& l, std::size_t cap, AtomSet from)
{
    ExplicitLattice e;
    e.atoms_ = l.atom_count();
    for_each_element(l, [&](AtomSet s) { e.elements_.push_back(s); }, cap, from);
    std::sort(e.elements_.begin(), e.elements_.end());
    e.index_.reserve(e.elements_.size() * 2);
    for (std::size_t i = 0; i < e.elements_.size(); ++i)
        e.index_.emplace(e.elements_[i], static_cast<int>(i));

    // Every upper cover of u is extend(u, {x}) for some atom x outside u.
    const AtomSet top = l.top();
    const int top_index = static_cast<int>(e.elements_.size()) - 1;
    std::vector<AtomSet> candidates;
    for (std::size_t i = 0; i < e.elements_.size(); ++i) {
        const AtomSet u = e.elements_[i];
        candidates.clear();
        for (int x : top - u) {
            AtomSet t = l.extend(u, AtomSet::single(x));
            if (std::find(candidates.begin(), candidates.end(), t) == candidates.end())
                candidates.push_back(t);
        }
        for (AtomSet t : candidates) {
            bool minimal = true;
            for (AtomSet o : candidates)
                if (o.proper_subset_of(t)) {
                    minimal = false;
                    break;
                }
            if (!minimal)
                continue;
            const int j = e.index_of(t);
            if (j < 0)
                throw ConsistencyError("cover candidate missing from enumeration");
            e.hasse_.emplace_back(static_cast<int>(i), j);
            if (j == top_index)
                e.coatoms_.push_back(u);
        }
    }
    std::sort(e.hasse_.begin(), e.hasse_.end());
    std::sort(e.coatoms_.begin(), e.coatoms_.end());
    e.lower_.resize(e.elements_.size());
    for (auto [lo, hi] : e.hasse_)
        e.lower_[hi].push_back(lo);
    return e;
}

int ExplicitLattice::index_of(AtomSet s) const
{
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

AtomSet ExplicitLattice::generate(AtomSet s) const
{
    if (!s.subset_of(top()))
        throw PreconditionError("set is not below the lattice maximum");
    if (int i = index_of(s); i >= 0)
        return s;
    // Walk down from the top: while the current element is not the least one
    // containing s, some lower cover still contains s.
    int cur = static_cast<int>(elements_.size()) - 1;
    for (bool moved = true; moved;) {
        moved = false;
        for (int lo : lower_[cur])
            if (s.subset_of(elements_[lo])) {
                cur = lo;
                moved = true;
                break;
            }
    }
    return elements_[cur];
}

std::vector<AtomSet> maximal_subracks(const FiniteGroup& g)
{
    std::vector<AtomSet> out;
    for (AtomSet c : conjugacy_classes(g).classes)
        out.push_back(c.complement(g.order()));
    std::sort(out.begin(), out.end());
    return out;
}

AtomSet closure(AtomSet s, const Lattice& l)
{
    if (!l.is_element(s))
        throw PreconditionError("closure: argument is not a lattice element");
    return l.coatom_meet(s);
}

bool is_closed(AtomSet s, const Lattice& l) { return closure(s, l) == s; }

IntPoset int_poset(const Lattice& l)
{
    std::unordered_set<AtomSet, AtomSetHash> seen{l.top()};
    std::vector<AtomSet> meets{l.top()};
    for (AtomSet c : l.coatoms()) {
        const std::size_t n = meets.size();
        for (std::size_t i = 0; i < n; ++i) {
            AtomSet m = meets[i] & c;
            if (seen.insert(m).second)
                meets.push_back(m);
        }
    }
    std::sort(meets.begin(), meets.end());

    IntPoset p;
    p.elements = meets;
    AtomSet bottom = l.top();
    for (AtomSet m : meets)
        bottom &= m;
    for (AtomSet m : meets) {
        if (m == bottom)
            continue;
        bool minimal = true;
        for (AtomSet o : meets)
            if (o != bottom && o.proper_subset_of(m)) {
                minimal = false;
                break;
            }
        if (minimal)
            p.atoms.push_back(m);
    }
    auto least_above = [&](AtomSet x) {
        AtomSet r = l.top();
        for (AtomSet m : meets)
            if (x.subset_of(m))
                r &= m;
        return r;
    };
    p.boolean = p.atoms.size() < 63 && meets.size() == (std::size_t{1} << p.atoms.size());
    for (AtomSet m : meets) {
        if (!p.boolean)
            break;
        AtomSet u = bottom;
        for (AtomSet a : p.atoms)
            if (a.subset_of(m))
                u |= a;
        p.boolean = least_above(u) == m;
    }
    return p;
}

ExplicitLattice interval(AtomSet s, AtomSet t, const Lattice& l, int rack_cap)
{
    if (!l.is_element(s) || !l.is_element(t) || !s.subset_of(t))
        throw PreconditionError("interval needs lattice elements s ⊆ t");
    if (t.size() > rack_cap)
        throw CapExceeded("interval rack of size " + std::to_string(t.size()) + " exceeds cap " +
                          std::to_string(rack_cap));
    // Enumerate directly in parent labels, restricted to t.
    struct Restricted : Lattice {
        const Lattice& parent;
        AtomSet t;
        Restricted(const Lattice& p, AtomSet top) : parent(p), t(top) {}
        int atom_count() const override { return parent.atom_count(); }
        AtomSet generate(AtomSet x) const override { return parent.generate(x); }
        AtomSet extend(AtomSet c, AtomSet x) const override { return parent.extend(c, x); }
        const std::vector<AtomSet>& coatoms() const override { throw PreconditionError("not used"); }
        AtomSet top() const override { return t; }
    } restricted(l, t);
    return ExplicitLattice::enumerate(restricted, kExplicitCap, s);
}

bool is_boolean_interval(AtomSet a, const Lattice& l)
{
    for (int x : a)
        for (int y : a)
            if (x < y && !l.atoms_commute(x, y))
                return false;
    return true;
}

}  // namespace subrack
