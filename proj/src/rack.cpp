#include "subrack/rack.hpp"

#include <map>

#include "subrack/error.hpp"

namespace subrack {

Rack Rack::from_table(std::vector<std::vector<int>> table, Backing backing)
{
    const int n = static_cast<int>(table.size());
    if (n > kMaxAtoms)
        throw InputError("rack of size " + std::to_string(n) + " exceeds the supported maximum");
    Rack r;
    r.n_ = n;
    r.backing_ = backing;
    r.table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n)
            throw InputError("rack table row " + std::to_string(a) + " has wrong length");
        AtomSet image;
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n)
                throw InputError("rack table entry out of range");
            image.insert(v);
            r.table_[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint8_t>(v);
        }
        if (image.size() != n)
            throw InputError("left translation by " + std::to_string(a) + " is not a bijection");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (r.op(a, r.op(b, c)) != r.op(r.op(a, b), r.op(a, c)))
                    throw InputError("self-distributivity fails at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
    if (backing == Backing::Conjugation && !r.is_quandle())
        throw InputError("conjugation rack is not idempotent");

    AtomSet seen;
    for (int x = 0; x < n; ++x) {
        if (seen.contains(x))
            continue;
        AtomSet orbit = AtomSet::single(x), frontier = orbit;
        while (!frontier.empty()) {
            AtomSet next;
            for (int y : frontier)
                for (int a = 0; a < n; ++a)
                    next.insert(r.op(a, y));
            frontier = next - orbit;
            orbit |= next;
        }
        seen |= orbit;
        r.orbits_.push_back(orbit);
    }
    return r;
}

bool Rack::is_quandle() const
{
    for (int a = 0; a < n_; ++a)
        if (op(a, a) != a)
            return false;
    return true;
}

AtomSet Rack::extend(AtomSet closed, AtomSet extra) const
{
    AtomSet result = closed;
    AtomSet pending = extra - closed;
    while (!pending.empty()) {
        const int x = pending.min();
        pending.erase(x);
        result.insert(x);
        for (int y : result) {
            const int u = op(x, y);
            const int v = op(y, x);
            if (!result.contains(u))
                pending.insert(u);
            if (!result.contains(v))
                pending.insert(v);
        }
    }
    return result;
}

AtomSet Rack::generate(AtomSet s) const { return extend(AtomSet{}, s); }

Rack conjugation_quandle(const FiniteGroup& g)
{
    const int n = g.order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = g.conj(a, b);
    return Rack::from_table(std::move(t), Rack::Backing::Conjugation);
}

AtomSet set_conjugate(AtomSet s, AtomSet t, const Rack& r)
{
    AtomSet out;
    for (int a : s)
        for (int b : t)
            out.insert(r.op(a, b));
    return out;
}

bool is_subrack(AtomSet s, const Rack& r) { return set_conjugate(s, s, r).subset_of(s); }

AtomSet class_closure(AtomSet s, const FiniteGroup& g)
{
    AtomSet out;
    for (int x : s)
        for (int h = 0; h < g.order(); ++h)
            out.insert(g.conj(h, x));
    return out;
}

InnerMap inner_map(const FiniteGroup& g)
{
    const int n = g.order();
    InnerMap m;
    m.fiber_of.assign(n, -1);
    std::map<std::vector<int>, int> index;
    for (int a = 0; a < n; ++a) {
        InnerPermutation p{a, std::vector<int>(n)};
        for (int b = 0; b < n; ++b)
            p.images[b] = g.conj(a, b);
        auto [it, inserted] = index.emplace(p.images, static_cast<int>(m.distinct.size()));
        if (inserted)
            m.distinct.push_back(p.images);
        m.fiber_of[a] = it->second;
        m.maps.push_back(std::move(p));
    }
    return m;
}

}  // namespace subrack
