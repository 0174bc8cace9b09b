#include "subrack/group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "subrack/error.hpp"

namespace subrack {

namespace {

void check_associative(const FiniteGroup& g, int full_check_cap, std::uint64_t seed)
{
    const int n = g.order();
    auto triple_ok = [&](int a, int b, int c) { return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)); };
    if (n <= full_check_cap) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!triple_ok(a, b, c))
                        throw InputError("group '" + g.name() + "': associativity fails at (" +
                                         std::to_string(a) + "," + std::to_string(b) + "," +
                                         std::to_string(c) + ")");
        return;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    const long samples = 10L * n * n;
    for (long s = 0; s < samples; ++s) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        if (!triple_ok(a, b, c))
            throw InputError("group '" + g.name() + "': associativity fails on sampled triple (" +
                             std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    }
}

Permutation compose(const Permutation& s, const Permutation& t)
{
    Permutation r(t.size());
    for (std::size_t x = 0; x < t.size(); ++x)
        r[x] = s[t[x]];
    return r;
}

void check_permutation(const Permutation& p, int degree)
{
    if (static_cast<int>(p.size()) != degree)
        throw InputError("permutation has " + std::to_string(p.size()) + " images, expected " +
                         std::to_string(degree));
    std::vector<bool> seen(degree, false);
    for (int v : p) {
        if (v < 0 || v >= degree || seen[v])
            throw InputError("generator is not a permutation of 0.." + std::to_string(degree - 1));
        seen[v] = true;
    }
}

FiniteGroup from_ordered_permutations(std::string name, const std::vector<Permutation>& elems)
{
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        index.emplace(elems[i], static_cast<int>(i));
    if (index.size() != elems.size())
        throw InputError("group '" + name + "': repeated permutation in element list");
    std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            auto it = index.find(compose(elems[i], elems[j]));
            if (it == index.end())
                throw InputError("group '" + name + "': element list is not closed under composition");
            table[i][j] = it->second;
        }
    return FiniteGroup::from_table(std::move(name), table);
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, const std::vector<std::vector<int>>& table,
                                    int full_check_cap, std::uint64_t seed)
{
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw InputError("group '" + name + "': empty Cayley table");
    if (n > kMaxAtoms)
        throw InputError("group '" + name + "': order " + std::to_string(n) +
                         " exceeds the supported maximum of " + std::to_string(kMaxAtoms));
    FiniteGroup g;
    g.name_ = std::move(name);
    g.n_ = n;
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            throw InputError("group '" + g.name_ + "': row " + std::to_string(i) + " has wrong length");
        AtomSet row;
        for (int j = 0; j < n; ++j) {
            int v = table[i][j];
            if (v < 0 || v >= n)
                throw InputError("group '" + g.name_ + "': entry out of range at (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")");
            row.insert(v);
            g.table_[static_cast<std::size_t>(i) * n + j] = v;
        }
        if (row.size() != n)
            throw InputError("group '" + g.name_ + "': row " + std::to_string(i) + " is not a permutation");
    }
    for (int j = 0; j < n; ++j) {
        AtomSet col;
        for (int i = 0; i < n; ++i)
            col.insert(g.mul(i, j));
        if (col.size() != n)
            throw InputError("group '" + g.name_ + "': column " + std::to_string(j) + " is not a permutation");
    }
    for (int j = 0; j < n; ++j)
        if (g.mul(0, j) != j || g.mul(j, 0) != j)
            throw InputError("group '" + g.name_ + "': index 0 is not the identity");
    check_associative(g, full_check_cap, seed);
    g.inverse_.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == 0)
                g.inverse_[a] = b;
    return g;
}

int FiniteGroup::power(int a, int k) const
{
    int r = 0;
    for (int i = 0; i < k; ++i)
        r = mul(r, a);
    return r;
}

std::vector<std::vector<int>> FiniteGroup::table() const
{
    std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            t[i][j] = mul(i, j);
    return t;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g)
{
    const int n = g.order();
    ConjugacyClasses out;
    out.class_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (out.class_of[x] >= 0)
            continue;
        AtomSet orbit;
        for (int h = 0; h < n; ++h)
            orbit.insert(g.conj(h, x));
        const int id = out.count();
        for (int y : orbit)
            out.class_of[y] = id;
        out.classes.push_back(orbit);
    }
    return out;
}

FiniteGroup group_from_permutations(std::string name, int degree, const std::vector<Permutation>& generators,
                                    int max_order)
{
    if (degree <= 0)
        throw InputError("permutation degree must be positive");
    for (const auto& p : generators)
        check_permutation(p, degree);
    Permutation id(degree);
    for (int i = 0; i < degree; ++i)
        id[i] = i;
    std::set<Permutation> seen{id};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& e : frontier)
            for (const auto& s : generators) {
                auto p = compose(e, s);
                if (seen.insert(p).second) {
                    if (static_cast<int>(seen.size()) > max_order)
                        throw InputError("generator closure exceeds max order " + std::to_string(max_order));
                    next.push_back(std::move(p));
                }
            }
        frontier = std::move(next);
    }
    std::vector<Permutation> elems;
    elems.push_back(id);
    for (const auto& p : seen)
        if (p != id)
            elems.push_back(p);
    return from_ordered_permutations(std::move(name), elems);
}

FiniteGroup group_from_permutation_list(std::string name, const std::vector<Permutation>& elements)
{
    if (elements.empty())
        throw InputError("empty element list");
    const int degree = static_cast<int>(elements.front().size());
    for (const auto& p : elements)
        check_permutation(p, degree);
    for (int i = 0; i < degree; ++i)
        if (elements.front()[i] != i)
            throw InputError("group '" + name + "': first listed element must be the identity");
    return from_ordered_permutations(std::move(name), elements);
}

Permutation parse_cycles(const std::string& cycles, int degree)
{
    Permutation p(degree);
    for (int i = 0; i < degree; ++i)
        p[i] = i;
    std::size_t pos = 0;
    while ((pos = cycles.find('(', pos)) != std::string::npos) {
        auto close = cycles.find(')', pos);
        if (close == std::string::npos)
            throw InputError("unbalanced cycle notation: " + cycles);
        std::istringstream in(cycles.substr(pos + 1, close - pos - 1));
        std::vector<int> cyc;
        for (int v; in >> v;)
            cyc.push_back(v - 1);
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (cyc[k] < 0 || cyc[k] >= degree)
                throw InputError("cycle point out of range: " + cycles);
            p[cyc[k]] = cyc[(k + 1) % cyc.size()];
        }
        pos = close + 1;
    }
    check_permutation(p, degree);
    return p;
}

}  // namespace subrack
