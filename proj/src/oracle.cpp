#include "subrack/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "subrack/error.hpp"

namespace subrack {

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::vector<int> prime_divisors(int n)
{
    std::vector<int> out;
    for (int d = 2; d <= n; ++d)
        if (n % d == 0 && is_prime(d))
            out.push_back(d);
    return out;
}

int p_part(int n, int p)
{
    int q = 1;
    while (n % p == 0) {
        n /= p;
        q *= p;
    }
    return q;
}

GroupOracle::GroupOracle(FiniteGroup g) : g_(std::move(g)) {}

AtomSet GroupOracle::center() const { return centralizer(g_.elements()); }

AtomSet GroupOracle::centralizer(AtomSet s) const
{
    AtomSet c;
    for (int x = 0; x < g_.order(); ++x) {
        bool all = true;
        for (int y : s)
            if (!commute(x, y)) {
                all = false;
                break;
            }
        if (all)
            c.insert(x);
    }
    return c;
}

int GroupOracle::element_order(int a) const
{
    int k = 1;
    for (int x = a; x != 0; x = g_.mul(x, a))
        ++k;
    return k;
}

AtomSet GroupOracle::subgroup_generated(AtomSet s) const
{
    AtomSet h = AtomSet::single(0) | s;
    std::deque<int> queue(h.begin(), h.end());
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : AtomSet(h))
            for (int z : {g_.mul(x, y), g_.mul(y, x)})
                if (!h.contains(z)) {
                    h.insert(z);
                    queue.push_back(z);
                }
    }
    return h;
}

bool GroupOracle::is_subgroup(AtomSet s) const
{
    if (!s.contains(0))
        return false;
    for (int x : s)
        for (int y : s)
            if (!s.contains(g_.mul(x, g_.inv(y))))
                return false;
    return true;
}

bool GroupOracle::is_normal(AtomSet h) const
{
    for (int g = 0; g < g_.order(); ++g)
        for (int x : h)
            if (!h.contains(g_.conj(g, x)))
                return false;
    return true;
}

bool GroupOracle::is_abelian(AtomSet s) const
{
    for (int x : s)
        for (int y : s)
            if (!commute(x, y))
                return false;
    return true;
}

const std::vector<AtomSet>& GroupOracle::subgroups() const
{
    if (subgroups_)
        return *subgroups_;
    std::unordered_set<AtomSet, AtomSetHash> seen;
    std::vector<AtomSet> queue;
    for (int x = 0; x < g_.order(); ++x) {
        AtomSet c = subgroup_generated(AtomSet::single(x));
        if (seen.insert(c).second)
            queue.push_back(c);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const AtomSet h = queue[i];
        for (int x = 0; x < g_.order(); ++x) {
            if (h.contains(x))
                continue;
            AtomSet k = subgroup_generated(h | AtomSet::single(x));
            if (seen.insert(k).second)
                queue.push_back(k);
        }
    }
    std::sort(queue.begin(), queue.end());
    subgroups_ = std::move(queue);
    return *subgroups_;
}

std::vector<AtomSet> GroupOracle::normal_subgroups() const
{
    std::vector<AtomSet> out;
    for (AtomSet h : subgroups())
        if (is_normal(h))
            out.push_back(h);
    return out;
}

namespace {

std::vector<AtomSet> maximal_members(const std::vector<AtomSet>& sets)
{
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

std::vector<AtomSet> GroupOracle::maximal_subgroups() const
{
    std::vector<AtomSet> proper;
    for (AtomSet h : subgroups())
        if (h != g_.elements())
            proper.push_back(h);
    return maximal_members(proper);
}

std::vector<AtomSet> GroupOracle::maximal_abelian_subgroups() const
{
    std::vector<AtomSet> ab;
    for (AtomSet h : subgroups())
        if (is_abelian(h))
            ab.push_back(h);
    return maximal_members(ab);
}

std::vector<AtomSet> GroupOracle::maximal_normal_abelian_subgroups() const
{
    std::vector<AtomSet> ab;
    for (AtomSet h : subgroups())
        if (is_abelian(h) && is_normal(h))
            ab.push_back(h);
    return maximal_members(ab);
}

std::vector<AtomSet> GroupOracle::upper_central_series() const
{
    std::vector<AtomSet> series{AtomSet::single(0)};
    for (;;) {
        const AtomSet prev = series.back();
        AtomSet next;
        for (int x = 0; x < g_.order(); ++x) {
            bool central_mod_prev = true;
            for (int y = 0; y < g_.order() && central_mod_prev; ++y) {
                int comm = g_.mul(g_.mul(x, y), g_.mul(g_.inv(x), g_.inv(y)));
                central_mod_prev = prev.contains(comm);
            }
            if (central_mod_prev)
                next.insert(x);
        }
        series.push_back(next);
        if (next == prev)
            return series;
    }
}

AtomSet GroupOracle::hypercenter() const { return upper_central_series().back(); }

std::optional<int> GroupOracle::nilpotence_class() const
{
    auto series = upper_central_series();
    if (series.back() != g_.elements())
        return std::nullopt;
    // series ends with a repeated term; the class is the index of the first term equal to G
    for (std::size_t i = 0; i < series.size(); ++i)
        if (series[i] == g_.elements())
            return static_cast<int>(i);
    return std::nullopt;
}

QuotientGroup GroupOracle::quotient(AtomSet n) const
{
    if (!is_subgroup(n) || !is_normal(n))
        throw PreconditionError("quotient requires a normal subgroup");
    QuotientGroup q;
    q.coset_of.assign(g_.order(), -1);
    for (int x = 0; x < g_.order(); ++x) {
        if (q.coset_of[x] >= 0)
            continue;
        AtomSet coset;
        for (int m : n)
            coset.insert(g_.mul(x, m));
        const int id = static_cast<int>(q.cosets.size());
        for (int y : coset)
            q.coset_of[y] = id;
        q.cosets.push_back(coset);
    }
    const int k = static_cast<int>(q.cosets.size());
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            table[i][j] = q.coset_of[g_.mul(q.cosets[i].min(), q.cosets[j].min())];
    q.group = FiniteGroup::from_table(g_.name() + "/N", table);
    return q;
}

AtomSet GroupOracle::sylow_subgroup(int p) const
{
    if (!is_prime(p) || g_.order() % p != 0)
        throw PreconditionError(std::to_string(p) + " is not a prime divisor of the group order");
    const int target = p_part(g_.order(), p);
    for (AtomSet h : subgroups())
        if (h.size() == target)
            return h;
    throw ConsistencyError("no Sylow subgroup found");
}

bool GroupOracle::has_normal_p_complement(int p) const
{
    if (!is_prime(p))
        throw PreconditionError(std::to_string(p) + " is not prime");
    const int target = g_.order() / p_part(g_.order(), p);
    for (AtomSet h : subgroups())
        if (h.size() == target && is_normal(h))
            return true;
    return false;
}

std::vector<AtomSet> GroupOracle::conjugation_cycles(int a) const
{
    std::vector<AtomSet> cycles;
    AtomSet seen;
    for (int x = 0; x < g_.order(); ++x) {
        if (seen.contains(x))
            continue;
        AtomSet c;
        for (int y = x; !c.contains(y); y = g_.conj(a, y))
            c.insert(y);
        seen |= c;
        cycles.push_back(c);
    }
    return cycles;
}

}  // namespace subrack
