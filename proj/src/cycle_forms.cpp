#include "subrack/cycle_forms.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <thread>

#include "subrack/invariants.hpp"
#include "subrack/oracle.hpp"

namespace subrack {

AtomSet b_set(AtomSet s, AtomSet t, const Lattice& l) { return l.join(s, t) & l.coatom_meet(t); }

void require_centerless(const Lattice& l)
{
    if (l.atom_count() > 1 && center_atoms(l).size() != 1)
        throw PreconditionError("cycle forms need a centerless lattice; pass the hypercenter quotient");
}

int identity_atom(const Lattice& l)
{
    require_centerless(l);
    return center_atoms(l).min();
}

namespace {

bool commutes_with_none(int a, AtomSet p, const Lattice& l)
{
    for (int x : p)
        if (l.atoms_commute(a, x))
            return false;
    return true;
}

/**
 * A block is a cycle part when
 *   it is a singleton,
 *   it has no fixed points and 2 or 3 atoms (cycle lengths >= 2 summing to 2 or 3),
 *   in a refined form, it has no fixed points and prime size (all cycles there share one length),
 *   or it is an element whose lower interval is Boolean.
 */
bool is_cycle_part(AtomSet p, int a, const Lattice& l, bool refined)
{
    if (p.size() == 1)
        return true;
    if (commutes_with_none(a, p, l) && (p.size() <= 3 || (refined && is_prime(p.size()))))
        return true;
    return l.is_element(p) && is_boolean_interval(p, l);
}

AtomPartition marked(std::vector<AtomSet> blocks, int a, const Lattice& l, bool refined)
{
    std::sort(blocks.begin(), blocks.end(), [](AtomSet x, AtomSet y) { return x.min() < y.min(); });
    AtomPartition p{std::move(blocks), {}};
    for (AtomSet b : p.blocks)
        p.marked.push_back(is_cycle_part(b, a, l, refined));
    return p;
}

template <class F>
auto parallel_over_atoms(const Lattice& l, F f)
{
    using R = decltype(f(0));
    const int n = l.atom_count();
    l.coatoms();  // fill lazy caches before sharing the lattice between threads
    std::vector<R> out(n);
    const int workers = std::max(1, std::min<int>(n, static_cast<int>(std::thread::hardware_concurrency())));
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (int a = w; a < n; a += workers)
                out[a] = f(a);
        }));
    for (auto& j : jobs)
        j.get();
    return out;
}

}  // namespace

AtomPartition pseudo_cycle_form(int a, const Lattice& l)
{
    require_centerless(l);
    const int n = l.atom_count();
    std::vector<AtomSet> signature(n);
    for (int g = 0; g < n; ++g)
        for (int x : b_set(AtomSet::single(a), AtomSet::single(g), l))
            signature[x].insert(g);
    std::vector<AtomSet> blocks;
    AtomSet placed;
    for (int x = 0; x < n; ++x) {
        if (placed.contains(x))
            continue;
        AtomSet block;
        for (int y = x; y < n; ++y)
            if (signature[y] == signature[x])
                block.insert(y);
        placed |= block;
        blocks.push_back(block);
    }
    return marked(std::move(blocks), a, l, false);
}

std::vector<AtomPartition> all_pseudo_cycle_forms(const Lattice& l)
{
    require_centerless(l);
    return parallel_over_atoms(l, [&](int a) { return pseudo_cycle_form(a, l); });
}

bool partition_leq(const AtomPartition& p, const AtomPartition& q)
{
    for (AtomSet b : p.blocks) {
        bool inside = false;
        for (AtomSet c : q.blocks)
            if (b.subset_of(c)) {
                inside = true;
                break;
            }
        if (!inside)
            return false;
    }
    return true;
}

AtomSet associated_abelian(int a, const std::vector<AtomPartition>& pseudo)
{
    AtomSet s;
    for (std::size_t x = 0; x < pseudo.size(); ++x)
        if (partition_leq(pseudo[x], pseudo[a]))
            s.insert(static_cast<int>(x));
    return s;
}

AtomSet associated_abelian(int a, const Lattice& l) { return associated_abelian(a, all_pseudo_cycle_forms(l)); }

AtomPartition refine_to_cycle_form(int a, const Lattice& l, const AtomPartition& pseudo)
{
    const AtomSet centralizer = centralizer_atoms(AtomSet::single(a), l);
    std::vector<AtomSet> blocks = pseudo.blocks;
    for (bool changed = true; changed;) {
        changed = false;
        for (int x : centralizer) {
            std::vector<AtomSet> next;
            for (AtomSet p : blocks) {
                AtomSet fixed;
                for (int g : p)
                    if (l.atoms_commute(x, g))
                        fixed.insert(g);
                // A lone fixed point cannot be split off (it would have to be fixed by a already).
                if (fixed.size() > 1 && fixed != p) {
                    next.push_back(fixed);
                    next.push_back(p - fixed);
                    changed = true;
                } else {
                    next.push_back(p);
                }
            }
            blocks = std::move(next);
        }
    }
    return marked(std::move(blocks), a, l, true);
}

AtomPartition refine_to_cycle_form(int a, const Lattice& l)
{
    return refine_to_cycle_form(a, l, pseudo_cycle_form(a, l));
}

std::vector<AtomPartition> all_cycle_forms(const Lattice& l, const std::vector<AtomPartition>& pseudo)
{
    return parallel_over_atoms(l, [&](int a) { return refine_to_cycle_form(a, l, pseudo[a]); });
}

std::vector<CycleLengthVerdict> equal_cycle_length_check(int x, int a, const Lattice& l, const FiniteGroup& g)
{
    return equal_cycle_length_check(x, a, l, g, all_pseudo_cycle_forms(l));
}

std::vector<CycleLengthVerdict> equal_cycle_length_check(int x, int a, const Lattice& l, const FiniteGroup& g,
                                                         const std::vector<AtomPartition>& pseudo)
{
    if (g.order() != l.atom_count())
        throw PreconditionError("witness group order does not match the lattice");
    if (!associated_abelian(a, pseudo).contains(x))
        throw PreconditionError("equal_cycle_length_check: x is not in A(a)");
    const AtomPartition fa = refine_to_cycle_form(a, l, pseudo[a]);
    const AtomPartition fx = refine_to_cycle_form(x, l, pseudo[x]);
    const auto cycles = GroupOracle(g).conjugation_cycles(x);

    std::vector<CycleLengthVerdict> out;
    for (AtomSet p : fa.blocks) {
        AtomSet covered;
        std::vector<AtomSet> inner;
        for (AtomSet q : fx.blocks)
            if (q.subset_of(p)) {
                covered |= q;
                inner.push_back(q);
            }
        if (covered != p)
            continue;
        CycleLengthVerdict v{p, 0, true};
        for (AtomSet c : cycles) {
            if (!c.subset_of(p))
                continue;
            if (v.length == 0)
                v.length = c.size();
            else if (v.length != c.size())
                v.holds = false;
        }
        if (!v.holds)
            v.length = 0;
        for (AtomSet q : inner)
            if (v.length == 0 || q.size() % v.length != 0)
                v.holds = false;
        out.push_back(v);
    }
    return out;
}

namespace {

/// g a g^-1 -> g b g^-1 (and back when the classes differ); empty if not well defined.
std::optional<AtomPermutation> conjugation_shape(int a, int b, const Lattice& l, const FiniteGroup& g)
{
    const int n = l.atom_count();
    const bool same_class = l.coatom_meet(AtomSet::single(a)).contains(b);
    AtomPermutation pi(n, -1);
    auto set = [&](int x, int y) {
        if (pi[x] != -1 && pi[x] != y)
            return false;
        pi[x] = y;
        return true;
    };
    for (int h = 0; h < g.order(); ++h) {
        if (!set(g.conj(h, a), g.conj(h, b)))
            return std::nullopt;
        if (!same_class && !set(g.conj(h, b), g.conj(h, a)))
            return std::nullopt;
    }
    for (int x = 0; x < n; ++x)
        if (pi[x] == -1)
            pi[x] = x;
    return pi;
}

bool swaps(const AtomPermutation& pi, int a, int b, const Lattice& l)
{
    const AtomSet ka = l.coatom_meet(AtomSet::single(a));
    const AtomSet kb = l.coatom_meet(AtomSet::single(b));
    if (pi[a] != b || pi[b] != a || apply(pi, ka) != kb || apply(pi, kb) != ka)
        return false;
    for (int x : l.top() - ka - kb)
        if (pi[x] != x)
            return false;
    return true;
}

}  // namespace

CycleFormCondition cycle_form_condition(const Lattice& l, const FiniteGroup& g, CheckMode mode)
{
    CycleFormCondition c;
    const int n = l.atom_count();
    if (n == 1)
        return c;
    require_centerless(l);
    if (g.order() != n)
        throw PreconditionError("witness group order does not match the lattice");
    const auto forms = all_cycle_forms(l, all_pseudo_cycle_forms(l));
    std::optional<AutomorphismChecker> check;
    std::vector<AtomSet> singles;
    for (int x = 0; x < n; ++x)
        singles.push_back(AtomSet::single(x));

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!(forms[a] == forms[b]))
                continue;
            c.tied_pairs.emplace_back(a, b);
            if (c.failing_pair)
                continue;
            if (!check)
                check.emplace(l, mode, 1);
            bool found = false;
            if (auto pi = conjugation_shape(a, b, l, g))
                found = swaps(*pi, a, b, l) && (*check)(*pi);
            if (!found)
                found = find_block_swap(l, a, b, singles, mode).has_value();
            if (!found) {
                c.holds = false;
                c.failing_pair = std::make_pair(a, b);
            }
        }
    return c;
}

namespace {

struct Support {
    std::vector<int> primes;
    long long count = 0;
};

/// For an abelian group of order n: elements whose order has prime support T, for every nonempty T.
std::vector<Support> support_counts(int n)
{
    const std::vector<int> ps = prime_divisors(n);
    std::vector<Support> out;
    for (unsigned mask = 1; mask < (1U << ps.size()); ++mask) {
        Support s;
        s.count = 1;
        for (std::size_t i = 0; i < ps.size(); ++i)
            if (mask >> i & 1U) {
                s.primes.push_back(ps[i]);
                s.count *= p_part(n, ps[i]) - 1;
            }
        out.push_back(s);
    }
    // Largest supports first: more primes, then larger product.
    auto product = [](const Support& s) {
        long long p = 1;
        for (int q : s.primes)
            p *= q;
        return p;
    };
    std::sort(out.begin(), out.end(), [&](const Support& x, const Support& y) {
        if (x.primes.size() != y.primes.size())
            return x.primes.size() > y.primes.size();
        return product(x) > product(y);
    });
    return out;
}

}  // namespace

PrimeAssignment theta_assignment(const Lattice& l)
{
    PrimeAssignment theta;
    const int n = l.atom_count();
    if (n == 1)
        return theta;
    const int id = identity_atom(l);
    const auto pseudo = all_pseudo_cycle_forms(l);
    std::vector<AtomSet> assoc(n);
    for (int x = 0; x < n; ++x)
        assoc[x] = associated_abelian(x, pseudo);
    std::vector<AtomSet> sets = assoc;
    std::sort(sets.begin(), sets.end(), [](AtomSet x, AtomSet y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    for (AtomSet s : sets) {
        if (s.size() == 1)
            continue;
        if (!s.contains(id))
            throw ConsistencyError("associated abelian set misses the identity atom");
        std::vector<Support> supports = support_counts(s.size());
        std::vector<int> tops, rest;
        for (int x : s - AtomSet::single(id)) {
            if (auto it = theta.find(x); it != theta.end()) {
                auto sup = std::find_if(supports.begin(), supports.end(),
                                        [&](const Support& t) { return t.primes == it->second; });
                if (sup == supports.end() || sup->count == 0)
                    throw ConsistencyError("prime assignment contradicts an associated abelian set");
                --sup->count;
            } else {
                (assoc[x] == s ? tops : rest).push_back(x);
            }
        }
        tops.insert(tops.end(), rest.begin(), rest.end());
        std::size_t next = 0;
        for (Support& t : supports)
            for (; t.count > 0; --t.count) {
                if (next == tops.size())
                    throw ConsistencyError("prime assignment: too few atoms for the supports of an abelian set");
                theta[tops[next++]] = t.primes;
            }
        if (next != tops.size())
            throw ConsistencyError("prime assignment: too many atoms for the supports of an abelian set");
    }
    if (static_cast<int>(theta.size()) != n - 1)
        throw ConsistencyError("prime assignment does not cover every non-identity atom");
    return theta;
}

namespace {

bool only_p(int x, int p, const PrimeAssignment& theta)
{
    auto it = theta.find(x);
    return it != theta.end() && it->second == std::vector<int>{p};
}

int log_base(int n, int p)
{
    int k = 0;
    for (; n > 1; n /= p)
        ++k;
    return k;
}

}  // namespace

AtomSet locate_sylow_subrack(int p, const PrimeAssignment& theta, const Lattice& l)
{
    const int n = l.atom_count();
    if (!is_prime(p) || n % p != 0)
        throw PreconditionError("locate_sylow_subrack: p must be a prime dividing the atom count");
    const int pk = p_part(n, p);
    const int id = identity_atom(l);
    // At every level the p-atoms alone may already form the Sylow subrack: it is normal there,
    // hence closed and absent from the M-set.
    auto direct = [&](AtomSet top) -> std::optional<AtomSet> {
        AtomSet gp;
        for (int x : top)
            if (only_p(x, p, theta))
                gp.insert(x);
        if (gp.size() + 1 == pk && top.contains(id))
            return gp | AtomSet::single(id);
        return std::nullopt;
    };

    const int max_depth = log_base(n, 2) + 1;
    std::function<std::optional<AtomSet>(const Lattice&, const std::function<AtomSet(AtomSet)>&, int)> descend =
        [&](const Lattice& cur, const std::function<AtomSet(AtomSet)>& up, int depth) -> std::optional<AtomSet> {
        if (auto d = direct(up(cur.top())))
            return d;
        if (depth > max_depth)
            return std::nullopt;
        MSet m = m_set(cur);
        std::vector<AtomSet> candidates;
        for (const auto* v : {&m.members, &m.undecided})
            for (AtomSet s : *v)
                if (s.size() % pk == 0)
                    candidates.push_back(s);
        std::sort(candidates.begin(), candidates.end(), [](AtomSet x, AtomSet y) {
            return x.size() != y.size() ? x.size() > y.size() : x < y;
        });
        for (AtomSet s : candidates) {
            const AtomSet top = up(s);
            if (s.size() == pk) {
                bool ok = top.contains(id);
                for (int x : top - AtomSet::single(id))
                    ok = ok && only_p(x, p, theta);
                if (ok)
                    return top;
                continue;
            }
            IntervalView below(cur, s);
            auto found = descend(below, [&](AtomSet t) { return up(below.to_parent(t)); }, depth + 1);
            if (found)
                return found;
        }
        return std::nullopt;
    };
    auto found = descend(l, [](AtomSet s) { return s; }, 0);
    if (!found)
        throw ConsistencyError("Sylow subrack search exhausted its candidates");
    return *found;
}

std::vector<AtomSet> interval_classes(AtomSet t, const Lattice& l)
{
    IntervalView below(l, t);
    std::vector<AtomSet> out;
    for (AtomSet c : lattice_classes(below))
        out.push_back(below.to_parent(c));
    std::sort(out.begin(), out.end(), [](AtomSet x, AtomSet y) { return x.min() < y.min(); });
    return out;
}

PNilpotenceReport p_nilpotent_from_lattice(int p, std::shared_ptr<const Lattice> l, const FiniteGroup& g,
                                           CheckMode mode)
{
    if (!is_prime(p))
        throw PreconditionError("p must be prime");
    PNilpotenceReport r;
    const HypercenterQuotient hq = hypercenter_quotient(std::move(l), g, mode);
    const Lattice& q = *hq.lattice;
    r.quotient_order = q.atom_count();
    if (r.quotient_order == 1 || r.quotient_order % p != 0)
        return r;
    if (!cycle_form_condition(q, hq.group, mode).holds) {
        r.verdict = PNilpotence::ConditionNotMet;
        return r;
    }
    r.theta = theta_assignment(q);
    r.sylow = locate_sylow_subrack(p, r.theta, q);
    // Normal p-complement iff elements of P that are conjugate in the quotient are conjugate in P.
    for (AtomSet c : interval_classes(r.sylow, q))
        if ((q.coatom_meet(AtomSet::single(c.min())) & r.sylow) != c) {
            r.verdict = PNilpotence::No;
            return r;
        }
    return r;
}

}  // namespace subrack
