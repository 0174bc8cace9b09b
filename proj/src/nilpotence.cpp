#include "subrack/nilpotence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_set>

#include "subrack/invariants.hpp"
#include "subrack/oracle.hpp"

namespace subrack {

AtomSet apply(const AtomPermutation& pi, AtomSet s)
{
    AtomSet out;
    for (int x : s)
        out.insert(pi[x]);
    return out;
}

namespace {

bool is_permutation_of(const AtomPermutation& pi, int n)
{
    if (static_cast<int>(pi.size()) != n)
        return false;
    AtomSet seen;
    for (int y : pi) {
        if (y < 0 || y >= n || seen.contains(y))
            return false;
        seen.insert(y);
    }
    return true;
}

std::vector<int> block_index(const std::vector<AtomSet>& blocks, int n)
{
    std::vector<int> of(n, -1);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int x : blocks[i]) {
            if (x >= n || of[x] != -1)
                throw PreconditionError("blocks do not partition the atoms");
            of[x] = static_cast<int>(i);
        }
    if (std::find(of.begin(), of.end(), -1) != of.end())
        throw PreconditionError("blocks do not cover the atoms");
    return of;
}

bool maps_blocks_to_blocks(const AtomPermutation& pi, const std::vector<AtomSet>& blocks, const std::vector<int>& of)
{
    for (AtomSet b : blocks) {
        const AtomSet image = apply(pi, b);
        if (image != blocks[of[image.min()]])
            return false;
    }
    return true;
}

/// pi swaps a and b, swaps K(a) and K(b), and fixes everything outside them.
bool has_swap_shape(const AtomPermutation& pi, int a, int b, AtomSet ka, AtomSet kb)
{
    if (pi[a] != b || pi[b] != a || apply(pi, ka) != kb || apply(pi, kb) != ka)
        return false;
    for (std::size_t x = 0; x < pi.size(); ++x)
        if (!ka.contains(static_cast<int>(x)) && !kb.contains(static_cast<int>(x)) && pi[x] != static_cast<int>(x))
            return false;
    return true;
}

constexpr std::size_t kSwapSearchCap = 40320;

std::size_t factorial_capped(int k)
{
    std::size_t f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= static_cast<std::size_t>(i);
        if (f > kSwapSearchCap)
            return kSwapSearchCap + 1;
    }
    return f;
}

std::optional<AtomPermutation> search_swap(const Lattice& l, int a, int b, const std::vector<AtomSet>& blocks,
                                           const AutomorphismChecker& check)
{
    const int n = l.atom_count();
    const std::vector<int> of = block_index(blocks, n);
    const AtomSet ka = l.coatom_meet(AtomSet::single(a));
    const AtomSet kb = l.coatom_meet(AtomSet::single(b));
    AtomPermutation id(n);
    std::iota(id.begin(), id.end(), 0);

    auto accept = [&](const AtomPermutation& pi) {
        return maps_blocks_to_blocks(pi, blocks, of) && check(pi);
    };

    if (ka == kb) {
        std::vector<int> rest = (ka - AtomSet::single(a) - AtomSet::single(b)).to_vector();
        if (factorial_capped(static_cast<int>(rest.size())) > kSwapSearchCap)
            throw CapExceeded("swap search over a class of size " + std::to_string(ka.size()));
        std::vector<int> images = rest;
        do {
            AtomPermutation pi = id;
            pi[a] = b;
            pi[b] = a;
            for (std::size_t i = 0; i < rest.size(); ++i)
                pi[rest[i]] = images[i];
            if (accept(pi))
                return pi;
        } while (std::next_permutation(images.begin(), images.end()));
        return std::nullopt;
    }

    if (ka.size() != kb.size())
        return std::nullopt;
    const std::vector<int> ra = (ka - AtomSet::single(a)).to_vector();
    const std::vector<int> rb = (kb - AtomSet::single(b)).to_vector();
    const std::size_t f = factorial_capped(static_cast<int>(ra.size()));
    if (f > kSwapSearchCap || f * f > kSwapSearchCap)
        throw CapExceeded("swap search over classes of size " + std::to_string(ka.size()));
    std::vector<int> sigma = rb;
    do {
        std::vector<int> tau = ra;
        do {
            AtomPermutation pi = id;
            pi[a] = b;
            pi[b] = a;
            for (std::size_t i = 0; i < ra.size(); ++i) {
                pi[ra[i]] = sigma[i];
                pi[rb[i]] = tau[i];
            }
            if (accept(pi))
                return pi;
        } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

std::vector<AtomSet> singletons(int n)
{
    std::vector<AtomSet> out;
    for (int x = 0; x < n; ++x)
        out.push_back(AtomSet::single(x));
    return out;
}

void require_witness(const Lattice& l, const FiniteGroup& g)
{
    if (l.atom_count() != g.order())
        throw PreconditionError("witness group order does not match the lattice");
}

/// Returns the proposal if it has the swap shape and is an automorphism; otherwise searches.
AtomPermutation settle_swap(AtomPermutation pi, int a, int b, const Lattice& l, const AutomorphismChecker& check,
                            const char* what)
{
    const AtomSet ka = l.coatom_meet(AtomSet::single(a));
    const AtomSet kb = l.coatom_meet(AtomSet::single(b));
    if (is_permutation_of(pi, l.atom_count()) && has_swap_shape(pi, a, b, ka, kb) && check(pi))
        return pi;
    // The translation can fail to be an involution on a single class; look for another swap there.
    if (ka == kb || !check(pi)) {
        if (auto found = search_swap(l, a, b, singletons(l.atom_count()), check))
            return *found;
    }
    throw ConsistencyError(std::string(what) + ": no lattice automorphism swapping the two atoms");
}

AtomPermutation central_swap_with(int a, int b, const Lattice& l, const FiniteGroup& g,
                                  const AutomorphismChecker& check)
{
    require_witness(l, g);
    const int z = g.mul(g.inv(a), b);
    if (!center_atoms(l).contains(z))
        throw PreconditionError("central_swap: a^-1 b is not in the located center");
    const AtomSet ka = l.coatom_meet(AtomSet::single(a));
    const AtomSet kb = l.coatom_meet(AtomSet::single(b));
    AtomPermutation pi(l.atom_count());
    std::iota(pi.begin(), pi.end(), 0);
    for (int x : ka)
        pi[x] = g.mul(x, z);
    if (ka != kb)
        for (int y : kb)
            pi[y] = g.mul(y, g.inv(z));
    return settle_swap(std::move(pi), a, b, l, check, "central_swap");
}

}  // namespace

AutomorphismChecker::AutomorphismChecker(const Lattice& l, CheckMode mode, std::uint64_t seed) : l_(l), seed_(seed)
{
    if (mode == CheckMode::Sampled)
        return;
    const std::size_t cap = mode == CheckMode::Exhaustive ? kExplicitCap : kExhaustiveCheckCap;
    try {
        for_each_element(l, [&](AtomSet s) { elements_.push_back(s); }, cap);
        exhaustive_ = true;
        members_.insert(elements_.begin(), elements_.end());
    } catch (const CapExceeded&) {
        if (mode == CheckMode::Exhaustive)
            throw;
        elements_.clear();
    }
}

bool AutomorphismChecker::operator()(const AtomPermutation& pi) const
{
    const int n = l_.atom_count();
    if (!is_permutation_of(pi, n))
        return false;
    if (exhaustive_) {
        for (AtomSet s : elements_)
            if (!members_.count(apply(pi, s)))
                return false;
        return true;
    }
    auto preserves = [&](AtomSet r) { return apply(pi, l_.generate(r)) == l_.generate(apply(pi, r)); };
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            if (!preserves(AtomSet::single(x) | AtomSet::single(y)))
                return false;
    std::mt19937_64 rng(seed_);
    std::uniform_int_distribution<int> atom(0, n - 1);
    std::uniform_int_distribution<int> size(2, std::min(n, 5));
    for (int i = 0; i < kRandomSamples && n > 1; ++i) {
        AtomSet r;
        const int k = size(rng);
        for (int j = 0; j < k; ++j)
            r.insert(atom(rng));
        if (!preserves(r))
            return false;
    }
    return true;
}

bool is_lattice_automorphism(const Lattice& l, const AtomPermutation& pi, CheckMode mode, std::uint64_t seed)
{
    return AutomorphismChecker(l, mode, seed)(pi);
}

AtomPermutation central_swap(int a, int b, const Lattice& l, const FiniteGroup& g, CheckMode mode)
{
    return central_swap_with(a, b, l, g, AutomorphismChecker(l, mode, 1));
}

AtomPermutation power_swap(int a, int b, const Lattice& l, const FiniteGroup& g, CheckMode mode)
{
    require_witness(l, g);
    GroupOracle oracle(g);
    if (oracle.subgroup_generated(AtomSet::single(a)) != oracle.subgroup_generated(AtomSet::single(b)))
        throw PreconditionError("power_swap: <a> and <b> differ");
    const AtomSet ka = l.coatom_meet(AtomSet::single(a));
    const AtomSet kb = l.coatom_meet(AtomSet::single(b));
    AtomPermutation pi(l.atom_count());
    std::iota(pi.begin(), pi.end(), 0);
    for (int h = 0; h < g.order(); ++h) {
        pi[g.conj(h, a)] = g.conj(h, b);
        if (ka != kb)
            pi[g.conj(h, b)] = g.conj(h, a);
    }
    return settle_swap(std::move(pi), a, b, l, AutomorphismChecker(l, mode, 1), "power_swap");
}

std::vector<AtomSet> coset_subracks(AtomSet n, const FiniteGroup& g)
{
    GroupOracle oracle(g);
    if (!oracle.is_normal(n))
        throw PreconditionError("coset_subracks: subgroup is not normal");
    const Rack r = conjugation_quandle(g);
    std::vector<AtomSet> cosets = oracle.quotient(n).cosets;
    for (AtomSet c : cosets)
        if (!is_subrack(c, r))
            throw ConsistencyError("coset of a normal subgroup is not a subrack");
    return cosets;
}

bool coset_joins_hold(const std::vector<AtomSet>& cosets, const FiniteGroup& g)
{
    const Rack r = conjugation_quandle(g);
    const int k = static_cast<int>(cosets.size());
    const std::vector<int> of = block_index(cosets, g.order());
    auto check = [&](AtomSet chosen) {
        AtomSet unions, reps;
        for (int i : chosen) {
            unions |= cosets[i];
            reps.insert(cosets[i].min());
        }
        AtomSet expected;
        for (int x : r.generate(reps))
            expected |= cosets[of[x]];
        return r.generate(unions) == expected;
    };
    if (k <= 12) {
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m)
            if (!check(AtomSet(m)))
                return false;
        return true;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            for (int h = j; h < k; ++h)
                if (!check(AtomSet::single(i) | AtomSet::single(j) | AtomSet::single(h)))
                    return false;
    return true;
}

bool joins_are_block_unions(const Lattice& l, const std::vector<AtomSet>& blocks)
{
    const std::vector<int> of = block_index(blocks, l.atom_count());
    // Blocks of size 1 or a single block make every element a union of blocks.
    if (blocks.size() <= 1 || std::all_of(blocks.begin(), blocks.end(), [](AtomSet b) { return b.size() == 1; }))
        return true;
    auto is_union = [&](AtomSet s) {
        for (int x : s)
            if (!blocks[of[x]].subset_of(s))
                return false;
        return true;
    };
    // Every join of blocks is reached from the bottom by adding one block at a time.
    const AtomSet bottom = l.generate(AtomSet{});
    if (!is_union(bottom))
        return false;
    std::unordered_set<AtomSet, AtomSetHash> seen{bottom};
    std::vector<AtomSet> stack{bottom};
    while (!stack.empty()) {
        const AtomSet j = stack.back();
        stack.pop_back();
        for (AtomSet b : blocks) {
            if (b.subset_of(j))
                continue;
            const AtomSet t = l.extend(j, b);
            if (!is_union(t))
                return false;
            if (seen.insert(t).second) {
                if (seen.size() > kExplicitCap)
                    throw CapExceeded("too many block joins");
                stack.push_back(t);
            }
        }
    }
    return true;
}

std::optional<AtomPermutation> find_block_swap(const Lattice& l, int a, int b, const std::vector<AtomSet>& blocks,
                                               CheckMode mode)
{
    return search_swap(l, a, b, blocks, AutomorphismChecker(l, mode, 1));
}

PartitionCheck check_central_partition(const Lattice& l, const std::vector<AtomSet>& blocks, const FiniteGroup* g,
                                       CheckMode mode)
{
    PartitionCheck c;
    const int n = l.atom_count();
    const std::vector<int> of = block_index(blocks, n);
    const int m = center_atoms(l).size();
    c.equal_sizes = std::all_of(blocks.begin(), blocks.end(), [m](AtomSet b) { return b.size() == m; });
    if (!c.equal_sizes) {
        c.failure = "block sizes differ from the located center";
        return c;
    }
    c.blocks_are_elements = std::all_of(blocks.begin(), blocks.end(), [&](AtomSet b) { return l.is_element(b); });
    if (!c.blocks_are_elements) {
        c.failure = "a block is not a lattice element";
        return c;
    }
    c.joins_are_unions = joins_are_block_unions(l, blocks);
    if (!c.joins_are_unions) {
        c.failure = "a join of blocks is not a union of blocks";
        return c;
    }
    std::optional<AutomorphismChecker> check;
    for (AtomSet block : blocks) {
        for (int a : block)
            for (int b : block) {
                if (b <= a)
                    continue;
                if (!check)
                    check.emplace(l, mode, 1);
                std::optional<AtomPermutation> pi;
                if (g) {
                    try {
                        pi = central_swap_with(a, b, l, *g, *check);
                        if (!maps_blocks_to_blocks(*pi, blocks, of))
                            pi.reset();
                    } catch (const PreconditionError&) {
                    } catch (const ConsistencyError&) {
                    }
                }
                if (!pi)
                    pi = search_swap(l, a, b, blocks, *check);
                if (!pi) {
                    c.failure = "no block-preserving automorphism swaps atoms " + std::to_string(a) + " and " +
                                std::to_string(b);
                    return c;
                }
            }
    }
    c.swaps_exist = true;
    return c;
}

CentralPartition build_central_partition(const Lattice& l, const FiniteGroup& g, CheckMode mode)
{
    require_witness(l, g);
    GroupOracle oracle(g);
    const AtomSet z = oracle.center();
    if (z != center_atoms(l))
        throw ConsistencyError("located center differs from the center of the witness group");
    CentralPartition p{oracle.quotient(z).cosets, z.size()};
    const PartitionCheck c = check_central_partition(l, p.blocks, &g, mode);
    if (!c.ok())
        throw ConsistencyError("central partition: " + c.failure);
    return p;
}

BlockLattice::BlockLattice(std::shared_ptr<const Lattice> parent, std::vector<AtomSet> blocks)
    : parent_(std::move(parent)), blocks_(std::move(blocks))
{
    if (blocks_.empty() || blocks_.size() > static_cast<std::size_t>(kMaxAtoms))
        throw PreconditionError("block lattice needs between 1 and 64 blocks");
    block_of_ = block_index(blocks_, parent_->atom_count());
}

AtomSet BlockLattice::to_parent(AtomSet s) const
{
    AtomSet out;
    for (int i : s)
        out |= blocks_[i];
    return out;
}

AtomSet BlockLattice::to_blocks(AtomSet s) const
{
    AtomSet out;
    for (int x : s) {
        const int i = block_of_[x];
        if (!blocks_[i].subset_of(s))
            throw ConsistencyError("parent element is not a union of blocks");
        out.insert(i);
    }
    return out;
}

AtomSet BlockLattice::generate(AtomSet s) const { return to_blocks(parent_->generate(to_parent(s))); }

AtomSet BlockLattice::extend(AtomSet closed, AtomSet extra) const
{
    return to_blocks(parent_->extend(to_parent(closed), to_parent(extra)));
}

const std::vector<AtomSet>& BlockLattice::coatoms() const
{
    if (coatoms_)
        return *coatoms_;
    // A coatom misses exactly one class; the class of a block is the parent closure of that block.
    std::vector<AtomSet> c;
    AtomSet seen;
    const int k = atom_count();
    for (int i = 0; i < k; ++i) {
        if (seen.contains(i))
            continue;
        const AtomSet cls = to_blocks(parent_->coatom_meet(blocks_[i]));
        seen |= cls;
        if (cls != top())
            c.push_back(cls.complement(k));
    }
    std::sort(c.begin(), c.end());
    coatoms_ = std::move(c);
    return *coatoms_;
}

QuotientPoset quotient_poset(const CentralPartition& c, const Lattice& l)
{
    auto borrowed = std::shared_ptr<const Lattice>(&l, [](const Lattice*) {});
    BlockLattice b(borrowed, c.blocks);
    QuotientPoset q;
    q.blocks = c.blocks;
    for_each_element(b, [&](AtomSet s) {
        if (!s.empty())
            q.elements.push_back(s);
    });
    std::sort(q.elements.begin(), q.elements.end());
    return q;
}

bool quotient_poset_matches_oracle(const QuotientPoset& q, const FiniteGroup& g)
{
    GroupOracle oracle(g);
    const QuotientGroup quo = oracle.quotient(oracle.center());
    if (quo.cosets != q.blocks)
        return false;
    RackLattice r(conjugation_quandle(quo.group));
    std::vector<AtomSet> expected;
    for_each_element(r, [&](AtomSet s) {
        if (!s.empty())
            expected.push_back(s);
    });
    std::sort(expected.begin(), expected.end());
    return expected == q.elements;
}

NilpotenceResult nilpotence_class_from_lattice(std::shared_ptr<const Lattice> l, const FiniteGroup& g, CheckMode mode)
{
    NilpotenceResult r;
    std::shared_ptr<const Lattice> cur = std::move(l);
    FiniteGroup w = g;
    for (int k = 0;; ++k) {
        if (cur->atom_count() == 1) {
            r.nilpotence_class = k;
            return r;
        }
        const AtomSet z = center_atoms(*cur);
        if (z.size() == 1)
            return r;
        CentralPartition p = build_central_partition(*cur, w, mode);
        auto next = std::make_shared<BlockLattice>(cur, p.blocks);
        NilpotenceStep step{cur->atom_count(), z.size(), static_cast<int>(p.blocks.size()), 0};
        try {
            step.poset = count_elements(*next) - 1;
        } catch (const CapExceeded&) {
        }
        r.trace.push_back(step);
        w = GroupOracle(w).quotient(z).group;
        cur = std::move(next);
    }
}

HypercenterQuotient hypercenter_quotient(std::shared_ptr<const Lattice> l, const FiniteGroup& g, CheckMode mode)
{
    HypercenterQuotient h{std::move(l), g, {}, 0};
    h.blocks = singletons(h.lattice->atom_count());
    while (h.lattice->atom_count() > 1) {
        const AtomSet z = center_atoms(*h.lattice);
        if (z.size() == 1)
            break;
        CentralPartition p = build_central_partition(*h.lattice, h.group, mode);
        std::vector<AtomSet> merged;
        for (AtomSet b : p.blocks) {
            AtomSet u;
            for (int i : b)
                u |= h.blocks[i];
            merged.push_back(u);
        }
        h.blocks = std::move(merged);
        h.lattice = std::make_shared<BlockLattice>(h.lattice, p.blocks);
        h.group = GroupOracle(h.group).quotient(z).group;
        ++h.steps;
    }
    return h;
}

namespace {

std::optional<std::vector<int>> find_atom_isomorphism(const std::vector<AtomSet>& a, const std::vector<AtomSet>& b,
                                                      int atoms)
{
    if (a.size() != b.size())
        return std::nullopt;
    std::vector<int> pi(atoms);
    std::iota(pi.begin(), pi.end(), 0);
    if (a == b)
        return pi;
    if (atoms > 10)
        throw CapExceeded("atom isomorphism search over more than 10 atoms");
    auto histogram = [](const std::vector<AtomSet>& v) {
        std::vector<int> h(kMaxAtoms + 1, 0);
        for (AtomSet s : v)
            ++h[s.size()];
        return h;
    };
    if (histogram(a) != histogram(b))
        return std::nullopt;
    const std::unordered_set<AtomSet, AtomSetHash> target(b.begin(), b.end());
    do {
        bool ok = true;
        for (AtomSet s : a)
            if (!target.count(subrack::apply(pi, s))) {
                ok = false;
                break;
            }
        if (ok)
            return pi;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return std::nullopt;
}

std::vector<AtomSet> block_elements(std::shared_ptr<const Lattice> l, const std::vector<AtomSet>& blocks)
{
    BlockLattice b(std::move(l), blocks);
    std::vector<AtomSet> out;
    for_each_element(b, [&](AtomSet s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool atom_isomorphic(const std::vector<AtomSet>& a, const std::vector<AtomSet>& b, int atoms)
{
    return find_atom_isomorphism(a, b, atoms).has_value();
}

namespace {

void for_each_equal_partition(AtomSet universe, int m, const std::function<void(const std::vector<AtomSet>&)>& visit)
{
    std::vector<AtomSet> blocks;
    std::function<void(AtomSet)> split = [&](AtomSet remaining) {
        if (remaining.empty()) {
            visit(blocks);  // blocks are produced in order of their smallest member
            return;
        }
        const int x = remaining.min();
        const std::vector<int> rest = (remaining - AtomSet::single(x)).to_vector();
        std::function<void(std::size_t, AtomSet)> choose = [&](std::size_t from, AtomSet block) {
            if (block.size() == m) {
                blocks.push_back(block);
                split(remaining - block);
                blocks.pop_back();
                return;
            }
            for (std::size_t i = from; i < rest.size(); ++i)
                choose(i + 1, block | AtomSet::single(rest[i]));
        };
        choose(0, AtomSet::single(x));
    };
    split(universe);
}

struct FoundPartition {};

}  // namespace

std::optional<int> nilpotence_class_by_search(std::shared_ptr<const Lattice> l)
{
    for (int k = 0;; ++k) {
        const int n = l->atom_count();
        if (n == 1)
            return k;
        if (n > 12)
            throw PreconditionError("partition search is limited to 12 atoms");
        const AtomSet z = center_atoms(*l);
        if (z.size() == 1)
            return std::nullopt;
        std::vector<AtomSet> chosen;
        try {
            for_each_equal_partition(l->top(), z.size(), [&](const std::vector<AtomSet>& blocks) {
                if (check_central_partition(*l, blocks, nullptr, CheckMode::Exhaustive).ok()) {
                    chosen = blocks;
                    throw FoundPartition{};
                }
            });
        } catch (const FoundPartition&) {
        }
        if (chosen.empty())
            throw ConsistencyError("no partition satisfies the three conditions");
        l = std::make_shared<BlockLattice>(l, chosen);
    }
}

PartitionSurvey survey_central_partitions(std::shared_ptr<const Lattice> l, const FiniteGroup& g)
{
    const int n = l->atom_count();
    if (n > 12)
        throw PreconditionError("partition survey is limited to 12 atoms");
    PartitionSurvey s;
    const AtomSet z = center_atoms(*l);
    const CentralPartition reference = build_central_partition(*l, g, CheckMode::Exhaustive);
    const std::vector<AtomSet> j0 = block_elements(l, reference.blocks);
    const auto answer = nilpotence_class_from_lattice(l, g, CheckMode::Exhaustive).nilpotence_class;
    const int k = n / z.size();

    for_each_equal_partition(l->top(), z.size(), [&](const std::vector<AtomSet>& blocks) {
        ++s.partitions;
        const PartitionCheck c = check_central_partition(*l, blocks, nullptr, CheckMode::Exhaustive);
        if (c.ok()) {
            ++s.valid;
            if (!atom_isomorphic(block_elements(l, blocks), j0, k))
                s.all_isomorphic = false;
            // The class of G is one more than the class of the quotient, except for the trivial group.
            std::optional<int> here = answer;
            if (n > 1) {
                auto rest = nilpotence_class_by_search(std::make_shared<BlockLattice>(l, blocks));
                here = rest ? std::optional<int>(*rest + 1) : std::nullopt;
            }
            if (here != answer)
                s.same_answer = false;
        } else if (c.equal_sizes && c.blocks_are_elements && c.joins_are_unions) {
            const bool has_center = std::find(blocks.begin(), blocks.end(), z) != blocks.end();
            if (has_center && !atom_isomorphic(block_elements(l, blocks), j0, k))
                ++s.weak_premise_breaks;
        }
    });
    return s;
}

}  // namespace subrack
