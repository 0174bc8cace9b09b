#include "helpers.hpp"

#include <map>

#include "subrack/cycle_forms.hpp"
#include "subrack/error.hpp"
#include "subrack/oracle.hpp"

using namespace subrack;
using testing::letters;

namespace {

const std::vector<const char*> kCenterless = {"S3", "D5", "A4", "S4"};

AtomPartition partition(std::vector<AtomSet> blocks)
{
    std::sort(blocks.begin(), blocks.end(), [](AtomSet x, AtomSet y) { return x.min() < y.min(); });
    return {blocks, std::vector<bool>(blocks.size(), false)};
}

/**
 * Independent search for the swap demanded by the cycle form condition: a
 * permutation exchanging a and b and the classes K(a) and K(b), fixing every
 * other atom, that maps every subrack to a subrack.
 */
bool brute_force_swap_exists(const Rack& r, int a, int b)
{
    const auto elements = testing::brute_force_subracks(r);
    const auto& orbits = r.orbits();
    AtomSet ka, kb;
    for (AtomSet o : orbits) {
        if (o.contains(a))
            ka = o;
        if (o.contains(b))
            kb = o;
    }
    std::vector<int> src = (ka | kb).to_vector();
    std::vector<int> img = src;
    std::sort(img.begin(), img.end());
    do {
        AtomPermutation pi(r.size());
        for (int x = 0; x < r.size(); ++x)
            pi[x] = x;
        for (std::size_t i = 0; i < src.size(); ++i)
            pi[src[i]] = img[i];
        if (pi[a] != b || pi[b] != a)
            continue;
        if (subrack::apply(pi, ka) != kb || subrack::apply(pi, kb) != ka)
            continue;
        bool ok = true;
        for (AtomSet s : elements)
            ok = ok && is_subrack(subrack::apply(pi, s), r);
        if (ok)
            return true;
    } while (std::next_permutation(img.begin(), img.end()));
    return false;
}

}  // namespace

TEST_SUITE("cycle_forms")
{
    TEST_CASE("B-sets in S3")
    {
        const auto l = testing::rack_lattice("S3");
        CHECK(b_set(letters("b"), letters("b"), l) == letters("b"));
        CHECK(b_set(letters("b"), letters("c"), l) == letters("bcd"));
        CHECK(b_set(letters("b"), letters("d"), l) == letters("bcd"));
        CHECK(b_set(letters("b"), letters("e"), l) == letters("ef"));
        CHECK(b_set(letters("b"), letters("f"), l) == letters("ef"));
    }

    TEST_CASE("pseudo cycle forms in S3")
    {
        const auto l = testing::rack_lattice("S3");
        const auto b = pseudo_cycle_form(1, l);
        CHECK(b.blocks == std::vector<AtomSet>{letters("a"), letters("b"), letters("cd"), letters("ef")});
        CHECK(b.marked == std::vector<bool>{true, true, true, true});
        for (int x : {4, 5}) {
            const auto e = pseudo_cycle_form(x, l);
            CHECK(e.blocks == std::vector<AtomSet>{letters("a"), letters("bcd"), letters("e"), letters("f")});
            CHECK(e.marked == std::vector<bool>{true, true, true, true});
        }
        CHECK(pseudo_cycle_form(2, l).blocks ==
              std::vector<AtomSet>{letters("a"), letters("bd"), letters("c"), letters("ef")});
        const auto id = pseudo_cycle_form(0, l);
        CHECK(id.blocks.size() == 6);
    }

    TEST_CASE("centerless precondition")
    {
        CHECK_THROWS_AS(require_centerless(testing::rack_lattice("D4")), PreconditionError);
        CHECK_NOTHROW(require_centerless(testing::rack_lattice("Z1")));
        CHECK(identity_atom(testing::rack_lattice("A4")) == 0);
    }

    TEST_CASE("partition order")
    {
        const auto b = partition({letters("a"), letters("b"), letters("cd"), letters("ef")});
        const auto e = partition({letters("a"), letters("bcd"), letters("e"), letters("f")});
        CHECK(partition_leq(b, b));
        CHECK_FALSE(partition_leq(b, e));
        CHECK_FALSE(partition_leq(e, b));
        const auto coarse = partition({letters("a"), letters("bcd"), letters("ef")});
        CHECK(partition_leq(b, coarse));
        CHECK(partition_leq(e, coarse));
    }

    TEST_CASE("associated abelian sets in S3")
    {
        const auto l = testing::rack_lattice("S3");
        CHECK(associated_abelian(4, l) == letters("aef"));
        CHECK(associated_abelian(1, l) == letters("ab"));
        CHECK(associated_abelian(0, l) == letters("a"));
    }

    TEST_CASE("refinement keeps the S3 forms")
    {
        const auto l = testing::rack_lattice("S3");
        for (int a = 0; a < 6; ++a)
            CHECK(refine_to_cycle_form(a, l) == pseudo_cycle_form(a, l));
    }

    TEST_CASE("cycle form condition in S3")
    {
        const auto c = cycle_form_condition(testing::rack_lattice("S3"), catalog_group("S3"));
        CHECK(c.holds);
        CHECK(c.tied_pairs == std::vector<std::pair<int, int>>{{4, 5}});
        CHECK_FALSE(c.failing_pair.has_value());
    }

    TEST_CASE("cycle form condition on A4 agrees with a brute-force swap search")
    {
        const auto g = catalog_group("A4");
        const Rack r = conjugation_quandle(g);
        const auto c = cycle_form_condition(RackLattice(r), g);
        bool brute = true;
        for (auto [a, b] : c.tied_pairs)
            brute = brute && brute_force_swap_exists(r, a, b);
        CHECK(!c.tied_pairs.empty());
        CHECK(c.holds == brute);
        CHECK(c.holds);
    }

    TEST_CASE("theta on S3")
    {
        const auto th = theta_assignment(testing::rack_lattice("S3"));
        const PrimeAssignment expected = {{1, {2}}, {2, {2}}, {3, {2}}, {4, {3}}, {5, {3}}};
        CHECK(th == expected);
        CHECK(theta_assignment(testing::rack_lattice("Z1")).empty());
    }

    TEST_CASE("theta multiset equals prime supports of element orders")
    {
        for (const char* name : kCenterless) {
            CAPTURE(name);
            const GroupOracle o(catalog_group(name));
            std::vector<std::vector<int>> got, want;
            for (const auto& [atom, primes] : theta_assignment(testing::rack_lattice(name)))
                got.push_back(primes);
            for (int x = 1; x < o.group().order(); ++x)
                want.push_back(prime_divisors(o.element_order(x)));
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
    }

    TEST_CASE("Sylow subracks")
    {
        const auto l = testing::rack_lattice("S3");
        const auto th = theta_assignment(l);
        CHECK(locate_sylow_subrack(3, th, l) == letters("aef"));
        CHECK(locate_sylow_subrack(2, th, l) == letters("ab"));
        for (const char* name : {"A4", "S4", "D5"}) {
            const auto g = catalog_group(name);
            const auto sl = testing::rack_lattice(name);
            const auto t = theta_assignment(sl);
            const GroupOracle o(g);
            for (int p : prime_divisors(g.order())) {
                const AtomSet s = locate_sylow_subrack(p, t, sl);
                CHECK(s.size() == p_part(g.order(), p));
                CHECK(o.is_subgroup(s));
            }
        }
    }

    TEST_CASE("interval classes")
    {
        const auto l = testing::rack_lattice("S3");
        CHECK(interval_classes(letters("aef"), l) == std::vector<AtomSet>{letters("a"), letters("e"), letters("f")});
        CHECK(interval_classes(letters("abcdef"), l) ==
              std::vector<AtomSet>{letters("a"), letters("bcd"), letters("ef")});
    }

    TEST_CASE("p-nilpotence")
    {
        auto verdict = [](const char* name, int p) {
            auto l = std::make_shared<RackLattice>(conjugation_quandle(catalog_group(name)));
            return p_nilpotent_from_lattice(p, l, catalog_group(name)).verdict;
        };
        CHECK(verdict("S3", 2) == PNilpotence::Yes);
        CHECK(verdict("S3", 3) == PNilpotence::No);
        CHECK(verdict("A4", 3) == PNilpotence::Yes);
        CHECK(verdict("A4", 2) == PNilpotence::No);
        CHECK(verdict("Q8", 2) == PNilpotence::Yes);
        CHECK(verdict("S3", 5) == PNilpotence::Yes);
    }

    TEST_CASE("p-nilpotence agrees with the oracle wherever the condition holds")
    {
        for (const auto& name : testing::catalog_names(1, 24)) {
            const auto g = catalog_group(name);
            const GroupOracle o(g);
            auto l = std::make_shared<RackLattice>(conjugation_quandle(g));
            for (int p : prime_divisors(g.order())) {
                CAPTURE(name);
                CAPTURE(p);
                const auto r = p_nilpotent_from_lattice(p, l, g);
                if (r.verdict != PNilpotence::ConditionNotMet)
                    CHECK((r.verdict == PNilpotence::Yes) == o.has_normal_p_complement(p));
            }
        }
    }

    TEST_CASE("cycle form blocks follow the oracle cycles")
    {
        for (const char* name : kCenterless) {
            CAPTURE(name);
            const GroupOracle o(catalog_group(name));
            const auto l = testing::rack_lattice(name);
            const auto pseudo = all_pseudo_cycle_forms(l);
            const auto forms = all_cycle_forms(l, pseudo);
            int splits = 0, bad_marks = 0;
            for (int a = 0; a < l.atom_count(); ++a) {
                const auto cycles = o.conjugation_cycles(a);
                for (const AtomPartition* p : {&pseudo[a], &forms[a]})
                    for (std::size_t i = 0; i < p->blocks.size(); ++i) {
                        for (AtomSet c : cycles)
                            splits += c.intersects(p->blocks[i]) && !c.subset_of(p->blocks[i]);
                        if (p->marked[i])
                            bad_marks += std::find(cycles.begin(), cycles.end(), p->blocks[i]) == cycles.end();
                    }
            }
            CHECK(splits == 0);
            CHECK(bad_marks == 0);
        }
    }

    TEST_CASE("pseudo order implies cycle form order")
    {
        for (const char* name : kCenterless) {
            const auto l = testing::rack_lattice(name);
            const auto pseudo = all_pseudo_cycle_forms(l);
            const auto forms = all_cycle_forms(l, pseudo);
            int violations = 0;
            for (int u = 0; u < l.atom_count(); ++u)
                for (int v = 0; v < l.atom_count(); ++v)
                    violations += partition_leq(pseudo[v], pseudo[u]) && !partition_leq(forms[v], forms[u]);
            CHECK(violations == 0);
        }
    }

    TEST_CASE("associated abelian sets are abelian subgroups in the center of the centralizer")
    {
        for (const char* name : kCenterless) {
            CAPTURE(name);
            const GroupOracle o(catalog_group(name));
            const auto l = testing::rack_lattice(name);
            const auto pseudo = all_pseudo_cycle_forms(l);
            for (int a = 0; a < l.atom_count(); ++a) {
                const AtomSet s = associated_abelian(a, pseudo);
                CHECK(s.contains(a));
                CHECK(o.is_subgroup(s));
                CHECK(o.is_abelian(s));
                CHECK(s.subset_of(o.centralizer(o.centralizer(AtomSet::single(a)))));
                CHECK(s.size() % o.element_order(a) == 0);
            }
        }
    }

    TEST_CASE("equal cycle lengths inside refined blocks")
    {
        for (const char* name : kCenterless) {
            const auto g = catalog_group(name);
            const auto l = testing::rack_lattice(name);
            const auto pseudo = all_pseudo_cycle_forms(l);
            int triples = 0, violations = 0;
            for (int a = 0; a < l.atom_count(); ++a)
                for (int x : associated_abelian(a, pseudo))
                    for (const auto& v : equal_cycle_length_check(x, a, l, g, pseudo)) {
                        ++triples;
                        violations += !v.holds;
                    }
            CHECK(triples > 0);
            CHECK(violations == 0);
        }
        CHECK_THROWS_AS(equal_cycle_length_check(1, 4, testing::rack_lattice("S3"), catalog_group("S3")),
                        PreconditionError);
    }
}
