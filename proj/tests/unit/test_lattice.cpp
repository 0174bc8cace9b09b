#include "helpers.hpp"

#include <random>

#include "subrack/error.hpp"
#include "subrack/lattice.hpp"
#include "subrack/oracle.hpp"

using namespace subrack;
using testing::letters;

TEST_SUITE("lattice")
{
    TEST_CASE("enumeration matches the brute-force filter up to order 8")
    {
        for (const auto& name : testing::catalog_names(1, 8)) {
            CAPTURE(name);
            const Rack r = conjugation_quandle(catalog_group(name));
            CHECK(enumerate_lattice(r).elements() == testing::brute_force_subracks(r));
        }
    }

    TEST_CASE("abelian groups give power sets")
    {
        for (const char* name : {"Z7", "Z2xZ2xZ2", "Z12", "Z4xZ4"}) {
            const int n = catalog_group(name).order();
            CHECK(count_elements(testing::rack_lattice(name)) == (std::size_t{1} << n));
        }
    }

    TEST_CASE("trivial group")
    {
        const auto l = ExplicitLattice::enumerate(testing::rack_lattice("Z1"));
        CHECK(l.elements() == std::vector<AtomSet>{AtomSet{}, AtomSet{0}});
        CHECK(l.hasse() == std::vector<std::pair<int, int>>{{0, 1}});
    }

    TEST_CASE("S3 queries")
    {
        const auto l = testing::rack_lattice("S3");
        CHECK(l.join(letters("b"), letters("c")) == letters("bcd"));
        CHECK(l.meet(letters("abcd"), letters("aef")) == letters("a"));
        CHECK(l.is_element(letters("abcdef")));
        CHECK_FALSE(l.is_element(letters("bc")));
        CHECK(testing::sorted(l.coatoms()) ==
              std::vector<AtomSet>{letters("abcd"), letters("aef"), letters("bcdef")});
        CHECK(closure(letters("b"), l) == letters("bcd"));
        CHECK(closure(letters("ab"), l) == letters("abcd"));
        CHECK(closure(letters("aef"), l) == letters("aef"));
        CHECK(is_closed(letters("bcd"), l));
        CHECK_FALSE(is_closed(letters("ab"), l));
        CHECK_THROWS_AS(closure(letters("bc"), l), PreconditionError);
        CHECK(l.atoms_commute(4, 5));
        CHECK_FALSE(l.atoms_commute(1, 2));
    }

    TEST_CASE("coatoms are complements of classes")
    {
        for (const auto& name : testing::catalog_names(1, 24)) {
            CAPTURE(name);
            const auto g = catalog_group(name);
            const auto l = testing::rack_lattice(name);
            CHECK(testing::sorted(l.coatoms()) == maximal_subracks(g));
            CHECK(l.coatoms().size() == conjugacy_classes(g).classes.size());
        }
        CHECK(testing::rack_lattice("D4").coatoms().size() == 5);
        CHECK(testing::rack_lattice("Z5").coatoms().size() == 5);
    }

    TEST_CASE("coatoms by enumeration agree with the class formula")
    {
        for (const char* name : {"S3", "D4", "Q8", "A4", "Dic3"}) {
            const auto l = testing::rack_lattice(name);
            CHECK(coatoms_by_enumeration(l) == testing::sorted(l.coatoms()));
        }
    }

    TEST_CASE("Hasse covers match brute force")
    {
        for (const char* name : {"S3", "D4", "Z2xZ2"}) {
            const auto l = ExplicitLattice::enumerate(testing::rack_lattice(name));
            const auto& e = l.elements();
            std::vector<std::pair<int, int>> covers;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::size_t j = 0; j < e.size(); ++j) {
                    if (!e[i].proper_subset_of(e[j]))
                        continue;
                    bool between = false;
                    for (AtomSet w : e)
                        between = between || (e[i].proper_subset_of(w) && w.proper_subset_of(e[j]));
                    if (!between)
                        covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
                }
            CHECK(l.hasse() == covers);
        }
    }

    TEST_CASE("explicit and implicit views agree")
    {
        // exhaustive up to order 8, 10^4 seeded random subsets for orders 9 to 16
        for (const auto& name : testing::catalog_names(1, 16)) {
            CAPTURE(name);
            const Rack r = conjugation_quandle(catalog_group(name));
            const RackLattice imp(r);
            const ExplicitLattice exp = enumerate_lattice(r);
            const int n = r.size();
            std::mt19937_64 rng(42);
            const AtomSet all = AtomSet::full(n);
            const bool exhaustive = n <= 8;
            const std::uint64_t rounds = exhaustive ? (std::uint64_t{1} << n) : 10000;
            int bad = 0;
            for (std::uint64_t i = 0; i < rounds; ++i) {
                const AtomSet s = exhaustive ? AtomSet(i) : AtomSet(rng()) & all;
                const AtomSet t = AtomSet(rng()) & all;
                bad += exp.is_element(s) != imp.is_element(s);
                bad += exp.join(s, t) != imp.join(s, t);
                bad += exp.meet(s, t) != imp.meet(s, t);
                const AtomSet e = imp.generate(s);
                bad += closure(e, exp) != closure(e, imp);
            }
            CHECK(bad == 0);
        }
    }

    TEST_CASE("closure of an element is the union of the classes it meets")
    {
        for (const auto& name : testing::catalog_names(1, 12)) {
            const auto g = catalog_group(name);
            const auto l = testing::rack_lattice(name);
            for_each_element(l, [&](AtomSet s) { CHECK(closure(s, l) == class_closure(s, g)); });
        }
    }

    TEST_CASE("every subgroup is an element")
    {
        for (const auto& name : testing::catalog_names(1, 24)) {
            const auto l = testing::rack_lattice(name);
            const GroupOracle o(catalog_group(name));
            for (AtomSet h : o.subgroups())
                CHECK(l.is_element(h));
        }
    }

    TEST_CASE("recovery from pair joins")
    {
        // S is an element iff it contains the join of every pair of its atoms
        for (const auto& name : testing::catalog_names(1, 8)) {
            const auto l = testing::rack_lattice(name);
            const int n = l.atom_count();
            std::vector<AtomSet> rebuilt;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                const AtomSet s(m);
                bool ok = true;
                for (int x : s)
                    for (int y : s)
                        ok = ok && l.join(AtomSet::single(x), AtomSet::single(y)).subset_of(s);
                if (ok)
                    rebuilt.push_back(s);
            }
            CHECK(rebuilt == ExplicitLattice::enumerate(l).elements());
        }
    }

    TEST_CASE("enumeration cap")
    {
        CHECK_THROWS_AS(count_elements(testing::rack_lattice("Z8"), 100), CapExceeded);
        CHECK(count_elements(testing::rack_lattice("Z8"), 256) == 256);
    }

    TEST_CASE("int poset")
    {
        const auto s3 = int_poset(testing::rack_lattice("S3"));
        CHECK(s3.elements.size() == 8);
        CHECK(s3.boolean);
        CHECK(s3.atoms == std::vector<AtomSet>{letters("a"), letters("bcd"), letters("ef")});
        const auto v4 = int_poset(testing::rack_lattice("Z2xZ2"));
        CHECK(v4.elements.size() == 16);
        CHECK(v4.boolean);
    }

    TEST_CASE("intervals")
    {
        const auto l = testing::rack_lattice("S3");
        CHECK(interval({}, letters("ef"), l).elements() ==
              std::vector<AtomSet>{AtomSet{}, letters("e"), letters("f"), letters("ef")});
        CHECK(interval(letters("b"), letters("b"), l).size() == 1);
        CHECK(interval({}, letters("bcd"), l).elements() ==
              std::vector<AtomSet>{AtomSet{}, letters("b"), letters("c"), letters("d"), letters("bcd")});
        CHECK(interval(letters("a"), letters("abcdef"), l).size() == 9);
    }

    TEST_CASE("interval view relabels atoms")
    {
        const auto l = testing::rack_lattice("S3");
        const IntervalView v(l, letters("bcd"));
        CHECK(v.atom_count() == 3);
        CHECK(v.generate(AtomSet{0, 1}) == AtomSet{0, 1, 2});
        CHECK(v.to_parent(AtomSet{0, 2}) == letters("bd"));
        CHECK(v.coatoms().size() == 3);
        CHECK_THROWS_AS(IntervalView(l, letters("abcdef"), 4).coatoms(), CapExceeded);
    }

    TEST_CASE("Boolean intervals")
    {
        const auto l = testing::rack_lattice("S3");
        CHECK(is_boolean_interval(letters("aef"), l));
        CHECK_FALSE(is_boolean_interval(letters("bc"), l));
        CHECK(is_boolean_interval(letters("b"), l));
        CHECK(is_boolean_interval({}, l));
    }
}
