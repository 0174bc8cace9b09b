#include "helpers.hpp"

#include "subrack/error.hpp"
#include "subrack/group.hpp"

using namespace subrack;
using testing::letters;

namespace {

// A Latin square with identity 0 that is not associative: the smallest non-group loop.
const std::vector<std::vector<int>> kLoop5 = {
    {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};

}  // namespace

TEST_SUITE("group")
{
    TEST_CASE("S3 from the catalog")
    {
        const auto g = catalog_group("S3");
        CHECK(g.order() == 6);
        const auto cc = conjugacy_classes(g);
        REQUIRE(cc.count() == 3);
        CHECK(cc.classes[0] == letters("a"));
        CHECK(cc.classes[1] == letters("bcd"));
        CHECK(cc.classes[2] == letters("ef"));
        CHECK(cc.class_of[3] == 1);
    }

    TEST_CASE("trivial group")
    {
        const auto g = catalog_group("Z1");
        CHECK(g.order() == 1);
        CHECK(g.mul(0, 0) == 0);
        CHECK(conjugacy_classes(g).count() == 1);
    }

    TEST_CASE("abelian groups have singleton classes")
    {
        for (const char* name : {"Z6", "Z2xZ4", "Z4xZ4"}) {
            const auto cc = conjugacy_classes(catalog_group(name));
            CHECK(cc.count() == catalog_group(name).order());
        }
    }

    TEST_CASE("D4 class sizes")
    {
        std::vector<int> sizes;
        for (AtomSet c : conjugacy_classes(catalog_group("D4")).classes)
            sizes.push_back(c.size());
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == std::vector<int>{1, 1, 2, 2, 2});
    }

    TEST_CASE("generators (1 2 3 4), (1 3) close to a group of order 8")
    {
        const auto g = group_from_permutations("D4p", 4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)", 4)});
        CHECK(g.order() == 8);
    }

    TEST_CASE("inverse and power")
    {
        const auto g = catalog_group("Z8");
        for (int a = 0; a < 8; ++a) {
            CHECK(g.mul(a, g.inv(a)) == 0);
            CHECK(g.power(a, 8) == 0);
            CHECK(g.power(a, 3) == (3 * a) % 8);
        }
        const auto s3 = catalog_group("S3");
        CHECK(s3.conj(1, 4) == 5);  // (1 2)(1 2 3)(1 2) = (1 3 2)
    }

    TEST_CASE("parse_cycles is one-based")
    {
        CHECK(parse_cycles("(1 2 3)", 3) == Permutation{1, 2, 0});
        CHECK(parse_cycles("()", 3) == Permutation{0, 1, 2});
        CHECK(parse_cycles("(1 2)(3 4)", 4) == Permutation{1, 0, 3, 2});
        CHECK_THROWS_AS(parse_cycles("(1 5)", 4), InputError);
        CHECK_THROWS_AS(parse_cycles("(1 2", 4), InputError);
    }

    TEST_CASE("table validation")
    {
        CHECK_THROWS_AS(FiniteGroup::from_table("empty", {}), InputError);
        CHECK_THROWS_AS(FiniteGroup::from_table("ragged", {{0, 1}, {1}}), InputError);
        CHECK_THROWS_AS(FiniteGroup::from_table("range", {{0, 2}, {1, 0}}), InputError);
        CHECK_THROWS_AS(FiniteGroup::from_table("latin", {{0, 1}, {0, 1}}), InputError);
        CHECK_THROWS_AS(FiniteGroup::from_table("identity", {{1, 0}, {0, 1}}), InputError);
        CHECK_THROWS_AS(FiniteGroup::from_table("loop", kLoop5), InputError);
    }

    TEST_CASE("sampled associativity still rejects the loop")
    {
        // 36 of the 125 triples fail, so 250 seeded samples cannot all miss.
        CHECK_THROWS_AS(FiniteGroup::from_table("loop", kLoop5, 0, 7), InputError);
        CHECK_NOTHROW(FiniteGroup::from_table("z5", catalog_group("Z5").table(), 0, 7));
    }

    TEST_CASE("orders above 64 are rejected")
    {
        std::vector<std::vector<int>> t(65, std::vector<int>(65));
        for (int i = 0; i < 65; ++i)
            for (int j = 0; j < 65; ++j)
                t[i][j] = (i + j) % 65;
        CHECK_THROWS_AS(FiniteGroup::from_table("Z65", t), InputError);
    }

    TEST_CASE("permutation inputs are validated")
    {
        CHECK_THROWS_AS(group_from_permutations("bad", 3, {{0, 0, 1}}), InputError);
        CHECK_THROWS_AS(group_from_permutations("short", 3, {{1, 0}}), InputError);
        CHECK_THROWS_AS(group_from_permutations("big", 6, {parse_cycles("(1 2 3 4 5 6)", 6), parse_cycles("(1 2)", 6)},
                                                100),
                        InputError);
        CHECK_THROWS_AS(group_from_permutation_list("open", {{0, 1, 2}, {1, 2, 0}}), InputError);
        CHECK(group_from_permutation_list("C3", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}).order() == 3);
    }

    TEST_CASE("catalog tables are closed under the table round trip")
    {
        for (const auto& e : catalog_entries()) {
            if (e.order > 24)
                continue;
            const auto g = catalog_group(e.name);
            CHECK(g.order() == e.order);
            CHECK(FiniteGroup::from_table(e.name, g.table()).table() == g.table());
        }
        CHECK_THROWS_AS(catalog_group("nope"), InputError);
    }
}
