#include "helpers.hpp"

using subrack::AtomSet;
using testing::letters;

TEST_SUITE("atom_set")
{
    TEST_CASE("membership and counting")
    {
        AtomSet s{0, 3, 63};
        CHECK(s.size() == 3);
        CHECK(s.contains(63));
        CHECK_FALSE(s.contains(1));
        CHECK(s.min() == 0);
        CHECK(s.max() == 63);
        s.erase(0);
        CHECK(s.min() == 3);
        CHECK(AtomSet::full(64).size() == 64);
        CHECK(AtomSet::full(0).empty());
    }

    TEST_CASE("brace init lists members, parentheses take a mask")
    {
        CHECK(AtomSet{5} == AtomSet::single(5));
        CHECK(AtomSet(5) == AtomSet{0, 2});
    }

    TEST_CASE("set algebra")
    {
        const AtomSet a = letters("abc"), b = letters("bcd");
        CHECK((a & b) == letters("bc"));
        CHECK((a | b) == letters("abcd"));
        CHECK((a - b) == letters("a"));
        CHECK((a ^ b) == letters("ad"));
        CHECK(letters("bc").subset_of(a));
        CHECK(letters("bc").proper_subset_of(a));
        CHECK_FALSE(a.proper_subset_of(a));
        CHECK(a.complement(6) == letters("def"));
        CHECK(a.below(2) == letters("ab"));
    }

    TEST_CASE("iteration is increasing")
    {
        CHECK(AtomSet{9, 1, 4}.to_vector() == std::vector<int>{1, 4, 9});
    }

    TEST_CASE("order is the numeric mask")
    {
        CHECK(AtomSet{} < AtomSet{0});
        CHECK(AtomSet{0, 1, 2} < AtomSet{3});
    }

    TEST_CASE("compress and expand are inverse on the mask")
    {
        const AtomSet mask{1, 4, 6, 9};
        for (std::uint64_t local = 0; local < 16; ++local) {
            const AtomSet s(local);
            CHECK(subrack::compress(subrack::expand(s, mask), mask) == s);
            CHECK(subrack::expand(s, mask).subset_of(mask));
        }
        CHECK(subrack::compress(AtomSet{4, 9, 5}, mask) == AtomSet{1, 3});
    }
}
