#include "subrack/catalog.hpp"

#include <algorithm>
#include <functional>

#include "subrack/error.hpp"

namespace subrack {

namespace {

template <class Mul>
FiniteGroup from_rule(std::string name, int n, Mul mul)
{
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = mul(i, j);
    return FiniteGroup::from_table(std::move(name), t);
}

int mod(int a, int m) { return ((a % m) + m) % m; }

FiniteGroup symmetric3()
{
    // a = id, b = (1 2), c = (1 3), d = (2 3), e = (1 2 3), f = (1 3 2)
    std::vector<Permutation> elems;
    for (const char* c : {"()", "(1 2)", "(1 3)", "(2 3)", "(1 2 3)", "(1 3 2)"})
        elems.push_back(parse_cycles(c, 3));
    return group_from_permutation_list("S3", elems);
}

FiniteGroup modular16()
{
    // a^k b^e at index k + 8e, with a^8 = b^2 = 1 and b a b^-1 = a^5
    return from_rule("M4(16)", 16, [](int x, int y) {
        int k = x % 8, e = x / 8, m = y % 8, f = y / 8;
        int twisted = e ? 5 * m : m;
        return mod(k + twisted, 8) + 8 * ((e + f) % 2);
    });
}

struct Builder {
    CatalogEntry entry;
    std::function<FiniteGroup()> build;
};

const std::vector<Builder>& builders()
{
    static const std::vector<Builder> all = [] {
        std::vector<Builder> b;
        auto add = [&](std::string name, int order, std::string desc, std::function<FiniteGroup()> fn) {
            b.push_back({{std::move(name), order, std::move(desc)}, std::move(fn)});
        };
        for (int n = 1; n <= 16; ++n)
            add("Z" + std::to_string(n), n, "cyclic; index k is the residue k", [n] { return cyclic_group(n); });
        add("Z2xZ2", 4, "(x, y) at index 2x + y", [] { return direct_product(cyclic_group(2), cyclic_group(2), "Z2xZ2"); });
        add("Z2xZ4", 8, "(x, y) at index 4x + y", [] { return direct_product(cyclic_group(2), cyclic_group(4), "Z2xZ4"); });
        add("Z2xZ2xZ2", 8, "(x, y, z) at index 4x + 2y + z", [] {
            return direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2), "Z2xZ2"), "Z2xZ2xZ2");
        });
        add("Z4xZ4", 16, "(x, y) at index 4x + y", [] { return direct_product(cyclic_group(4), cyclic_group(4), "Z4xZ4"); });
        add("S3", 6, "a=(), b=(1 2), c=(1 3), d=(2 3), e=(1 2 3), f=(1 3 2)", symmetric3);
        add("D4", 8, "dihedral of order 8; index k is r^k, 4+k is s r^k", [] { return dihedral_group(4, "D4"); });
        add("Q8", 8, "quaternion; index k + 4e is a^k x^e, x^2 = a^2", [] { return dicyclic_group(2, "Q8"); });
        add("D5", 10, "dihedral of order 10; index k is r^k, 5+k is s r^k", [] { return dihedral_group(5, "D5"); });
        add("D6", 12, "dihedral of order 12; index k is r^k, 6+k is s r^k", [] { return dihedral_group(6, "D6"); });
        add("Dic3", 12, "dicyclic; index k + 6e is a^k x^e, x^2 = a^3", [] { return dicyclic_group(3, "Dic3"); });
        add("A4", 12, "even permutations of 4 points, identity then lexicographic image order", [] {
            return group_from_permutations("A4", 4, {parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)});
        });
        add("S3xZ2", 12, "(s, z) at index 2s + z, S3 ordered as in catalog S3", [] {
            return direct_product(symmetric3(), cyclic_group(2), "S3xZ2");
        });
        add("D8", 16, "dihedral of order 16; index k is r^k, 8+k is s r^k", [] { return dihedral_group(8, "D8"); });
        add("Q16", 16, "generalized quaternion; index k + 8e is a^k x^e, x^2 = a^4", [] { return dicyclic_group(4, "Q16"); });
        add("M4(16)", 16, "modular; index k + 8e is a^k b^e, b a b^-1 = a^5", modular16);
        add("S4", 24, "permutations of 4 points, identity then lexicographic image order", [] {
            return group_from_permutations("S4", 4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)});
        });
        add("A5", 60, "even permutations of 5 points, identity then lexicographic image order; implicit mode only", [] {
            return group_from_permutations("A5", 5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)});
        });
        std::stable_sort(b.begin(), b.end(), [](const Builder& x, const Builder& y) { return x.entry.order < y.entry.order; });
        return b;
    }();
    return all;
}

}  // namespace

FiniteGroup cyclic_group(int n)
{
    return from_rule("Z" + std::to_string(n), n, [n](int a, int b) { return (a + b) % n; });
}

FiniteGroup dihedral_group(int n, std::string name)
{
    return from_rule(std::move(name), 2 * n, [n](int x, int y) {
        bool sx = x >= n, sy = y >= n;
        int k = x % n, m = y % n;
        if (!sx && !sy)
            return mod(k + m, n);
        if (!sx && sy)  // r^k s r^m = s r^(m-k)
            return n + mod(m - k, n);
        if (sx && !sy)  // s r^k r^m
            return n + mod(k + m, n);
        return mod(m - k, n);  // s r^k s r^m = r^(m-k)
    });
}

FiniteGroup dicyclic_group(int n, std::string name)
{
    const int m2 = 2 * n;
    return from_rule(std::move(name), 4 * n, [n, m2](int x, int y) {
        int k = x % m2, e = x / m2, m = y % m2, f = y / m2;
        if (e == 0)
            return mod(k + m, m2) + m2 * f;
        if (f == 0)  // a^k x a^m = a^(k-m) x
            return mod(k - m, m2) + m2;
        return mod(k - m + n, m2);  // a^(k-m) x^2
    });
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::string name)
{
    const int nh = h.order();
    return from_rule(std::move(name), g.order() * nh, [&](int x, int y) {
        return g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh);
    });
}

const std::vector<CatalogEntry>& catalog_entries()
{
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> e;
        for (const auto& b : builders())
            e.push_back(b.entry);
        return e;
    }();
    return entries;
}

FiniteGroup catalog_group(std::string_view name)
{
    for (const auto& b : builders())
        if (b.entry.name == name)
            return b.build();
    throw InputError("unknown catalog group '" + std::string(name) + "'");
}

}  // namespace subrack
