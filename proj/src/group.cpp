#include "dy/group.hpp"

#include <array>
#include <algorithm>

namespace dy {

FiniteGroup make_group(std::vector<std::string> names, std::vector<std::size_t> table) {
    const std::size_t n = names.size();
    if (n == 0) throw Error("group must have at least one element");
    if (table.size() != n * n) throw Error("group table must be square with one row per label");
    for (std::size_t v : table)
        if (v >= n) throw Error("group table entry out of range: " + std::to_string(v));

    FiniteGroup g;
    g.order = n;
    g.names = std::move(names);
    g.table = std::move(table);

    // identity
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i)
            if (g.mul(e, i) != i || g.mul(i, e) != i) {
                ok = false;
                break;
            }
        if (ok) {
            g.identity = e;
            found = true;
        }
    }
    if (!found) throw Error("no identity element in group table");

    // inverses
    g.inverse.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        bool has = false;
        for (std::size_t j = 0; j < n; ++j)
            if (g.mul(i, j) == g.identity && g.mul(j, i) == g.identity) {
                g.inverse[i] = j;
                has = true;
                break;
            }
        if (!has) throw Error("no inverse for element " + std::to_string(i) + " ('" + g.names[i] + "')");
    }

    // associativity, exhaustive
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw Error("group table not associative at triple (" + std::to_string(a) +
                                "," + std::to_string(b) + "," + std::to_string(c) + ")");
    return g;
}

FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) throw Error("cyclic group order must be positive");
    std::vector<std::string> names;
    std::vector<std::size_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(i == 0 ? "e" : "g" + (n > 2 ? std::to_string(i) : std::string()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
    return make_group(std::move(names), std::move(table));
}

// Elements r^a (indices 0..n-1) then r^a s (indices n..2n-1), with s r = r^{-1} s.
FiniteGroup dihedral_group(std::size_t n) {
    if (n == 0) throw Error("dihedral parameter must be positive");
    const std::size_t ord = 2 * n;
    std::vector<std::string> names(ord);
    for (std::size_t a = 0; a < n; ++a) {
        names[a] = a == 0 ? "e" : "r" + std::to_string(a);
        names[n + a] = a == 0 ? "s" : "r" + std::to_string(a) + "s";
    }
    auto idx = [n](std::size_t a, std::size_t b) { return a + n * b; };
    std::vector<std::size_t> table(ord * ord);
    for (std::size_t b1 = 0; b1 < 2; ++b1)
        for (std::size_t a1 = 0; a1 < n; ++a1)
            for (std::size_t b2 = 0; b2 < 2; ++b2)
                for (std::size_t a2 = 0; a2 < n; ++a2) {
                    std::size_t a = b1 ? (a1 + n - a2 % n) % n : (a1 + a2) % n;
                    std::size_t b = b1 ^ b2;
                    table[idx(a1, b1) * ord + idx(a2, b2)] = idx(a, b);
                }
    return make_group(std::move(names), std::move(table));
}

// Fixed element order: e, (01), (02), (12), (012), (021); composition (fg)(i) = f(g(i)).
FiniteGroup symmetric3() {
    const std::array<std::array<std::size_t, 3>, 6> perms = {{
        {0, 1, 2},  // e
        {1, 0, 2},  // (01)
        {2, 1, 0},  // (02)
        {0, 2, 1},  // (12)
        {1, 2, 0},  // (012): 0->1, 1->2, 2->0
        {2, 0, 1},  // (021)
    }};
    const std::vector<std::string> names = {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};
    auto find = [&perms](const std::array<std::size_t, 3>& p) -> std::size_t {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return i;
        throw Error("permutation lookup failed");
    };
    std::vector<std::size_t> table(36);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::array<std::size_t, 3> comp{};
            for (std::size_t x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            table[i * 6 + j] = find(comp);
        }
    return make_group(names, std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t n = a.order * b.order;
    std::vector<std::string> names(n);
    std::vector<std::size_t> table(n * n);
    auto idx = [&b](std::size_t i, std::size_t j) { return i * b.order + j; };
    for (std::size_t i = 0; i < a.order; ++i)
        for (std::size_t j = 0; j < b.order; ++j)
            names[idx(i, j)] = "(" + a.names[i] + "," + b.names[j] + ")";
    for (std::size_t i1 = 0; i1 < a.order; ++i1)
        for (std::size_t j1 = 0; j1 < b.order; ++j1)
            for (std::size_t i2 = 0; i2 < a.order; ++i2)
                for (std::size_t j2 = 0; j2 < b.order; ++j2)
                    table[idx(i1, j1) * n + idx(i2, j2)] = idx(a.mul(i1, i2), b.mul(j1, j2));
    return make_group(std::move(names), std::move(table));
}

FiniteGroup klein_four() {
    auto g = direct_product(cyclic_group(2), cyclic_group(2));
    g.names = {"e", "b", "a", "ab"};
    return g;
}

}  // namespace dy
