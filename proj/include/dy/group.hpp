#pragma once

#include "dy/field.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dy {

/// Finite group as a validated multiplication table. Element order within
/// presets is fixed so downstream basis orderings are reproducible.
struct FiniteGroup {
    std::size_t order = 0;
    std::vector<std::string> names;
    std::vector<std::size_t> table;  // row-major, table[i*order+j] = index of g_i * g_j
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;

    std::size_t mul(std::size_t i, std::size_t j) const { return table[i * order + j]; }
    std::size_t inv(std::size_t i) const { return inverse[i]; }
    /// x * g * x^{-1}
    std::size_t conjugate(std::size_t g, std::size_t x) const {
        return mul(mul(x, g), inverse[x]);
    }
    /// Product of a tuple of element indices; the empty product is the identity.
    template <class It>
    std::size_t product(It begin, It end) const {
        std::size_t acc = identity;
        for (It it = begin; it != end; ++it) acc = mul(acc, *it);
        return acc;
    }
};

/// Validates the table and computes identity/inverses. Throws dy::Error with a
/// witness (element or triple) on the first axiom failure.
FiniteGroup make_group(std::vector<std::string> names, std::vector<std::size_t> table);

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);  // order 2n, n >= 1
FiniteGroup symmetric3();
FiniteGroup klein_four();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace dy
