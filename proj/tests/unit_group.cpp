#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dy/group.hpp"

using namespace dy;

namespace {

std::size_t element_order(const FiniteGroup& g, std::size_t x) {
    std::size_t acc = x, ord = 1;
    while (acc != g.identity) {
        acc = g.mul(acc, x);
        ++ord;
    }
    return ord;
}

}  // namespace

TEST_CASE("cyclic(2)") {
    auto g = cyclic_group(2);
    CHECK(g.order == 2);
    CHECK(g.identity == 0);
    CHECK(g.inv(1) == 1);
}

TEST_CASE("symmetric3 has three elements of order two") {
    auto g = symmetric3();
    CHECK(g.order == 6);
    std::size_t order2 = 0;
    for (std::size_t x = 0; x < g.order; ++x)
        if (x != g.identity && element_order(g, x) == 2) ++order2;
    CHECK(order2 == 3);
}

TEST_CASE("invalid tables are rejected with a witness") {
    CHECK_THROWS_WITH_AS(make_group({"e", "a"}, {0, 1, 1, 1}),
                         doctest::Contains("no inverse for element 1"), Error);
    // 0 is a left-absorbing element: not associative and no identity
    CHECK_THROWS_AS(make_group({"a", "b"}, {0, 0, 1, 0}), Error);
    CHECK_THROWS_AS(make_group({"e"}, {0, 0}), Error);
}

TEST_CASE("conjugation") {
    auto s3 = symmetric3();
    SUBCASE("by the identity") {
        for (std::size_t g = 0; g < s3.order; ++g) CHECK(s3.conjugate(g, s3.identity) == g);
    }
    SUBCASE("in an abelian group it is trivial") {
        auto z6 = cyclic_group(6);
        for (std::size_t g = 0; g < 6; ++g)
            for (std::size_t x = 0; x < 6; ++x) CHECK(z6.conjugate(g, x) == g);
    }
    SUBCASE("transposition conjugated by a transposition") {
        // labels: 1 = (01), 2 = (02), 3 = (12); conjugating (01) by (02) gives (12)
        CHECK(s3.names[1] == "(01)");
        CHECK(s3.names[2] == "(02)");
        CHECK(s3.conjugate(1, 2) == 3);
    }
    SUBCASE("conjugation is an automorphism") {
        for (std::size_t x = 0; x < s3.order; ++x)
            for (std::size_t g = 0; g < s3.order; ++g)
                for (std::size_t h = 0; h < s3.order; ++h)
                    CHECK(s3.conjugate(s3.mul(g, h), x) ==
                          s3.mul(s3.conjugate(g, x), s3.conjugate(h, x)));
    }
    SUBCASE("composition rule") {
        for (std::size_t x = 0; x < s3.order; ++x)
            for (std::size_t y = 0; y < s3.order; ++y)
                for (std::size_t g = 0; g < s3.order; ++g)
                    CHECK(s3.conjugate(s3.conjugate(g, x), y) == s3.conjugate(g, s3.mul(y, x)));
    }
}

TEST_CASE("dihedral and products") {
    auto d3 = dihedral_group(3);
    CHECK(d3.order == 6);
    std::size_t order2 = 0, order3 = 0;
    for (std::size_t x = 0; x < d3.order; ++x) {
        if (x == d3.identity) continue;
        auto o = element_order(d3, x);
        if (o == 2) ++order2;
        if (o == 3) ++order3;
    }
    CHECK(order2 == 3);
    CHECK(order3 == 2);

    auto v4 = klein_four();
    CHECK(v4.order == 4);
    for (std::size_t x = 0; x < 4; ++x)
        if (x != v4.identity) CHECK(element_order(v4, x) == 2);

    auto z6 = direct_product(cyclic_group(2), cyclic_group(3));
    CHECK(z6.order == 6);
    CHECK(element_order(z6, z6.mul(3, 1)) > 1);
}

TEST_CASE("tuple products") {
    auto s3 = symmetric3();
    std::vector<std::size_t> empty;
    CHECK(s3.product(empty.begin(), empty.end()) == s3.identity);
    std::vector<std::size_t> t = {1, 2, 3};
    CHECK(s3.product(t.begin(), t.end()) == s3.mul(s3.mul(1, 2), 3));
}
