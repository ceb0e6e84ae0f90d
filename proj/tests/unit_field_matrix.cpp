#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dy/field.hpp"
#include "dy/matrix.hpp"

#include <random>

using namespace dy;

TEST_CASE("rational canonical form") {
    CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(-1), BigInt(-2)) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(3), BigInt(-6)).str() == "-1/2");
    CHECK(Rational(BigInt(0), BigInt(7)).den() == 1);
    CHECK(Rational::parse("-3/9").str() == "-1/3");
    CHECK(Rational::parse("5").str() == "5");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
    CHECK_THROWS_AS(Rational::parse("x/y"), Error);
}

TEST_CASE("rational arithmetic stays exact") {
    Rational a = Rational::parse("1/3"), b = Rational::parse("1/6");
    CHECK((a + b).str() == "1/2");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "2");
}

TEST_CASE("prime field basics") {
    PrimeField f5(5);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.mul(f5.inv(2), 2) == 1);
    CHECK(f5.parse("1/2") == 3);
    CHECK(f5.from_long(-1) == 4);
    CHECK_THROWS_AS(PrimeField(4), Error);
    CHECK_THROWS_AS(f5.inv(0), Error);
}

TEST_CASE("rref on the stock examples") {
    RationalField q;
    SUBCASE("identity") {
        auto r = rref(Matrix<RationalField>::identity(q, 3));
        CHECK(r.rank == 3);
        CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
        CHECK(r.matrix == Matrix<RationalField>::identity(q, 3));
    }
    SUBCASE("zero") {
        Matrix<RationalField> z(q, 2, 4);
        auto r = rref(z);
        CHECK(r.rank == 0);
        CHECK(r.pivots.empty());
        CHECK(r.matrix == z);
    }
    SUBCASE("dependent rows") {
        Matrix<RationalField> m(q, 2, 2);
        m.at(0, 0) = q.from_long(1);
        m.at(0, 1) = q.from_long(2);
        m.at(1, 0) = q.from_long(2);
        m.at(1, 1) = q.from_long(4);
        auto r = rref(m);
        CHECK(r.rank == 1);
        CHECK(r.matrix.at(0, 1) == q.from_long(2));
        CHECK(q.is_zero(r.matrix.at(1, 0)));
        CHECK(q.is_zero(r.matrix.at(1, 1)));
    }
}

TEST_CASE("kernel basis") {
    RationalField q;
    CHECK(kernel_basis(Matrix<RationalField>::identity(q, 4)).cols() == 0);
    Matrix<RationalField> z(q, 2, 3);
    CHECK(kernel_basis(z).cols() == 3);

    PrimeField f2(2);
    Matrix<PrimeField> m(f2, 1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    auto ker = kernel_basis(m);
    REQUIRE(ker.cols() == 1);
    CHECK(ker.at(0, 0) == 1);
    CHECK(ker.at(1, 0) == 1);
}

TEST_CASE("solve") {
    RationalField q;
    SUBCASE("identity gives back the rhs") {
        auto a = Matrix<RationalField>::identity(q, 3);
        std::vector<Rational> b = {q.from_long(1), q.from_long(-2), q.from_long(7)};
        auto x = solve(a, b);
        REQUIRE(x);
        CHECK(*x == b);
    }
    SUBCASE("inconsistent") {
        Matrix<RationalField> a(q, 2, 2);
        std::vector<Rational> b = {q.from_long(1), q.from_long(0)};
        CHECK_FALSE(solve(a, b));
    }
    SUBCASE("2x = 1") {
        Matrix<RationalField> a(q, 1, 1);
        a.at(0, 0) = q.from_long(2);
        auto x = solve(a, {q.from_long(1)});
        REQUIRE(x);
        CHECK((*x)[0].str() == "1/2");
    }
    SUBCASE("rhs length mismatch is a contract violation") {
        Matrix<RationalField> a(q, 2, 2);
        CHECK_THROWS_AS(solve(a, {q.from_long(1)}), Error);
    }
}

TEST_CASE("kron conventions") {
    RationalField q;
    SUBCASE("scalar case") {
        Matrix<RationalField> c(q, 1, 1);
        c.at(0, 0) = q.from_long(3);
        Matrix<RationalField> m(q, 2, 2);
        m.at(0, 1) = q.from_long(5);
        auto km = kron(c, m);
        CHECK(km == scale(m, q.from_long(3)));
    }
    SUBCASE("identities") {
        CHECK(kron(Matrix<RationalField>::identity(q, 2), Matrix<RationalField>::identity(q, 3)) ==
              Matrix<RationalField>::identity(q, 6));
    }
    SUBCASE("swap tensor swap permutes 0<->3 and 1<->2") {
        Matrix<RationalField> s(q, 2, 2);
        s.at(0, 1) = q.one();
        s.at(1, 0) = q.one();
        auto ss = kron(s, s);
        // oracle: expand (s⊗s)[(i*2+x),(j*2+y)] = s[i,j] s[x,y] by enumeration
        Matrix<RationalField> expected(q, 4, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t x = 0; x < 2; ++x)
                    for (std::size_t y = 0; y < 2; ++y)
                        expected.at(i * 2 + x, j * 2 + y) = q.mul(s.at(i, j), s.at(x, y));
        CHECK(ss == expected);
        CHECK(ss.at(0, 3) == q.one());
        CHECK(ss.at(3, 0) == q.one());
        CHECK(ss.at(1, 2) == q.one());
        CHECK(ss.at(2, 1) == q.one());
    }
}

namespace {

template <Field F>
Matrix<F> random_matrix(const F& k, std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    Matrix<F> m(k, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = k.from_long(static_cast<long long>(rng() % 7) - 3);
    return m;
}

template <Field F>
void linear_algebra_properties(const F& k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        auto m = random_matrix(k, rng, rows, cols);
        auto r = rref(m);
        // idempotent
        CHECK(rref(r.matrix).matrix == r.matrix);
        // rank-nullity
        auto ker = kernel_basis(m);
        CHECK(r.rank + ker.cols() == cols);
        // m * kernel = 0 exactly
        CHECK((m * ker).is_zero());
        // kron bilinear in the first argument
        auto a = random_matrix(k, rng, 2, 2), a2 = random_matrix(k, rng, 2, 2);
        auto b = random_matrix(k, rng, 2, 3);
        CHECK(kron(a + a2, b) == kron(a, b) + kron(a2, b));
    }
}

}  // namespace

TEST_CASE("linear algebra properties over Q and F_p") {
    linear_algebra_properties(RationalField{}, 2024);
    linear_algebra_properties(PrimeField{5}, 2025);
    linear_algebra_properties(PrimeField{2}, 2026);
}
