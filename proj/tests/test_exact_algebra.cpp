// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "oracles.hpp"
#include "prym/poly_matrix.hpp"
#include "prym/random.hpp"
#include "test_support.hpp"

using namespace prym;
using namespace testing;

namespace {
const Poly x_var_as_t = T({0, 1});
}

TEST_CASE("rationals print and parse as p/q") {
    CHECK(to_string(*parse_rational("3/6")) == "1/2");
    CHECK(to_string(Rat(-4)) == "-4");
    CHECK(parse_rational("-6/4") == std::optional<Rat>(Rat(-3, 2)));
    CHECK(parse_rational("7") == std::optional<Rat>(Rat(7)));
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("abc"));
    CHECK(rational_sqrt(Rat(9, 4)) == std::optional<Rat>(Rat(3, 2)));
    CHECK_FALSE(rational_sqrt(Rat(2)));
    CHECK_FALSE(rational_sqrt(Rat(-1)));
}

TEST_CASE("polynomial basics") {
    const Poly p = T({1, 2, 1});
    CHECK(p.degree() == 2);
    CHECK(Poly().degree() == Poly::kZeroDegree);
    CHECK(p * T({1, -1}) == T({1, 1, -1, -1}));
    CHECK(p.derivative() == T({2, 2}));
    CHECK(T({1, 2, 3}).reflected() == T({1, -2, 3}));
    CHECK(p(Rat(2)) == Rat(9));
    auto [q, r] = divmod(T({-1, 0, 1}), T({-1, 1}));
    CHECK(q == T({1, 1}));
    CHECK(r.is_zero());
}

TEST_CASE("gcd examples") {
    CHECK(gcd(T({-1, 0, 1}), T({-1, 1})) == T({-1, 1}));
    CHECK(gcd(T({1, -2, 1}), T({-2, 2})) == T({-1, 1}));
    CHECK(gcd(T({1, 0, 1}), T({0, 2})) == T({1}));
}

TEST_CASE("vanishing order") {
    CHECK(vanishing_order(T({0, 0, 0, 1, 1})) == std::optional<std::size_t>(3));
    CHECK(vanishing_order(T({1, 1})) == std::optional<std::size_t>(0));
    CHECK_FALSE(vanishing_order(Poly()).has_value());
}

TEST_CASE("parity decomposition") {
    auto a = parity_decompose(T({0, 1, 1}));
    CHECK(a.even == T({0, 0, 1}));
    CHECK(a.odd == T({0, 1}));
    auto b = parity_decompose(T({5}));
    CHECK(b.even == T({5}));
    CHECK(b.odd.is_zero());
    auto c = parity_decompose(T({0, 0, 0, 1}));
    CHECK(c.even.is_zero());
    CHECK(c.odd == T({0, 0, 0, 1}));
    CHECK(T({1, 0, 1}).is_even());
    CHECK(T({0, 1, 0, 3}).is_odd());
    CHECK(Poly().is_even());
    CHECK(Poly().is_odd());
}

TEST_CASE("square roots") {
    // the variable is named t here but the rule is the same in x
    CHECK(square_root(T({1, 2, 1})) == std::optional<Poly>(T({1, 1})));
    CHECK(square_root(T({1, 0, 4, 0, 4})) == std::optional<Poly>(T({1, 0, 2})));
    CHECK_FALSE(square_root(T({1, 0, 1})).has_value());
    CHECK_FALSE(square_root(T({0, 1})).has_value());
    CHECK_FALSE(square_root(T({2})).has_value());
    CHECK(square_root(Poly()) == std::optional<Poly>(Poly()));
    // x^2 - t^2 is not a square; (x + t)^2 is
    CHECK_FALSE(square_root(X({T({0, 0, -1}), T({}), T({1})})).has_value());
    CHECK(square_root(X({T({0, 0, 1}), T({0, 2}), T({1})})) == std::optional<BiPoly>(X({T({0, 1}), T({1})})));
}

TEST_CASE("characteristic polynomial examples") {
    CHECK(char_poly(PolyMatrix::identity(2)) == X({T({1}), T({-2}), T({1})}));
    CHECK(char_poly(M({{T({}), T({1})}, {x_var_as_t, T({})}})) == X({T({0, -1}), T({}), T({1})}));
    // companion matrix of x^2 + 3x + 5
    CHECK(char_poly(C({{0, -5}, {1, -3}})) == X({T({5}), T({3}), T({1})}));
    CHECK_ERROR(char_poly(PolyMatrix(2, 3)), NonSquareMatrix);
    CHECK_ERROR(determinant(PolyMatrix(1, 2)), NonSquareMatrix);
}

TEST_CASE("pfaffian examples") {
    const Poly a = T({1, 1});
    CHECK(pfaffian(M({{T({}), a}, {-a, T({})}})) == a);
    // a12 = 1, a13 = -t, a14 = 0, a23 = 0, a24 = -t, a34 = 1
    const Poly z, one = T({1}), mt = T({0, -1});
    const PolyMatrix m4 = M({{z, one, mt, z}, {-one, z, z, mt}, {-mt, z, z, one}, {z, -mt, -one, z}});
    const Poly pf = pfaffian(m4);
    CHECK(pf == T({1, 0, -1}));
    CHECK(pf * pf == oracle::det(m4));
    CHECK(pfaffian(PolyMatrix(4, 4)).is_zero());
    CHECK(pfaffian(PolyMatrix(0, 0)) == T({1}));
    CHECK_ERROR(pfaffian(PolyMatrix(3, 3)), OddDimension);
    CHECK_ERROR(pfaffian(C({{0, 1}, {1, 0}})), NotAntisymmetric);
    CHECK_ERROR(pfaffian(PolyMatrix(2, 3)), NonSquareMatrix);
}

TEST_CASE("resultant") {
    // Res(x - 1, x - 2) = -1 in the Sylvester convention with a first
    CHECK(resultant(T({-1, 1}), T({-2, 1})) == Rat(-1));
    CHECK(resultant(T({-1, 0, 1}), T({-1, 1})) == Rat(0));
    CHECK(resultant(T({1, 0, 1}), T({0, 2})) != Rat(0));
}

TEST_CASE("property: determinant and char_poly agree with cofactor expansion") {
    Rng rng(derive_seed(20261019, 1));
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 5));
        const PolyMatrix m = random_matrix(rng, r, r, 2);
        CHECK(determinant(m) == oracle::det(m));
        CHECK(char_poly(m) == oracle::char_poly(m));
        CHECK(evaluate(char_poly(m), m).is_zero());
    }
}

TEST_CASE("property: pf^2 = det and odd antisymmetric determinants vanish") {
    Rng rng(derive_seed(20261019, 2));
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 6));
        const PolyMatrix m = random_antisymmetric(rng, r, 2);
        const Poly d = oracle::det(m);
        if (r % 2 == 0) {
            const Poly pf = pfaffian(m);
            CHECK(pf * pf == d);
        } else {
            CHECK(d.is_zero());
        }
    }
}

TEST_CASE("property: gcd matches plain Euclid, square test matches Yun") {
    Rng rng(derive_seed(20261019, 3));
    for (int trial = 0; trial < 200; ++trial) {
        const Poly common = random_poly(rng, 2);
        const Poly a = random_poly(rng, 3) * common;
        const Poly b = random_poly(rng, 3) * common;
        CHECK(gcd(a, b) == oracle::poly(oracle::gcd(oracle::coeffs(a), oracle::coeffs(b))));
        const Poly q = random_poly(rng, 3);
        const Poly sq = rng.coin() ? q * q : q * q + T({rng.uniform(1, 3)});
        const auto root = square_root(sq);
        CHECK(root.has_value() == oracle::is_square(sq));
        if (root) CHECK(*root * *root == sq);
    }
}

TEST_CASE("property: bivariate square root round trip") {
    Rng rng(derive_seed(20261019, 4));
    for (int trial = 0; trial < 100; ++trial) {
        const BiPoly q = random_monic_bipoly(rng, static_cast<int>(rng.uniform(0, 3)), 2);
        const BiPoly sq = q * q;
        const auto root = square_root(sq);
        REQUIRE(root.has_value());
        CHECK(*root * *root == sq);
        CHECK(*root == q);
        const BiPoly off = sq + BiPoly::from_t_poly(T({0, 1}));
        CHECK_FALSE(square_root(off).has_value());
    }
}
