// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "prym/bipoly.hpp"
#include "prym/error.hpp"
#include "prym/poly.hpp"
#include "prym/poly_matrix.hpp"

namespace testing {

using prym::BiPoly;
using prym::Poly;
using prym::PolyMatrix;
using prym::Rat;

// Polynomial in t from low to high coefficients.
inline Poly T(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return Poly(std::move(v));
}

// Bivariate polynomial from its x-coefficients (each a t-polynomial).
inline BiPoly X(std::initializer_list<Poly> c) { return BiPoly(std::vector<Poly>(c)); }

inline PolyMatrix M(std::initializer_list<std::initializer_list<Poly>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    std::vector<Poly> e;
    for (const auto& row : rows)
        for (const auto& p : row) e.push_back(p);
    return PolyMatrix(r, c, std::move(e));
}

// Constant matrix from integer rows.
inline PolyMatrix C(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    std::vector<Poly> e;
    for (const auto& row : rows)
        for (long x : row) e.push_back(Poly::constant(Rat(x)));
    return PolyMatrix(r, c, std::move(e));
}

// Kind of the prym::Error thrown by f, or nullopt if it returned normally.
template <class F>
std::optional<prym::ErrorKind> error_of(F&& f) {
    try {
        f();
    } catch (const prym::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace testing

#define CHECK_ERROR(expr, kind_) \
    CHECK(::testing::error_of([&] { (void)(expr); }) == std::optional<prym::ErrorKind>(prym::ErrorKind::kind_))
