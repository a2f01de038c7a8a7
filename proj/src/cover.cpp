// SPDX-License-Identifier: Apache-2.0
#include "prym/cover.hpp"

#include <string>

#include "prym/error.hpp"

namespace prym {

CoverData CoverData::make(std::int64_t g_Y, std::int64_t n) {
    if (g_Y < 0 || n < 0)
        throw Error(ErrorKind::InadmissibleCover, "g_Y and n must be nonnegative");
    if (2 * g_Y - 1 + n < 2)
        throw Error(ErrorKind::InadmissibleCover,
                    "g_X = 2*" + std::to_string(g_Y) + " - 1 + " + std::to_string(n) + " < 2");
    return CoverData(g_Y, n);
}

CoverData CoverData::make(std::int64_t g_Y, std::int64_t n, bool etale) {
    if (etale != (n == 0))
        throw Error(ErrorKind::InadmissibleCover, "etale flag must hold exactly when n = 0");
    return make(g_Y, n);
}

std::int64_t genus_upstairs(const CoverData& c) { return 2 * c.g_Y() - 1 + c.n(); }

// pi_* K_X^i = (K_Y^i (x) Delta^i) + (K_Y^i (x) Delta^(i-1)). The positive lift
// picks the first summand for every i; the negative lift multiplies by
// (-1)^i and so swaps the summands for odd i.
namespace {

// h0(Y, K_Y^i Delta^j) with deg Delta = n, valid for j in {i-1, i}.
std::int64_t h0_summand(const CoverData& c, std::int64_t i, std::int64_t j) {
    if (i == 1 && j == 0) return c.g_Y();
    return (2 * i - 1) * (c.g_Y() - 1) + j * c.n();
}

void require_positive(std::int64_t i) {
    if (i < 1) throw Error(ErrorKind::OutOfValidityWindow, "canonical power must be >= 1");
}

}  // namespace

std::int64_t h0_canonical_power_plus(const CoverData& c, std::int64_t i, Linearization lin) {
    require_positive(i);
    if (lin == Linearization::Positive || i % 2 == 0) return h0_summand(c, i, i);
    return h0_summand(c, i, i - 1);
}

std::int64_t h0_canonical_power_minus(const CoverData& c, std::int64_t i, Linearization lin) {
    require_positive(i);
    if (lin == Linearization::Positive || i % 2 == 0) return h0_summand(c, i, i - 1);
    return h0_summand(c, i, i);
}

std::int64_t h0_twisted_plus(const CoverData& c, std::int64_t k, std::int64_t i) {
    if (k < 1 || i < 0 || i > 2 * k - 2)
        throw Error(ErrorKind::OutOfValidityWindow,
                    "K^" + std::to_string(k) + "(-" + std::to_string(i) + "p) outside 0 <= i <= 2k-2");
    if (k == 1) return h0_canonical_power_plus(c, 1, Linearization::Negative);
    const std::int64_t base = (2 * k - 1) * (c.g_Y() - 1);
    const std::int64_t n = c.n();
    if (k % 2 == 0) return base + k * n - (i % 2 == 0 ? i / 2 : (i + 1) / 2);
    return base + (k - 1) * n - (i % 2 == 0 ? i / 2 : (i - 1) / 2);
}

}  // namespace prym
