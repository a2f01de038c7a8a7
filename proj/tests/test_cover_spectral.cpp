// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "oracles.hpp"
#include "prym/cover.hpp"
#include "prym/random.hpp"
#include "prym/spectral.hpp"
#include "test_support.hpp"

using namespace prym;
using namespace testing;

TEST_CASE("cover genus") {
    CHECK(genus_upstairs(CoverData::make(2, 1)) == 4);
    CHECK(genus_upstairs(CoverData::make(3, 0)) == 5);
    CHECK(genus_upstairs(CoverData::make(1, 2)) == 3);
    CHECK(CoverData::make(3, 0).etale());
    CHECK(CoverData::make(2, 1).ramification_points() == 2);
    CHECK_ERROR(CoverData::make(0, 0), InadmissibleCover);
    CHECK_ERROR(CoverData::make(1, 0), InadmissibleCover);
    CHECK_ERROR(CoverData::make(2, -1), InadmissibleCover);
    CHECK_ERROR(CoverData::make(2, 1, true), InadmissibleCover);
    // Hurwitz in the form 2g_X - 2 = 2(2g_Y - 2) + 2n
    for (std::int64_t g = 1; g <= 5; ++g)
        for (std::int64_t n = 1; n <= 6; ++n) {
            const auto c = CoverData::make(g, n);
            CHECK(2 * genus_upstairs(c) - 2 == 2 * (2 * g - 2) + 2 * n);
        }
}

TEST_CASE("invariant sections of canonical powers") {
    const auto c21 = CoverData::make(2, 1);
    CHECK(h0_canonical_power_plus(c21, 2, Linearization::Positive) == 5);
    CHECK(h0_canonical_power_plus(CoverData::make(3, 2), 1, Linearization::Negative) == 3);
    CHECK(h0_canonical_power_plus(c21, 3, Linearization::Negative) == 7);
    // Riemann-Roch total (2i - 1)(g_X - 1) for i >= 2, g_X for i = 1
    for (std::int64_t g = 1; g <= 4; ++g)
        for (std::int64_t n = 0; n <= 4; ++n) {
            if (2 * g - 1 + n < 2) continue;
            const auto c = CoverData::make(g, n);
            const std::int64_t gx = genus_upstairs(c);
            for (auto lin : {Linearization::Positive, Linearization::Negative})
                for (std::int64_t i = 1; i <= 6; ++i) {
                    const std::int64_t total = i == 1 ? gx : (2 * i - 1) * (gx - 1);
                    CHECK(h0_canonical_power_plus(c, i, lin) + h0_canonical_power_minus(c, i, lin) == total);
                }
        }
}

TEST_CASE("twisted invariant sections") {
    const auto c = CoverData::make(2, 1);
    CHECK(h0_twisted_plus(c, 2, 2) == 4);
    CHECK(h0_twisted_plus(c, 2, 0) == 5);
    CHECK(h0_twisted_plus(c, 2, 0) == h0_canonical_power_plus(c, 2, Linearization::Negative));
    CHECK(h0_twisted_plus(c, 3, 1) == 7);
    CHECK(h0_twisted_plus(c, 3, 1) == h0_canonical_power_plus(c, 3, Linearization::Negative));
    CHECK_ERROR(h0_twisted_plus(c, 2, 3), OutOfValidityWindow);
    CHECK_ERROR(h0_twisted_plus(c, 1, 1), OutOfValidityWindow);
    CHECK_ERROR(h0_twisted_plus(c, 0, 0), OutOfValidityWindow);
}

TEST_CASE("spectral germ construction and polynomial") {
    auto g = SpectralGerm::make({T({}), T({0, 0, -1})}, Chart::Ramified, Linearization::Positive);
    CHECK(build_spectral_polynomial(g) == X({T({0, 0, -1}), T({}), T({1})}));
    auto h = SpectralGerm::make({T({2}), T({1, 0, 1})}, Chart::Ramified, Linearization::Positive);
    CHECK(build_spectral_polynomial(h) == X({T({1, 0, 1}), T({2}), T({1})}));
    const std::vector<Poly> s3 = {T({}), T({1, 0, 1}), T({0, 0, 0, 1})};
    CHECK_ERROR(SpectralGerm::make(s3, Chart::Ramified, Linearization::Positive), InvalidGerm);
    CHECK(SpectralGerm::make(s3, Chart::Ramified, Linearization::Negative).r() == 3);
    // anything goes on an ordinary chart
    CHECK(SpectralGerm::make({T({0, 1})}, Chart::Ordinary, Linearization::Positive).r() == 1);
}

TEST_CASE("fiber singularity examples") {
    auto smooth = fiber_singularity_test(X({T({0, -1}), T({}), T({1})}));
    CHECK(smooth.smooth);
    CHECK(smooth.witness_gcd == T({1}));
    auto node = fiber_singularity_test(X({T({0, 0, -1}), T({}), T({1})}));
    CHECK_FALSE(node.smooth);
    CHECK(node.witness_gcd == T({0, 1}));
    const BiPoly shifted = X({T({1, 0, -1}), T({-2}), T({1})});
    auto off = fiber_singularity_test(shifted);
    CHECK_FALSE(off.smooth);
    CHECK(off.witness_gcd == T({-1, 1}));
    CHECK_FALSE(oracle::naive_singular_at_origin(shifted));
    CHECK(fiber_singular_by_resultant(shifted));
    auto nc = node_profile(shifted);
    REQUIRE(nc.has_value());
    CHECK(nc->singular_points == 1);
    CHECK(nc->all_nodes);
    // a cusp x^2 - t^3 is singular but not a node
    auto cusp = node_profile(X({T({0, 0, 0, -1}), T({}), T({1})}));
    REQUIRE(cusp.has_value());
    CHECK_FALSE(cusp->all_nodes);
}

TEST_CASE("fixed points over a ramification point") {
    auto g3 = SpectralGerm::make({T({}), T({1}), T({0, 1, 0, 2})}, Chart::Ramified, Linearization::Negative);
    CHECK(involution_fixed_points_on_fiber(g3) == FixedPointCount(std::size_t{1}));
    auto g2 = SpectralGerm::make({T({}), T({1, 0, 1})}, Chart::Ramified, Linearization::Negative);
    CHECK(involution_fixed_points_on_fiber(g2) == FixedPointCount(std::size_t{0}));
    auto p2 = SpectralGerm::make({T({3}), T({1, 0, 5})}, Chart::Ramified, Linearization::Positive);
    CHECK(involution_fixed_points_on_fiber(p2) == FixedPointCount(FiberwiseIdentity{}));
    auto ord = SpectralGerm::make({T({1})}, Chart::Ordinary, Linearization::Negative);
    CHECK_ERROR(involution_fixed_points_on_fiber(ord), WrongChart);
}

TEST_CASE("W-space membership") {
    auto sq = SpectralGerm::make({T({2}), T({1, 0, 1})}, Chart::Ramified, Linearization::Positive);
    auto m = w_membership(sq, WSpace::minus());
    CHECK(m.member);
    REQUIRE(m.square_certificate.has_value());
    CHECK(*m.square_certificate == T({1, 1}));
    auto nsq = SpectralGerm::make({T({}), T({1, 0, 1})}, Chart::Ramified, Linearization::Positive);
    CHECK_FALSE(w_membership(nsq, WSpace::minus()).member);

    // r = 4, k_p = 1: s_4 must vanish to order 2
    auto tau_ok = SpectralGerm::make({T({}), T({2, 0, 3}), T({0, 0, 0, 5}), T({0, 0, 7, 0, 11})}, Chart::Ramified,
                                     Linearization::Negative);
    auto w = w_membership(tau_ok, WSpace::tau(1));
    CHECK(w.member);
    CHECK(w.vanishing_orders.size() == 4);
    auto tau_bad = SpectralGerm::make({T({}), T({2, 0, 3}), T({0, 0, 0, 5}), T({1, 0, 7, 0, 11})}, Chart::Ramified,
                                      Linearization::Negative);
    CHECK_FALSE(w_membership(tau_bad, WSpace::tau(1)).member);

    CHECK_ERROR(w_membership(sq, WSpace::tau(0)), LinearizationMismatch);
    CHECK_ERROR(w_membership(tau_ok, WSpace::plus()), LinearizationMismatch);
    auto ord = SpectralGerm::make({T({1})}, Chart::Ordinary, Linearization::Positive);
    CHECK_ERROR(w_membership(ord, WSpace::plus()), WrongChart);
}

TEST_CASE("genus ledger examples") {
    const auto c = CoverData::make(2, 1);
    auto sym = genus_ledger(c, 2, {LedgerScenarioKind::AntiSymmetric});
    CHECK(sym.g_spectral == 13);
    CHECK(sym.prym_dim == 7);
    CHECK(sym.g_spectral - sym.prym_dim == sym.g_quotient_spectral);
    CHECK(sym.deg_ram_spectral == 2 * 1 * (2 * 4 - 2));
    CHECK(sym.pic_degree * 2 == sym.deg_ram_spectral);
    auto alt = genus_ledger(c, 2, {LedgerScenarioKind::AntiAlternating});
    REQUIRE(alt.g_normalized.has_value());
    CHECK(*alt.g_normalized == 11);
    CHECK(alt.prym_dim == 5);
    CHECK_ERROR(genus_ledger(c, 3, {LedgerScenarioKind::AntiAlternating}), ParityError);
    CHECK(spectral_genus(2 * 2 - 2 + 1, 2, 2) == sym.g_quotient_spectral);
}

TEST_CASE("property: gcd test agrees with resultant form and with independent Euclid") {
    Rng rng(derive_seed(7, 8));
    for (int trial = 0; trial < 150; ++trial) {
        const BiPoly p = random_monic_bipoly(rng, static_cast<int>(rng.uniform(1, 5)), 4);
        const auto fs = fiber_singularity_test(p);
        CHECK(fs.smooth == !fiber_singular_by_resultant(p));
        CHECK(fs.witness_gcd == oracle::poly(oracle::triple_gcd(p)));
    }
}

TEST_CASE("property: generic negative germs fix r mod 2 points, positive germs fix the fiber") {
    Rng rng(derive_seed(7, 9));
    for (std::size_t r = 1; r <= 8; ++r) {
        for (int k = 0; k < 5; ++k) {
            auto neg = random_spectral_germ(rng, r, Linearization::Negative, 4, true);
            CHECK(involution_fixed_points_on_fiber(neg) == FixedPointCount(std::size_t{r % 2}));
            auto pos = random_spectral_germ(rng, r, Linearization::Positive, 4, false);
            CHECK(involution_fixed_points_on_fiber(pos) == FixedPointCount(FiberwiseIdentity{}));
        }
    }
}
