// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>

#include "doctest.h"
#include "oracles.hpp"
#include "prym/moduli.hpp"
#include "test_support.hpp"

using namespace prym;
using namespace testing;

namespace {
const CoverData c21 = CoverData::make(2, 1);
}

TEST_CASE("invariant types") {
    auto t = InvariantType::make(2, {2, 0});
    CHECK(t.ks() == std::vector<std::int64_t>{0, 2});
    CHECK(t.defect() == 0);
    CHECK(InvariantType::make(3, {2, 1}).ks() == std::vector<std::int64_t>{1, 2});
    CHECK(InvariantType::make(2, {1, 1}).parity_matches(0));
    CHECK_FALSE(InvariantType::make(2, {1, 0}).parity_matches(0));
    CHECK_ERROR(InvariantType::make(2, {3, 0}), InadmissibleInput);
    CHECK_ERROR(InvariantType::make(0, {}), InadmissibleInput);
}

TEST_CASE("dimension of invariant loci") {
    CHECK(dim_invariant_locus(c21, InvariantType::make(2, {1, 1}), 0, false) == 7);
    CHECK(dim_invariant_locus(c21, InvariantType::make(2, {1, 1}), 0, true) == 5);
    CHECK_ERROR(dim_invariant_locus(c21, InvariantType::make(2, {1, 0}), 0, false), ParityViolation);
    CHECK_ERROR(dim_invariant_locus(c21, InvariantType::make(2, {1, 1, 1}), 0, false), InadmissibleInput);
}

TEST_CASE("dimension of anti-invariant loci") {
    CHECK(dim_anti_invariant(c21, 2, AntiKind::Plus) == 7);
    CHECK(dim_anti_invariant(c21, 2, AntiKind::Minus) == 5);
    CHECK_ERROR(dim_anti_invariant(c21, 3, AntiKind::Minus), EmptyLocus);
    // etale covers allow odd-rank alternating bundles
    CHECK_NOTHROW(dim_anti_invariant(CoverData::make(2, 0), 3, AntiKind::Minus));
}

TEST_CASE("W-space dimensions") {
    CHECK(dim_w_space(c21, 2, WSpace::plus()) == 7);
    CHECK(dim_w_space(c21, 2, WSpace::minus()) == 5);
    CHECK(dim_w_space(c21, 2, WSpace::max()) == 7);
    CHECK(dim_w_space(c21, 2, WSpace::tau(0)) == 6);
    CHECK(dim_w_space(c21, 2, WSpace::tau(1)) == 7);
    CHECK_ERROR(dim_w_space(c21, 3, WSpace::minus()), InadmissibleInput);
    CHECK_ERROR(dim_w_space(c21, 0, WSpace::plus()), InadmissibleInput);
    CHECK_ERROR(dim_w_space(c21, 2, WSpace::tau(2)), InadmissibleInput);
    CHECK_ERROR(dim_w_space(CoverData::make(2, 0), 2, WSpace::tau(0)), InadmissibleInput);
    for (std::int64_t r = 1; r <= 8; ++r) {
        CHECK(dim_w_space(c21, r, WSpace::plus()) == dim_w_space_by_sections(c21, r, WSpace::plus()));
        CHECK(dim_w_space(c21, r, WSpace::max()) == dim_w_space_by_sections(c21, r, WSpace::max()));
    }
}

TEST_CASE("type enumeration") {
    const auto all = enumerate_types(c21, 2, 0, false);
    REQUIRE(all.size() == 3);
    CHECK(all[0].ks() == std::vector<std::int64_t>{0, 0});
    CHECK(all[1].ks() == std::vector<std::int64_t>{0, 2});
    CHECK(all[2].ks() == std::vector<std::int64_t>{1, 1});
    const auto maxi = enumerate_types(c21, 2, 0, true);
    REQUIRE(maxi.size() == 1);
    CHECK(maxi[0].ks() == std::vector<std::int64_t>{1, 1});
    CHECK(enumerate_types(CoverData::make(1, 2), 3, 0, true).size() == 4);
    CHECK_ERROR(enumerate_types(CoverData::make(2, 0), 2, 0, false), InadmissibleInput);
    CHECK_ERROR(enumerate_types(CoverData::make(1, 12), 8, 0, false), GridTooLarge);
}

TEST_CASE("enumeration agrees with brute force over raw vectors") {
    for (std::int64_t n = 1; n <= 3; ++n)
        for (std::int64_t r = 1; r <= 4; ++r)
            for (std::int64_t d = 0; d <= 1; ++d)
                for (bool maximal : {false, true}) {
                    CAPTURE(n);
                    CAPTURE(r);
                    CAPTURE(d);
                    CHECK(enumerate_types(CoverData::make(1, n), r, d, maximal).size() ==
                          oracle::count_types(r, n, d, maximal));
                }
}

TEST_CASE("P[2] orbits on rank-2 sign types") {
    const std::uint64_t want_components[] = {2, 8, 32};
    for (unsigned n = 1; n <= 3; ++n) {
        const auto rep = p2_orbits_rank2(n);
        CHECK(rep.orbit_count == 2);
        CHECK(rep.component_count == want_components[n - 1]);
    }
    for (unsigned n = 1; n <= 5; ++n) {
        const auto rep = p2_orbits_rank2(n);
        const auto ref = oracle::sign_type_orbits(n);
        CHECK(rep.orbit_count == ref.orbits);
        CHECK(rep.component_count == ref.classes);
    }
    CHECK_ERROR(p2_orbits_rank2(0), InadmissibleInput);
    CHECK(SignType::from_mask(2, 0b11).mask() == 0);
}

TEST_CASE("component oracle") {
    using K = ComponentAnswer::Kind;
    CHECK(component_oracle({Locus::AntiInvariant, AntiKind::Plus, true, 2, 1}).kind == K::Irreducible);
    auto minus_even = component_oracle({Locus::AntiInvariant, AntiKind::Minus, true, 2, 1});
    CHECK(minus_even.kind == K::Count);
    CHECK(minus_even.count == 2);
    CHECK(component_oracle({Locus::AntiInvariant, AntiKind::Minus, true, 3, 1}).kind == K::Empty);
    auto fixed = component_oracle({Locus::AntiInvariantFixedDet, AntiKind::Minus, true, 2, 3});
    CHECK(fixed.kind == K::Count);
    CHECK(fixed.count == 32);
    CHECK_ERROR(component_oracle({Locus::AntiInvariantFixedDet, AntiKind::Minus, true, 4, 1}), UnknownScenario);
}

TEST_CASE("identity checks for a single cell") {
    const auto checks = identity_checks(c21, 2);
    CHECK(checks.size() == 10);
    for (const auto& chk : checks) {
        CAPTURE(chk.family);
        CHECK(chk.pass);
    }
    // odd rank on a ramified cover drops the alternating families
    const auto odd = identity_checks(c21, 3);
    for (const auto& chk : odd) CHECK(chk.family.find("W- = U-") == std::string::npos);
}

TEST_CASE("identity sweep over the default grid") {
    const auto rep = identity_sweep(GridSpec{}, 1);
    CHECK(rep.ok());
    CHECK(rep.cells == 240);
    const auto par = identity_sweep(GridSpec{}, 3);
    CHECK(par.checks.size() == rep.checks.size());
    for (std::size_t i = 0; i < rep.checks.size(); ++i) CHECK(par.checks[i].routes == rep.checks[i].routes);
}

TEST_CASE("grid size limit") {
    GridSpec big{{1, 100}, {1, 100}, {1, 8}, std::nullopt};
    CHECK_ERROR(identity_sweep(big, 1), GridTooLarge);
    CHECK_ERROR(identity_sweep(GridSpec{{3, 1}, {1, 1}, {1, 1}, std::nullopt}, 1), InadmissibleInput);
    ::setenv("PRYM_HITCHIN_MAX_GRID", "10", 1);
    CHECK(max_grid_cells() == 10);
    CHECK_ERROR(identity_sweep(GridSpec{}, 1), GridTooLarge);
    ::unsetenv("PRYM_HITCHIN_MAX_GRID");
    CHECK(max_grid_cells() == kDefaultMaxGrid);
}
