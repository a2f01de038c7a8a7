// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prym/json_io.hpp"
#include "prym/moduli.hpp"

namespace prym {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    /// Trials per sub-case (per structure kind, per square/non-square side).
    std::size_t trials = 200;
    unsigned jobs = 1;
    /// Largest matrix size or rank drawn by the suites that take one.
    std::size_t max_dim = 8;
};

struct SuiteResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;
    /// Scenario file reproducing the first failing trial.
    std::optional<Json> counterexample;
    bool ok() const noexcept { return failures == 0; }
};

/// Scenario document {"version": "1", "cover": ..., "tasks": [task]}.
Json replay_scenario(const Json& task, const CoverData& cover = CoverData::make(2, 1));

/// certificate^2 = char_poly(A) and certificate = sqrt(char_poly(A)) for
/// constant A = J^-1 M (M antisymmetric), even r <= max_dim.
SuiteResult pfaffian_square_suite(const SuiteOptions& o);
/// Parity of the Hitchin components of random symmetric, alternating and
/// typed invariant germs, r in {2, 4, 6} (trials per kind).
SuiteResult hitchin_parity_suite(const SuiteOptions& o);
/// vanishing_order(H_i) >= i - 2k_p for random typed germs, plus a witness
/// attaining equality for every i in 1..min(6, max_dim).
SuiteResult vanishing_order_suite(const SuiteOptions& o);
/// Negative germs with generic constants fix r mod 2 points of the fiber,
/// positive germs fix the whole fiber, r in 1..max_dim.
SuiteResult fixed_point_suite(const SuiteOptions& o);
/// Triple gcd against the resultant form of the two Jacobian equations on
/// random monic germs (x-degree <= 5, t-degree <= 4), a third of them built
/// singular and a third with a double root on a smooth fiber.
SuiteResult smoothness_suite(const SuiteOptions& o);
/// Germs whose fiber polynomial is the square of a polynomial with simple
/// roots are W- members, singular, with witness equal to the certificate.
SuiteResult square_node_suite(const SuiteOptions& o);
/// Cayley-Hamilton on random matrices, r <= min(6, max_dim), entry degree <= 2.
SuiteResult cayley_hamilton_suite(const SuiteOptions& o);
/// pf^2 = det on random antisymmetric matrices (det = 0 in odd size), r <= max_dim.
SuiteResult pfaffian_det_suite(const SuiteOptions& o);
/// square_root(p^2) = +-p and square_root(p^2 + c) = none, for Poly and
/// monic BiPoly (trials of each side).
SuiteResult square_root_suite(const SuiteOptions& o);
/// Number of maximal types for odd r equals 2^(2(n-1)).
SuiteResult maximal_type_suite(const Range& n, const std::vector<std::int64_t>& odd_ranks);
/// Two orbits and 2^(2n-1) canonical sign types.
SuiteResult orbit_suite(const Range& n);

}  // namespace prym
