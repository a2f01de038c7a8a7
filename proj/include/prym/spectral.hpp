// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "prym/bipoly.hpp"
#include "prym/cover.hpp"
#include "prym/poly.hpp"

namespace prym {

/// Ramified: the marked point is a ramification point and sigma acts on the
/// chart as t -> -t. Ordinary: no equivariance constraint at the point.
enum class Chart { Ramified, Ordinary };

/// Germs s_1..s_r of sections of K_X^i at a marked point, K_X trivialized by dt.
///
/// On a ramified chart the lift of sigma to K_X^i acts on a germ a(t) by
/// a(t) -> a(-t) (positive) or a(t) -> (-1)^i a(-t) (negative); a germ in
/// the invariant part therefore satisfies s_i(-t) = s_i(t), resp.
/// s_i(-t) = (-1)^i s_i(t). make() rejects anything else with InvalidGerm.
class SpectralGerm {
   public:
    static SpectralGerm make(std::vector<Poly> sections, Chart chart, Linearization lin);

    std::size_t r() const noexcept { return s_.size(); }
    const std::vector<Poly>& sections() const noexcept { return s_; }
    /// 1-based, matching s_1..s_r.
    const Poly& section(std::size_t i) const { return s_.at(i - 1); }
    Chart chart() const noexcept { return chart_; }
    Linearization linearization() const noexcept { return lin_; }

   private:
    SpectralGerm(std::vector<Poly> s, Chart c, Linearization l) : s_(std::move(s)), chart_(c), lin_(l) {}
    std::vector<Poly> s_;
    Chart chart_;
    Linearization lin_;
};

/// P(x, t) = x^r + s_1(t) x^(r-1) + ... + s_r(t).
BiPoly build_spectral_polynomial(const SpectralGerm& g);

struct FiberSingularity {
    bool smooth;
    /// Monic gcd(P(x,0), P_x(x,0), P_t(x,0)); its roots are the singular
    /// x-coordinates on the fiber t = 0.
    Poly witness_gcd;
};

/// Jacobian criterion on the fiber t = 0 for monic P, via one gcd instead of
/// root-finding.
FiberSingularity fiber_singularity_test(const BiPoly& P);

/// Second route to the same question from the two Jacobian equations without
/// a gcd: a common root of P(x,0), P_x(x,0), P_t(x,0) exists iff
/// Res_x(P(x,0), P_x(x,0) + u P_t(x,0)) vanishes identically in u. That
/// resultant has degree <= deg_x P in u, so deg_x P + 1 sample values of u
/// decide it.
bool fiber_singular_by_resultant(const BiPoly& P);

/// Local type of the singular points of the fiber found by
/// fiber_singularity_test.
struct NodeCertificate {
    /// Number of distinct singular points (degree of the radical of the witness).
    std::size_t singular_points;
    /// P_xx P_tt - P_xt^2 restricted to t = 0.
    Poly hessian;
    /// gcd(witness, hessian); constant iff every singular point is an
    /// ordinary double point.
    Poly degenerate_gcd;
    bool all_nodes;
};

std::optional<NodeCertificate> node_profile(const BiPoly& P);

struct FiberwiseIdentity {
    friend bool operator==(FiberwiseIdentity, FiberwiseIdentity) = default;
};
using FixedPointCount = std::variant<std::size_t, FiberwiseIdentity>;

/// Fixed points of the lifted involution on the fiber over a ramification
/// point. Positive lift: (x, t) -> (x, -t) fixes the whole fiber. Negative
/// lift: (x, t) -> (-x, -t) fixes only x = 0, counted with its multiplicity
/// as a root of P(x, 0). Throws WrongChart on an ordinary chart.
FixedPointCount involution_fixed_points_on_fiber(const SpectralGerm& g);

struct SpectralCurveReport {
    BiPoly spectral_polynomial;
    bool smooth_on_fiber;
    Poly singular_fiber_gcd;
    /// Absent on an ordinary chart.
    std::optional<FixedPointCount> fixed_point_count_on_fiber;
    /// Present when the fiber is singular.
    std::optional<NodeCertificate> node_certificate;
};

SpectralCurveReport analyze(const SpectralGerm& g);

enum class WSpaceKind { WPlus, WMinus, WMax, WTau };

struct WSpace {
    WSpaceKind kind;
    /// Only meaningful for WTau.
    std::size_t k_p = 0;

    static WSpace plus() { return {WSpaceKind::WPlus, 0}; }
    static WSpace minus() { return {WSpaceKind::WMinus, 0}; }
    static WSpace max() { return {WSpaceKind::WMax, 0}; }
    static WSpace tau(std::size_t k_p) { return {WSpaceKind::WTau, k_p}; }
};

struct Membership {
    bool member;
    /// WMinus: square root of P(x, 0) when it exists.
    std::optional<Poly> square_certificate;
    /// WTau: vanishing_order(s_i) for i = 1..r (nullopt = infinite).
    std::vector<std::optional<std::size_t>> vanishing_orders;
};

/// Local membership of the germ in W^{sigma,+}, W^{sigma,-}, W^{sigma,m} or
/// W^{sigma,tau}. Needs a ramified chart (WrongChart) and the lift matching
/// the family: positive for WPlus/WMinus, negative for WMax/WTau
/// (LinearizationMismatch).
Membership w_membership(const SpectralGerm& g, const WSpace& space);

enum class LedgerScenarioKind { AntiSymmetric, AntiAlternating, InvariantMax, InvariantTau };

struct LedgerScenario {
    LedgerScenarioKind kind;
    std::int64_t k_p = 0;
};

/// Genus bookkeeping for the spectral curve of a general s in the Hitchin
/// base attached to the scenario. Only InvariantTau fills the normalized
/// entries from a singular point of multiplicity r - 2k_p; AntiAlternating
/// fills them from the r*n nodes over R.
struct GenusLedger {
    std::int64_t g_spectral;
    std::int64_t deg_ram_spectral;
    /// Degree m = r(r-1)(g_X-1) = deg_ram_spectral / 2 of the line bundles
    /// parametrizing the Hitchin fiber.
    std::int64_t pic_degree;
    std::int64_t g_quotient_spectral;
    std::optional<std::int64_t> singular_points;
    std::optional<std::int64_t> g_normalized;
    std::optional<std::int64_t> g_normalized_quotient;
    std::int64_t prym_dim;
};

/// Throws ParityError for AntiAlternating with odd r on a ramified cover, and
/// InadmissibleInput for r < 1 or an InvariantTau k_p outside [0, floor(r/2)]
/// (or on an etale cover).
GenusLedger genus_ledger(const CoverData& c, std::int64_t r, const LedgerScenario& scenario);

/// Genus of a smooth spectral curve of rank r over a base of genus g_base
/// with deg L = deg_L: deg_L r(r-1)/2 + r(g_base - 1) + 1.
std::int64_t spectral_genus(std::int64_t deg_L, std::int64_t r, std::int64_t g_base);

}  // namespace prym
