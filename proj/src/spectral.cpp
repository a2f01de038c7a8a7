// SPDX-License-Identifier: Apache-2.0
#include "prym/spectral.hpp"

#include <stdexcept>
#include <string>

#include "prym/error.hpp"
#include "prym/poly_matrix.hpp"

namespace prym {

SpectralGerm SpectralGerm::make(std::vector<Poly> sections, Chart chart, Linearization lin) {
    if (sections.empty()) throw Error(ErrorKind::InvalidGerm, "rank must be at least 1");
    if (chart == Chart::Ramified) {
        for (std::size_t k = 0; k < sections.size(); ++k) {
            const std::size_t i = k + 1;
            const bool want_even = lin == Linearization::Positive || i % 2 == 0;
            const Poly& s = sections[k];
            if (want_even ? !s.is_even() : !s.is_odd())
                throw Error(ErrorKind::InvalidGerm, "s_" + std::to_string(i) + " must be " +
                                                        (want_even ? "even" : "odd") + " in t under the " +
                                                        (lin == Linearization::Positive ? "positive" : "negative") +
                                                        " lift");
        }
    }
    return SpectralGerm(std::move(sections), chart, lin);
}

BiPoly build_spectral_polynomial(const SpectralGerm& g) {
    const std::size_t r = g.r();
    std::vector<Poly> c(r + 1);
    c[r] = Poly::constant(1);
    for (std::size_t i = 1; i <= r; ++i) c[r - i] = g.section(i);
    return BiPoly(std::move(c));
}

FiberSingularity fiber_singularity_test(const BiPoly& P) {
    const Poly on_fiber = P.at_t_zero();
    const Poly px = P.d_dx().at_t_zero();
    const Poly pt = P.d_dt().at_t_zero();
    Poly w = gcd(gcd(on_fiber, px), pt);
    const bool smooth = w.is_constant() && !w.is_zero();
    return {smooth, std::move(w)};
}

bool fiber_singular_by_resultant(const BiPoly& P) {
    const Poly p0 = P.at_t_zero();
    const Poly px = P.d_dx().at_t_zero();
    const Poly pt = P.d_dt().at_t_zero();
    for (int u = 0; u <= p0.degree(); ++u)
        if (resultant(p0, px + Rat(u) * pt) != 0) return false;
    return true;
}

std::optional<NodeCertificate> node_profile(const BiPoly& P) {
    auto [smooth, w] = fiber_singularity_test(P);
    if (smooth || w.is_zero()) return std::nullopt;
    const Poly radical = divmod(w, gcd(w, w.derivative())).first;
    const BiPoly px = P.d_dx(), pt = P.d_dt();
    const Poly pxx = px.d_dx().at_t_zero();
    const Poly ptt = pt.d_dt().at_t_zero();
    const Poly pxt = px.d_dt().at_t_zero();
    Poly hessian = pxx * ptt - pxt * pxt;
    Poly degenerate = gcd(radical, hessian);
    const bool nodes = degenerate.is_constant() && !degenerate.is_zero();
    return NodeCertificate{static_cast<std::size_t>(radical.degree()), std::move(hessian), std::move(degenerate),
                           nodes};
}

FixedPointCount involution_fixed_points_on_fiber(const SpectralGerm& g) {
    if (g.chart() != Chart::Ramified)
        throw Error(ErrorKind::WrongChart, "fixed points of the lifted involution need a ramified chart");
    if (g.linearization() == Linearization::Positive) return FiberwiseIdentity{};
    // P(x, 0) is monic, so its order at x = 0 is finite.
    return *vanishing_order(build_spectral_polynomial(g).at_t_zero());
}

SpectralCurveReport analyze(const SpectralGerm& g) {
    SpectralCurveReport rep;
    rep.spectral_polynomial = build_spectral_polynomial(g);
    auto sing = fiber_singularity_test(rep.spectral_polynomial);
    rep.smooth_on_fiber = sing.smooth;
    rep.singular_fiber_gcd = std::move(sing.witness_gcd);
    if (g.chart() == Chart::Ramified) rep.fixed_point_count_on_fiber = involution_fixed_points_on_fiber(g);
    if (!rep.smooth_on_fiber) rep.node_certificate = node_profile(rep.spectral_polynomial);
    return rep;
}

Membership w_membership(const SpectralGerm& g, const WSpace& space) {
    if (g.chart() != Chart::Ramified) throw Error(ErrorKind::WrongChart, "W-space membership needs a ramified chart");
    const bool positive_family = space.kind == WSpaceKind::WPlus || space.kind == WSpaceKind::WMinus;
    const bool positive_germ = g.linearization() == Linearization::Positive;
    if (positive_family != positive_germ)
        throw Error(ErrorKind::LinearizationMismatch,
                    std::string(positive_family ? "W+/W- need" : "W^m/W^tau need") + " the " +
                        (positive_family ? "positive" : "negative") + " lift");

    Membership m{true, std::nullopt, {}};
    switch (space.kind) {
        case WSpaceKind::WPlus:
            for (const auto& s : g.sections()) m.member = m.member && s.is_even();
            break;
        case WSpaceKind::WMax:
            for (std::size_t i = 1; i <= g.r(); ++i)
                m.member = m.member && (i % 2 == 0 ? g.section(i).is_even() : g.section(i).is_odd());
            break;
        case WSpaceKind::WMinus: {
            m.square_certificate = square_root(build_spectral_polynomial(g).at_t_zero());
            m.member = m.square_certificate.has_value();
            break;
        }
        case WSpaceKind::WTau: {
            const std::size_t first_constrained = 2 * space.k_p + 2;
            for (std::size_t i = 1; i <= g.r(); ++i) {
                auto ord = vanishing_order(g.section(i));
                m.vanishing_orders.push_back(ord);
                if (i >= first_constrained && ord && *ord < i - 2 * space.k_p) m.member = false;
            }
            break;
        }
    }
    return m;
}

std::int64_t spectral_genus(std::int64_t deg_L, std::int64_t r, std::int64_t g_base) {
    return deg_L * r * (r - 1) / 2 + r * (g_base - 1) + 1;
}

namespace {

std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
    if (num % den != 0) throw std::logic_error(std::string("non-integral genus in ") + what);
    return num / den;
}

// Riemann-Hurwitz for a double cover of a genus-g curve with f fixed points.
std::int64_t quotient_genus(std::int64_t g, std::int64_t fixed, const char* what) {
    return exact_div(2 * g + 2 - fixed, 4, what);
}

}  // namespace

GenusLedger genus_ledger(const CoverData& c, std::int64_t r, const LedgerScenario& scenario) {
    if (r < 1) throw Error(ErrorKind::InadmissibleInput, "rank must be at least 1");
    const std::int64_t gx = genus_upstairs(c);
    const std::int64_t n = c.n();
    const std::int64_t deg_K = 2 * gx - 2;

    GenusLedger led{};
    led.g_spectral = spectral_genus(deg_K, r, gx);
    led.deg_ram_spectral = r * (r - 1) * deg_K;
    led.pic_degree = r * (r - 1) * (gx - 1);

    switch (scenario.kind) {
        case LedgerScenarioKind::AntiSymmetric: {
            // positive lift fixes the r points over each of the 2n ramification points
            led.g_quotient_spectral = quotient_genus(led.g_spectral, 2 * n * r, "AntiSymmetric quotient");
            led.prym_dim = led.g_spectral - led.g_quotient_spectral;
            break;
        }
        case LedgerScenarioKind::AntiAlternating: {
            if (r % 2 != 0 && n > 0)
                throw Error(ErrorKind::ParityError,
                            "odd rank on a ramified cover: every anti-invariant bundle is sigma-symmetric");
            // r/2 nodes over each ramification point; the normalization carries a free involution
            const std::int64_t nodes = r * n;
            led.singular_points = nodes;
            led.g_normalized = led.g_spectral - nodes;
            led.g_normalized_quotient = quotient_genus(*led.g_normalized, 0, "AntiAlternating quotient");
            led.g_quotient_spectral = *led.g_normalized_quotient;
            led.prym_dim = *led.g_normalized_quotient - 1;
            break;
        }
        case LedgerScenarioKind::InvariantMax: {
            const std::int64_t k = r % 2 == 0 ? 0 : n;
            led.g_quotient_spectral = exact_div(led.g_spectral + 1 - k, 2, "InvariantMax quotient");
            led.prym_dim = led.g_quotient_spectral;
            break;
        }
        case LedgerScenarioKind::InvariantTau: {
            const std::int64_t kp = scenario.k_p;
            if (n < 1) throw Error(ErrorKind::InadmissibleInput, "a typed point needs a ramified cover");
            if (kp < 0 || kp > r / 2)
                throw Error(ErrorKind::InadmissibleInput, "k_p must lie in [0, floor(r/2)]");
            // ordinary singular point of multiplicity r - 2k_p over p
            const std::int64_t mult = r - 2 * kp;
            const std::int64_t delta = mult * (mult - 1) / 2;
            const std::int64_t fixed = r % 2 == 0 ? mult : mult + 2 * n - 1;
            led.singular_points = mult >= 2 ? 1 : 0;
            led.g_normalized = led.g_spectral - delta;
            led.g_normalized_quotient = quotient_genus(*led.g_normalized, fixed, "InvariantTau quotient");
            led.g_quotient_spectral = *led.g_normalized_quotient;
            const std::int64_t eps = r % 2;
            led.prym_dim = r * r * (c.g_Y() - 1) + 1 + exact_div((2 * n - 1) * (r * r - eps), 4, "ghat_Y") +
                           kp * (r - kp);
            break;
        }
    }
    return led;
}

}  // namespace prym
