// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every criterion is checked through the library and, where one exists, an
// independent oracle from oracles.hpp.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "oracles.hpp"
#include "prym/higgs.hpp"
#include "prym/moduli.hpp"
#include "prym/random.hpp"
#include "prym/spectral.hpp"
#include "prym/suites.hpp"

using namespace prym;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Verdict {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Poly x_coeffs(const BiPoly& p) { return oracle::poly(oracle::fiber(p)); }

// ---- 1 ------------------------------------------------------------------

Verdict identity_grid() {
    Verdict v;
    const SweepReport rep = identity_sweep(GridSpec{{1, 5}, {1, 6}, {1, 8}, std::nullopt}, 1);
    if (!rep.ok()) {
        const auto& bad = rep.checks[*rep.first_failure];
        v.fail(bad.family + " fails at g_Y=" + std::to_string(bad.g_Y) + " n=" + std::to_string(bad.n) +
               " r=" + std::to_string(bad.r));
        return v;
    }
    const std::set<std::string> want = {"W+ = U+",        "P+ = U+",      "quotient spectral genus",
                                        "W- = U-",        "normalized genus", "U(r,0) = W^m",
                                        "U^tau = W^tau", "ghat_Y = dim Pic^m(Xhat)^sigma = U^tau"};
    std::set<std::string> seen;
    std::size_t tau_checks = 0;
    for (const auto& chk : rep.checks) {
        seen.insert(chk.family);
        if (chk.family == "U^tau = W^tau") ++tau_checks;
    }
    if (seen != want) v.fail("missing identity families");
    // every admissible k_p: sum over r of floor(r/2) + 1, per cell
    std::size_t expect_tau = 0;
    for (int r = 1; r <= 8; ++r) expect_tau += r / 2 + 1;
    expect_tau *= 5 * 6;
    if (tau_checks != expect_tau) v.fail("tau identities cover " + std::to_string(tau_checks) + " of " +
                                         std::to_string(expect_tau) + " (cell, k_p) pairs");
    v.detail = std::to_string(rep.checks.size()) + " exact equalities over " + std::to_string(rep.cells) + " cells";
    return v;
}

// ---- 2 ------------------------------------------------------------------

Verdict pfaffian_square() {
    Verdict v;
    std::size_t per_rank[9] = {};
    for (std::size_t i = 0; i < 200; ++i) {
        Rng rng(derive_seed(kSeed ^ 2, i));
        const std::size_t r = 2 * (1 + i % 4);
        ++per_rank[r];
        const PolyMatrix J = i % 2 == 0 ? standard_symplectic(r) : random_alternating_form(rng, r);
        const PolyMatrix Mm = random_antisymmetric(rng, r, 0, 4);
        const PolyMatrix A = *constant_inverse(J) * Mm;
        const HiggsGerm h = HiggsGerm::classify(A, HiggsStructure::alternating(J));
        const Poly q = alternating_square_certificate(h);
        const Poly chi = x_coeffs(oracle::char_poly(A));
        if (q * q != chi) v.fail("certificate^2 != char_poly at trial " + std::to_string(i));
        if (!oracle::is_square(chi)) v.fail("sqrt-det oracle rejects char_poly at trial " + std::to_string(i));
        const auto root = square_root(chi);
        if (!root || (*root != q && *root != -q)) v.fail("square_root(char_poly) != +-certificate");
    }
    if (v.ok)
        v.detail = "200 matrices, r=2/4/6/8: " + std::to_string(per_rank[2]) + "/" + std::to_string(per_rank[4]) +
                   "/" + std::to_string(per_rank[6]) + "/" + std::to_string(per_rank[8]);
    return v;
}

// ---- 3 ------------------------------------------------------------------

bool parity_holds(const Poly& p, bool even) { return even ? p.is_even() : p.is_odd(); }

Verdict hitchin_parity() {
    Verdict v;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        Rng rng(derive_seed(kSeed ^ 3, i));
        const std::size_t r = 2 * (1 + i % 3);
        const HiggsGerm germs[3] = {
            random_symmetric_germ(rng, random_symmetric_form(rng, r), 3),
            random_alternating_germ(rng, random_alternating_form(rng, r), 3),
            random_invariant_germ(rng, r, static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(r / 2))), 3)};
        for (const HiggsGerm& g : germs) {
            const bool typed = g.structure().kind == HiggsStructureKind::InvariantTyped;
            const BiPoly cp = oracle::char_poly(g.phi());
            const HitchinImage img = hitchin_map(g);
            for (std::size_t k = 1; k <= r; ++k) {
                const Poly& h = cp.coefficients()[r - k];
                if (img.components[k - 1] != h) v.fail("Hitchin component differs from cofactor oracle");
                if (!parity_holds(h, !typed || k % 2 == 0)) v.fail("parity violated for H_" + std::to_string(k));
            }
            if (!equivariance_parity_check(g).ok()) v.fail("library parity report disagrees");
            ++checked;
        }
    }
    SuiteOptions o;
    o.seed = kSeed;
    const SuiteResult suite = hitchin_parity_suite(o);
    if (!suite.ok()) v.fail("hitchin-parity suite: " + std::to_string(suite.failures) + " failures");
    if (v.ok) v.detail = std::to_string(checked) + " germs (200 per kind) + suite of " + std::to_string(suite.trials);
    return v;
}

// ---- 4 ------------------------------------------------------------------

Verdict vanishing_orders() {
    Verdict v;
    constexpr std::size_t kMaxRank = 6;
    std::vector<bool> sharp(kMaxRank + 1, false);
    for (std::size_t i = 0; i < 200; ++i) {
        Rng rng(derive_seed(kSeed ^ 4, i));
        const std::size_t r = static_cast<std::size_t>(rng.uniform(1, kMaxRank));
        const std::size_t k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(r / 2)));
        const HiggsGerm g = random_invariant_germ(rng, r, k, 3);
        const BiPoly cp = oracle::char_poly(g.phi());
        for (std::size_t idx = 1; idx <= r; ++idx) {
            const auto ord = vanishing_order(cp.coefficients()[r - idx]);
            const std::size_t bound = idx > 2 * k ? idx - 2 * k : 0;
            if (ord && *ord < bound) v.fail("H_" + std::to_string(idx) + " vanishes below the bound");
            if (ord && *ord == bound && bound > 0) sharp[idx] = true;
        }
        if (!vanishing_order_profile(g).ok) v.fail("library profile reports a violation");
    }
    SuiteOptions o;
    o.seed = kSeed;
    const SuiteResult suite = vanishing_order_suite(o);
    if (!suite.ok()) v.fail("vanishing-order suite: " + (suite.notes.empty() ? std::string("failed") : suite.notes[0]));
    for (std::size_t idx = 1; idx <= kMaxRank; ++idx)
        if (!sharp[idx]) v.fail("no witness attains equality for i=" + std::to_string(idx));
    if (v.ok) v.detail = "200 germs, r<=6; equality attained for every i in 1..6";
    return v;
}

// ---- 5 ------------------------------------------------------------------

std::size_t multiplicity_at_zero(const BiPoly& p) {
    const auto c = oracle::fiber(p);
    std::size_t m = 0;
    while (m < c.size() && c[m] == 0) ++m;
    return m;
}

Verdict fixed_points() {
    Verdict v;
    std::size_t count = 0;
    for (std::size_t r = 1; r <= 8; ++r)
        for (std::size_t i = 0; i < 25; ++i) {
            Rng rng(derive_seed(kSeed ^ 5, r * 100 + i));
            const SpectralGerm neg = random_spectral_germ(rng, r, Linearization::Negative, 4, true);
            const FixedPointCount fp = involution_fixed_points_on_fiber(neg);
            const std::size_t oracle_count = multiplicity_at_zero(build_spectral_polynomial(neg));
            if (fp != FixedPointCount(std::size_t{r % 2}) || oracle_count != r % 2)
                v.fail("negative germ of rank " + std::to_string(r) + " has the wrong fixed-point count");
            const SpectralGerm pos = random_spectral_germ(rng, r, Linearization::Positive, 4, rng.coin());
            if (involution_fixed_points_on_fiber(pos) != FixedPointCount(FiberwiseIdentity{}))
                v.fail("positive germ does not fix the whole fiber");
            count += 2;
        }
    SuiteOptions o;
    o.seed = kSeed;
    if (!fixed_point_suite(o).ok()) v.fail("fixed-point suite failed");
    if (v.ok) v.detail = std::to_string(count) + " germs over r in 1..8 + suite";
    return v;
}

// ---- 6 ------------------------------------------------------------------

Verdict maximal_types() {
    Verdict v;
    for (std::int64_t r : {3, 5, 7})
        for (std::int64_t n = 1; n <= 6; ++n) {
            const std::uint64_t want = std::uint64_t{1} << (2 * (n - 1));
            for (std::int64_t d = 0; d <= 1; ++d) {
                const auto got = enumerate_types(CoverData::make(1, n), r, d, true).size();
                if (got != want)
                    v.fail("r=" + std::to_string(r) + " n=" + std::to_string(n) + ": " + std::to_string(got));
                // brute force over all raw vectors where that stays small
                if (std::pow(r + 1, 2 * n) <= 2e6 && oracle::count_types(r, n, d, true) != got)
                    v.fail("brute-force count disagrees at r=" + std::to_string(r) + " n=" + std::to_string(n));
            }
        }
    if (v.ok) v.detail = "r in {3,5,7}, n in 1..6, both degree parities";
    return v;
}

// ---- 7 ------------------------------------------------------------------

Verdict orbits() {
    Verdict v;
    for (std::int64_t n = 1; n <= 6; ++n) {
        const OrbitReport rep = p2_orbits_rank2(n);
        const auto ref = oracle::sign_type_orbits(static_cast<unsigned>(n));
        const std::uint64_t want = std::uint64_t{1} << (2 * n - 1);
        if (rep.orbit_count != 2 || ref.orbits != 2) v.fail("orbit count != 2 at n=" + std::to_string(n));
        if (rep.component_count != want || ref.classes != want)
            v.fail("canonical type count != 2^(2n-1) at n=" + std::to_string(n));
    }
    if (v.ok) v.detail = "n in 1..6, BFS and whole-group union-find agree";
    return v;
}

// ---- 8 ------------------------------------------------------------------

BiPoly x_minus(const Rat& a) { return BiPoly(std::vector<Poly>{Poly::constant(-a), Poly::constant(1)}); }

Verdict smoothness() {
    Verdict v;
    const BiPoly shifted(std::vector<Poly>{Poly{1, 0, -1}, Poly{-2}, Poly{1}});
    const auto fs = fiber_singularity_test(shifted);
    if (fs.smooth || fs.witness_gcd != Poly({-1, 1})) v.fail("(x-1)^2 - t^2 not flagged with witness x-1");
    if (oracle::naive_singular_at_origin(shifted)) v.fail("naive criterion unexpectedly catches (x-1)^2 - t^2");

    std::size_t singular = 0, missed_by_naive = 0;
    for (std::size_t i = 0; i < 500; ++i) {
        Rng rng(derive_seed(kSeed ^ 8, i));
        const int dx = static_cast<int>(rng.uniform(1, 5));
        BiPoly p = random_monic_bipoly(rng, dx, 4);
        if (i % 2 == 1 && dx >= 2) {
            // force a singular point at (a, 0): (x-a)^2 Q + t (x-a) R + t^2 S
            const Rat a = rng.rational(3, 2);
            const BiPoly lin = x_minus(a);
            const BiPoly Q = random_monic_bipoly(rng, dx - 2, 4);
            const BiPoly t = BiPoly::from_t_poly(Poly{0, 1});
            const BiPoly R = random_monic_bipoly(rng, std::max(0, dx - 3), 3);
            const BiPoly S = random_monic_bipoly(rng, std::max(0, dx - 3), 2);
            p = lin * lin * Q + t * lin * R + t * t * S;
        }
        const auto res = fiber_singularity_test(p);
        const bool by_resultant = fiber_singular_by_resultant(p);
        const Poly gcd_oracle = oracle::poly(oracle::triple_gcd(p));
        if (res.smooth == by_resultant) v.fail("gcd and resultant criteria disagree at trial " + std::to_string(i));
        if (res.witness_gcd != gcd_oracle) v.fail("witness differs from Euclid oracle at trial " + std::to_string(i));
        if (p.degree_x() > 5 || p.degree_t() > 4) v.fail("generated germ outside the degree box");
        if (!res.smooth) {
            ++singular;
            if (!oracle::naive_singular_at_origin(p)) ++missed_by_naive;
        }
    }
    SuiteOptions o;
    o.seed = kSeed;
    o.trials = 500;
    if (!smoothness_suite(o).ok()) v.fail("smoothness suite failed");
    if (v.ok)
        v.detail = "500 germs (" + std::to_string(singular) + " singular, " + std::to_string(missed_by_naive) +
                   " missed by the x=0 criterion) + suite of 500";
    return v;
}

// ---- 9 ------------------------------------------------------------------

Verdict square_implies_node() {
    Verdict v;
    std::size_t members = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        Rng rng(derive_seed(kSeed ^ 9, i));
        const std::size_t deg = static_cast<std::size_t>(rng.uniform(1, 3));
        std::set<Rat> roots;
        while (roots.size() < deg) roots.insert(rng.rational(4, 2));
        Poly q{1};
        for (const Rat& a : roots) q *= Poly{Rat(-a), Rat(1)};
        const Poly fiber = q * q;
        // sections s_i = coefficient of x^(r-i) in q^2 plus even t-terms
        const std::size_t r = 2 * deg;
        std::vector<Poly> sections;
        for (std::size_t k = 1; k <= r; ++k) {
            Poly s = Poly::constant(fiber[r - k]);
            s += random_even_poly(rng, 4) * Poly{0, 0, 1};
            sections.push_back(s);
        }
        const SpectralGerm g = SpectralGerm::make(sections, Chart::Ramified, Linearization::Positive);
        const Membership m = w_membership(g, WSpace::minus());
        if (!m.member || !m.square_certificate) {
            v.fail("square fiber not recognized at trial " + std::to_string(i));
            continue;
        }
        ++members;
        const auto fs = fiber_singularity_test(build_spectral_polynomial(g));
        const Poly radical = oracle::poly(oracle::monic(oracle::quot(
            oracle::coeffs(*m.square_certificate),
            oracle::gcd(oracle::coeffs(*m.square_certificate), oracle::derivative(oracle::coeffs(*m.square_certificate))))));
        if (fs.smooth) v.fail("W- member with smooth fiber at trial " + std::to_string(i));
        if (fs.witness_gcd != radical) v.fail("witness != certificate radical at trial " + std::to_string(i));
    }
    SuiteOptions o;
    o.seed = kSeed;
    if (!square_node_suite(o).ok()) v.fail("square-node suite failed");
    std::size_t ledger_cells = 0;
    for (std::int64_t gy = 1; gy <= 5; ++gy)
        for (std::int64_t n = 1; n <= 6; ++n)
            for (std::int64_t r = 2; r <= 8; r += 2) {
                const CoverData c = CoverData::make(gy, n);
                const GenusLedger led = genus_ledger(c, r, {LedgerScenarioKind::AntiAlternating});
                if (!led.g_normalized || *led.g_normalized != led.g_spectral - r * n)
                    v.fail("g_normalized != g_spectral - rn at g_Y=" + std::to_string(gy));
                ++ledger_cells;
            }
    if (v.ok)
        v.detail = std::to_string(members) + " square germs all nodal; ledger identity on " +
                   std::to_string(ledger_cells) + " cells";
    return v;
}

// ---- 10 -----------------------------------------------------------------

Verdict kernels() {
    Verdict v;
    for (std::size_t i = 0; i < 200; ++i) {
        Rng rng(derive_seed(kSeed ^ 10, i));
        const std::size_t r = 1 + i % 6;
        const PolyMatrix m = random_matrix(rng, r, r, 2);
        const BiPoly cp = char_poly(m);
        if (cp != oracle::char_poly(m)) v.fail("char_poly differs from cofactor oracle");
        if (!evaluate(cp, m).is_zero()) v.fail("Cayley-Hamilton fails at trial " + std::to_string(i));
    }
    for (std::size_t i = 0; i < 200; ++i) {
        Rng rng(derive_seed(kSeed ^ 11, i));
        const std::size_t r = 1 + i % 8;
        const PolyMatrix m = random_antisymmetric(rng, r, 2);
        const Poly d = oracle::det(m);
        if (determinant(m) != d) v.fail("determinant differs from cofactor oracle");
        if (r % 2 == 0) {
            const Poly pf = pfaffian(m);
            if (pf * pf != d) v.fail("pf^2 != det at trial " + std::to_string(i));
        } else if (!d.is_zero()) {
            v.fail("odd antisymmetric determinant is nonzero");
        }
    }
    std::size_t squares = 0, non_squares = 0;
    for (std::size_t i = 0; i < 1000; ++i) {
        Rng rng(derive_seed(kSeed ^ 12, i));
        Poly p = random_poly(rng, static_cast<int>(rng.uniform(0, 5)));
        if (p.is_zero()) p = Poly{1};
        const Poly sq = p * p;
        const Poly target = i < 500 ? sq : sq + Poly::constant(rng.nonzero_rational(3));
        const auto root = square_root(target);
        const bool oracle_square = oracle::is_square(target);
        if (root.has_value() != oracle_square) v.fail("square_root disagrees with Yun oracle");
        if (root && *root * *root != target) v.fail("square_root does not multiply back");
        if (i < 500 && (!root || (*root != p && *root != -p))) v.fail("square_root(p^2) != +-p");
        (oracle_square ? squares : non_squares) += 1;
    }
    if (non_squares < 450) v.fail("too few genuine non-squares among the perturbed inputs");
    if (v.ok)
        v.detail = "200 Cayley-Hamilton, 200 pf^2=det, 1000 square roots (" + std::to_string(squares) + " squares, " +
                   std::to_string(non_squares) + " non-squares)";
    return v;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
    double limit_seconds;  // 0: no limit
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "dimension-identity sweep", identity_grid, 10},
        {2, "Pfaffian square certificate", pfaffian_square, 30},
        {3, "Hitchin equivariance parity", hitchin_parity, 0},
        {4, "vanishing-order bound and sharpness", vanishing_orders, 0},
        {5, "fixed points over ramification points", fixed_points, 0},
        {6, "maximal-type count", maximal_types, 0},
        {7, "P[2] orbits on sign types", orbits, 0},
        {8, "fiber smoothness criterion", smoothness, 0},
        {9, "square fiber implies nodes; normalized genus", square_implies_node, 0},
        {10, "exact kernels", kernels, 60},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        const double secs = seconds_since(t0);
        if (c.limit_seconds > 0 && secs >= c.limit_seconds)
            v.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        std::printf("%s criterion %2d: %s (%.2f s) - %s\n", v.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    v.detail.c_str());
        if (!v.ok) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
