// SPDX-License-Identifier: Apache-2.0
#include "prym/suites.hpp"

#include <algorithm>
#include <set>
#include <string_view>

#include "prym/error.hpp"
#include "prym/higgs.hpp"
#include "prym/parallel.hpp"
#include "prym/random.hpp"
#include "prym/spectral.hpp"

namespace prym {

Json replay_scenario(const Json& task, const CoverData& cover) {
    return Json{{"version", "1"}, {"cover", to_json(cover)}, {"tasks", Json::array({task})}};
}

namespace {

struct Outcome {
    bool ok = true;
    std::optional<Json> replay;
    std::vector<std::size_t> tags;
};

Outcome fail(Json task) { return {false, std::move(task), {}}; }

std::uint64_t name_hash(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) h = (h ^ ch) * 0x100000001b3ULL;
    return h;
}

template <class F>
std::pair<SuiteResult, std::vector<Outcome>> run_trials(std::string name, const SuiteOptions& o, std::size_t count,
                                                        F trial) {
    const std::uint64_t base = o.seed ^ name_hash(name);
    auto outcomes = parallel_map(count, o.jobs, [&](std::size_t i) {
        Rng rng(derive_seed(base, i));
        return trial(i, rng);
    });
    SuiteResult res;
    res.name = std::move(name);
    res.trials = count;
    for (const auto& oc : outcomes) {
        if (oc.ok) continue;
        ++res.failures;
        if (!res.counterexample && oc.replay) res.counterexample = replay_scenario(*oc.replay);
    }
    return {std::move(res), std::move(outcomes)};
}

/// Characteristic polynomial of a constant matrix as a polynomial in x.
Poly constant_char_poly(const PolyMatrix& a) {
    const BiPoly cp = char_poly(a);
    std::vector<Rat> c;
    for (const Poly& k : cp.coefficients()) c.push_back(k[0]);
    return Poly(std::move(c));
}

Json higgs_task(const HiggsGerm& h) { return Json{{"kind", "higgs"}, {"higgs", to_json(h)}}; }
Json matrix_task(const PolyMatrix& m) { return Json{{"kind", "matrix"}, {"matrix", to_json(m)}}; }

std::size_t even_rank(Rng& rng, std::size_t max_dim) {
    return 2 * static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(std::max<std::size_t>(max_dim / 2, 1))));
}

}  // namespace

SuiteResult pfaffian_square_suite(const SuiteOptions& o) {
    return run_trials("pfaffian-square", o, o.trials, [&](std::size_t i, Rng& rng) -> Outcome {
        const std::size_t r = even_rank(rng, o.max_dim);
        const PolyMatrix J = i % 2 == 0 ? standard_symplectic(r) : random_alternating_form(rng, r);
        const PolyMatrix M = random_antisymmetric(rng, r, 0, 3);
        const PolyMatrix A = *constant_inverse(J) * M;
        const HiggsGerm h = HiggsGerm::classify(A, HiggsStructure::alternating(J));
        const Poly q = alternating_square_certificate(h);
        const Poly chi = constant_char_poly(A);
        const auto root = square_root(chi);
        if (q * q != chi || !root || *root != q) return fail(higgs_task(h));
        return {};
    }).first;
}

SuiteResult hitchin_parity_suite(const SuiteOptions& o) {
    return run_trials("hitchin-parity", o, 3 * o.trials, [&](std::size_t i, Rng& rng) -> Outcome {
        const std::size_t r = 2 * static_cast<std::size_t>(rng.uniform(1, 3));
        std::optional<HiggsGerm> h;
        switch (i % 3) {
            case 0:
                h = random_symmetric_germ(rng, random_symmetric_form(rng, r), 3);
                break;
            case 1:
                h = random_alternating_germ(rng, random_alternating_form(rng, r), 3);
                break;
            default:
                h = random_invariant_germ(rng, r, static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(r))), 3);
                break;
        }
        if (!equivariance_parity_check(*h).ok()) return fail(higgs_task(*h));
        return {};
    }).first;
}

SuiteResult vanishing_order_suite(const SuiteOptions& o) {
    const std::int64_t r_max = static_cast<std::int64_t>(std::min<std::size_t>(6, std::max<std::size_t>(o.max_dim, 1)));
    auto [res, outcomes] = run_trials("vanishing-order", o, o.trials, [&](std::size_t, Rng& rng) -> Outcome {
        const std::int64_t r = rng.uniform(1, r_max);
        const std::int64_t kp = rng.uniform(0, r / 2);
        const HiggsGerm h = random_invariant_germ(rng, static_cast<std::size_t>(r), static_cast<std::size_t>(kp), 3);
        const VanishingProfile prof = vanishing_order_profile(h);
        if (!prof.ok) return fail(higgs_task(h));
        Outcome oc;
        for (std::int64_t i = 2 * kp + 1; i <= r; ++i) {
            const auto& ord = prof.orders[static_cast<std::size_t>(i - 1)];
            if (ord && static_cast<std::int64_t>(*ord) == i - 2 * kp) oc.tags.push_back(static_cast<std::size_t>(i));
        }
        return oc;
    });
    std::set<std::size_t> sharp;
    for (const auto& oc : outcomes) sharp.insert(oc.tags.begin(), oc.tags.end());
    for (std::int64_t i = 1; i <= r_max; ++i) {
        if (sharp.count(static_cast<std::size_t>(i))) continue;
        ++res.failures;
        res.notes.push_back("no generated germ attains equality for i = " + std::to_string(i));
    }
    if (sharp.size() == static_cast<std::size_t>(r_max))
        res.notes.push_back("equality attained for every i in 1.." + std::to_string(r_max));
    return res;
}

SuiteResult fixed_point_suite(const SuiteOptions& o) {
    const std::size_t r_max = std::max<std::size_t>(o.max_dim, 1);
    return run_trials("fixed-points", o, o.trials, [&](std::size_t i, Rng& rng) -> Outcome {
        const std::size_t r = 1 + i % r_max;
        const SpectralGerm neg = random_spectral_germ(rng, r, Linearization::Negative, 4, true);
        const FixedPointCount got = involution_fixed_points_on_fiber(neg);
        const std::size_t want = r % 2;
        if (!std::holds_alternative<std::size_t>(got) || std::get<std::size_t>(got) != want)
            return fail(Json{{"kind", "germ"},
                             {"germ", to_json(neg)},
                             {"spaces", Json::array()},
                             {"expect", Json{{"fixed_points", want}}}});
        const SpectralGerm pos = random_spectral_germ(rng, r, Linearization::Positive, 4, true);
        if (!std::holds_alternative<FiberwiseIdentity>(involution_fixed_points_on_fiber(pos)))
            return fail(Json{{"kind", "germ"},
                             {"germ", to_json(pos)},
                             {"spaces", Json::array()},
                             {"expect", Json{{"fixed_points", "fiberwise identity"}}}});
        return {};
    }).first;
}

namespace {

BiPoly shift_root_square(Rng& rng, int dx, int dt, bool singular) {
    // (x - l)^2 Q(x) + t (x - l) A(x, t) + t^2 B(x, t) is singular at (l, 0);
    // replacing the middle term by t C(x, t) with C(l, 0) != 0 keeps a double
    // root on the fiber but a smooth curve
    const Rat l(static_cast<long>(rng.uniform(-3, 3)));
    const BiPoly lin = BiPoly(std::vector<Poly>{Poly::constant(-l), Poly::constant(1)});
    const BiPoly q = random_monic_bipoly(rng, dx - 2, 0);
    const BiPoly tt = BiPoly::from_t_poly(Poly::monomial(1, 1));
    BiPoly p = lin * lin * q;
    if (singular) {
        p += tt * lin * BiPoly::from_t_poly(random_poly(rng, std::max(dt - 1, 0))) * random_monic_bipoly(rng, std::max(dx - 2, 0), 0);
    } else {
        const Rat c = rng.nonzero_rational(3, 1);
        p += tt * BiPoly::from_t_poly(Poly::constant(c));
    }
    if (dt >= 2) {
        std::vector<Poly> b(static_cast<std::size_t>(dx));
        for (auto& k : b) k = random_poly(rng, dt - 2);
        p += tt * tt * BiPoly(std::move(b));
    }
    return p;
}

bool divides(const Poly& d, const Poly& p) { return divmod(p, d).second.is_zero(); }

}  // namespace

SuiteResult smoothness_suite(const SuiteOptions& o) {
    return run_trials("smoothness", o, o.trials, [&](std::size_t i, Rng& rng) -> Outcome {
        const int dt = static_cast<int>(rng.uniform(0, 4));
        BiPoly p;
        switch (i % 3) {
            case 0:
                p = random_monic_bipoly(rng, static_cast<int>(rng.uniform(1, 5)), dt);
                break;
            case 1:
                p = shift_root_square(rng, static_cast<int>(rng.uniform(2, 5)), std::max(dt, 1), true);
                break;
            default:
                p = shift_root_square(rng, static_cast<int>(rng.uniform(2, 5)), std::max(dt, 1), false);
                break;
        }
        const FiberSingularity fs = fiber_singularity_test(p);
        const bool by_res = fiber_singular_by_resultant(p);
        bool ok = fs.smooth != by_res;
        if (ok && !fs.smooth) {
            ok = divides(fs.witness_gcd, p.at_t_zero()) && divides(fs.witness_gcd, p.d_dx().at_t_zero()) &&
                 divides(fs.witness_gcd, p.d_dt().at_t_zero());
        }
        if (ok && i % 3 == 1) ok = !fs.smooth;
        if (!ok) return fail(Json{{"kind", "bipoly"}, {"P", to_json(p)}});
        return {};
    }).first;
}

SuiteResult square_node_suite(const SuiteOptions& o) {
    return run_trials("square-node", o, o.trials, [&](std::size_t i, Rng& rng) -> Outcome {
        const std::size_t r = 2 * static_cast<std::size_t>(rng.uniform(1, 3));
        std::vector<Poly> sections;
        if (i % 2 == 0) {
            // P(x, 0) = q(x)^2 with q monic of distinct integer roots
            std::vector<std::int64_t> roots;
            while (roots.size() < r / 2) {
                const std::int64_t v = rng.uniform(-5, 5);
                if (std::find(roots.begin(), roots.end(), v) == roots.end()) roots.push_back(v);
            }
            Poly q = Poly::constant(1);
            for (std::int64_t v : roots) q *= Poly{Rat(static_cast<long>(-v)), Rat(1)};
            const Poly sq = q * q;
            for (std::size_t k = 1; k <= r; ++k)
                sections.push_back(Poly::constant(sq[r - k]) + Poly::monomial(1, 2) * random_even_poly(rng, 2));
        } else {
            for (std::size_t k = 1; k <= r; ++k) sections.push_back(random_even_poly(rng, 4, 2));
        }
        const SpectralGerm g = SpectralGerm::make(std::move(sections), Chart::Ramified, Linearization::Positive);
        const Membership m = w_membership(g, WSpace::minus());
        const Json replay{{"kind", "germ"},
                          {"germ", to_json(g)},
                          {"spaces", Json::array({"wminus"})},
                          {"expect", Json{{"smooth", false}}}};
        if (i % 2 == 0 && !m.member) return fail(replay);
        if (!m.member) return {};
        const Poly& q = *m.square_certificate;
        if (!gcd(q, q.derivative()).is_constant()) return {};
        const FiberSingularity fs = fiber_singularity_test(build_spectral_polynomial(g));
        if (fs.smooth || fs.witness_gcd != q.monic()) return fail(replay);
        return {};
    }).first;
}

SuiteResult cayley_hamilton_suite(const SuiteOptions& o) {
    const std::int64_t r_max = static_cast<std::int64_t>(std::min<std::size_t>(6, std::max<std::size_t>(o.max_dim, 1)));
    return run_trials("cayley-hamilton", o, o.trials, [&](std::size_t, Rng& rng) -> Outcome {
        const auto r = static_cast<std::size_t>(rng.uniform(1, r_max));
        const PolyMatrix a = random_matrix(rng, r, r, static_cast<int>(rng.uniform(0, 2)));
        if (!evaluate(char_poly(a), a).is_zero()) return fail(matrix_task(a));
        return {};
    }).first;
}

SuiteResult pfaffian_det_suite(const SuiteOptions& o) {
    const std::int64_t r_max = static_cast<std::int64_t>(std::max<std::size_t>(o.max_dim, 1));
    return run_trials("pfaffian-det", o, o.trials, [&](std::size_t, Rng& rng) -> Outcome {
        const auto r = static_cast<std::size_t>(rng.uniform(1, r_max));
        const PolyMatrix a = random_antisymmetric(rng, r, static_cast<int>(rng.uniform(0, 2)));
        const Poly det = determinant(a);
        const bool ok = r % 2 == 0 ? pow(pfaffian(a), 2) == det : det.is_zero();
        if (!ok) return fail(matrix_task(a));
        return {};
    }).first;
}

SuiteResult square_root_suite(const SuiteOptions& o) {
    return run_trials("square-root", o, 2 * o.trials, [&](std::size_t i, Rng& rng) -> Outcome {
        const bool square = i < o.trials;
        const Rat c = rng.nonzero_rational(5, 2);
        if (i % 2 == 0) {
            Poly p = random_poly(rng, static_cast<int>(rng.uniform(1, 6)));
            while (p.degree() < 1) p = p + Poly::monomial(rng.nonzero_rational(4, 1), 1);
            const Poly target = square ? p * p : p * p + Poly::constant(c);
            const auto root = square_root(target);
            const Poly canonical = sgn(p.leading()) > 0 ? p : -p;
            const bool ok = square ? root && *root == canonical : !root;
            if (!ok) return fail(Json{{"kind", "poly"}, {"p", to_json(target)}, {"expect", Json{{"square", square}}}});
        } else {
            const BiPoly p = random_monic_bipoly(rng, static_cast<int>(rng.uniform(1, 4)), static_cast<int>(rng.uniform(0, 3)));
            const BiPoly target = square ? p * p : p * p + BiPoly::from_t_poly(Poly::constant(c));
            const auto root = square_root(target);
            const bool ok = square ? root && *root == p : !root;
            if (!ok) return fail(Json{{"kind", "bipoly"}, {"P", to_json(target)}, {"expect", Json{{"square", square}}}});
        }
        return {};
    }).first;
}

SuiteResult maximal_type_suite(const Range& n, const std::vector<std::int64_t>& odd_ranks) {
    SuiteResult res;
    res.name = "maximal-types";
    for (std::int64_t nn = n.lo; nn <= n.hi; ++nn)
        for (std::int64_t r : odd_ranks) {
            ++res.trials;
            const CoverData c = CoverData::make(1, nn);
            const auto count = enumerate_types(c, r, 0, true).size();
            const std::uint64_t want = std::uint64_t{1} << (2 * (nn - 1));
            if (count != want) {
                ++res.failures;
                res.notes.push_back("r = " + std::to_string(r) + ", n = " + std::to_string(nn) + ": " +
                                    std::to_string(count) + " maximal types, expected " + std::to_string(want));
                if (!res.counterexample)
                    res.counterexample = replay_scenario(
                        Json{{"kind", "types"}, {"r", r}, {"d", 0}, {"maximal_only", true}}, c);
            }
        }
    return res;
}

SuiteResult orbit_suite(const Range& n) {
    SuiteResult res;
    res.name = "p2-orbits";
    for (std::int64_t nn = n.lo; nn <= n.hi; ++nn) {
        ++res.trials;
        const OrbitReport rep = p2_orbits_rank2(nn);
        const std::uint64_t want = std::uint64_t{1} << (2 * nn - 1);
        res.notes.push_back("n = " + std::to_string(nn) + ": " + std::to_string(rep.orbit_count) + " orbits, " +
                            std::to_string(rep.component_count) + " components");
        if (rep.orbit_count != 2 || rep.component_count != want) {
            ++res.failures;
            if (!res.counterexample)
                res.counterexample = replay_scenario(Json{{"kind", "orbits"}, {"n", nn}}, CoverData::make(1, nn));
        }
    }
    return res;
}

}  // namespace prym
