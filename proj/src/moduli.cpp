// SPDX-License-Identifier: Apache-2.0
#include "prym/moduli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <string>

#include "prym/error.hpp"
#include "prym/parallel.hpp"

namespace prym {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

std::int64_t max_local_defect(std::int64_t r) { return (r / 2) * (r - r / 2); }

}  // namespace

std::vector<std::int64_t> canonical_ks(std::int64_t r, const std::vector<std::int64_t>& ks) {
    std::vector<std::int64_t> flipped(ks.size());
    std::transform(ks.begin(), ks.end(), flipped.begin(), [r](std::int64_t k) { return r - k; });
    return std::min(ks, flipped);
}

InvariantType InvariantType::make(std::int64_t r, std::vector<std::int64_t> ks) {
    if (r < 1) throw Error(ErrorKind::InadmissibleInput, "rank must be at least 1");
    for (std::int64_t k : ks)
        if (k < 0 || k > r)
            throw Error(ErrorKind::InadmissibleInput, "k_p = " + str(k) + " outside [0, " + str(r) + "]");
    return InvariantType(r, canonical_ks(r, ks));
}

std::int64_t InvariantType::k_sum() const noexcept { return std::accumulate(ks_.begin(), ks_.end(), std::int64_t{0}); }

std::int64_t InvariantType::defect() const noexcept {
    std::int64_t s = 0;
    for (std::int64_t k : ks_) s += k * (r_ - k);
    return s;
}

bool InvariantType::parity_matches(std::int64_t d) const noexcept { return ((k_sum() - d) % 2 + 2) % 2 == 0; }

SignType SignType::from_mask(unsigned points, std::uint64_t mask) {
    if (points == 0 || points > 63) throw Error(ErrorKind::InadmissibleInput, "sign type needs 1..63 points");
    const std::uint64_t all = (std::uint64_t{1} << points) - 1;
    mask &= all;
    // the lexicographically smaller sign vector starts with +1, i.e. bit 0 clear
    if (mask & 1) mask ^= all;
    return SignType(points, mask);
}

SignType SignType::make(std::vector<int> signs) {
    std::uint64_t mask = 0;
    for (std::size_t p = 0; p < signs.size(); ++p) {
        if (signs[p] != 1 && signs[p] != -1) throw Error(ErrorKind::InadmissibleInput, "signs must be +1 or -1");
        if (signs[p] == -1) mask |= std::uint64_t{1} << p;
    }
    return from_mask(static_cast<unsigned>(signs.size()), mask);
}

std::vector<int> SignType::signs() const {
    std::vector<int> out(points_);
    for (unsigned p = 0; p < points_; ++p) out[p] = (mask_ >> p & 1) ? -1 : 1;
    return out;
}

std::int64_t dim_invariant_locus(const CoverData& c, const InvariantType& t, std::int64_t d, bool fixed_det) {
    if (static_cast<std::int64_t>(t.ks().size()) != c.ramification_points())
        throw Error(ErrorKind::InadmissibleInput, "type has " + str(static_cast<std::int64_t>(t.ks().size())) +
                                                      " entries, cover has " + str(c.ramification_points()) +
                                                      " ramification points");
    if (!c.etale() && !t.parity_matches(d))
        throw Error(ErrorKind::ParityViolation,
                    "sum of k_p = " + str(t.k_sum()) + " and d = " + str(d) + " differ mod 2");
    const std::int64_t r = t.r();
    if (fixed_det) return (r * r - 1) * (c.g_Y() - 1) + t.defect();
    return r * r * (c.g_Y() - 1) + 1 + t.defect();
}

std::int64_t dim_anti_invariant(const CoverData& c, std::int64_t r, AntiKind kind) {
    if (r < 1) throw Error(ErrorKind::InadmissibleInput, "rank must be at least 1");
    const std::int64_t base = r * r * (c.g_Y() - 1);
    if (kind == AntiKind::Plus) return base + c.n() * r * (r + 1) / 2;
    if (r % 2 != 0 && !c.etale())
        throw Error(ErrorKind::EmptyLocus, "no sigma-alternating bundles of odd rank " + str(r) + " on a ramified cover");
    return base + c.n() * r * (r - 1) / 2;
}

namespace {

void check_w_space(const CoverData& c, std::int64_t r, const WSpace& which) {
    if (r < 1) throw Error(ErrorKind::InadmissibleInput, "rank must be at least 1");
    if (which.kind == WSpaceKind::WMinus && r % 2 != 0 && !c.etale())
        throw Error(ErrorKind::InadmissibleInput, "W- needs even rank on a ramified cover");
    if (which.kind == WSpaceKind::WTau) {
        if (c.etale()) throw Error(ErrorKind::InadmissibleInput, "W^tau needs a ramified cover");
        if (static_cast<std::int64_t>(which.k_p) > r / 2)
            throw Error(ErrorKind::InadmissibleInput, "k_p must lie in [0, floor(r/2)]");
    }
}

std::int64_t ceil_half_sum(std::int64_t upto) {
    std::int64_t s = 0;
    for (std::int64_t i = 1; i <= upto; ++i) s += (i + 1) / 2;
    return s;
}

}  // namespace

std::int64_t dim_w_space(const CoverData& c, std::int64_t r, const WSpace& which) {
    check_w_space(c, r, which);
    const std::int64_t base = r * r * (c.g_Y() - 1);
    const std::int64_t n = c.n();
    switch (which.kind) {
        case WSpaceKind::WPlus:
            return base + n * r * (r + 1) / 2;
        case WSpaceKind::WMinus:
            return dim_w_space(c, r, WSpace::plus()) - 2 * n * (r / 2);
        case WSpaceKind::WMax:
            return r % 2 == 0 ? base + n * r * r / 2 + 1 : base + n * (r * r - 1) / 2 + 1;
        case WSpaceKind::WTau: {
            const std::int64_t kp = static_cast<std::int64_t>(which.k_p);
            return dim_w_space(c, r, WSpace::max()) - ceil_half_sum(r - 2 * kp - 1);
        }
    }
    return 0;
}

std::int64_t dim_w_space_by_sections(const CoverData& c, std::int64_t r, const WSpace& which) {
    check_w_space(c, r, which);
    std::int64_t total = 0;
    switch (which.kind) {
        case WSpaceKind::WPlus:
            for (std::int64_t i = 1; i <= r; ++i) total += h0_canonical_power_plus(c, i, Linearization::Positive);
            return total;
        case WSpaceKind::WMinus: {
            for (std::int64_t i = 1; i <= r; ++i) total += h0_canonical_power_plus(c, i, Linearization::Positive);
            // at each ramification point P(x, 0) must be the square of a monic
            // polynomial of degree r/2: codimension r - r/2 in monic degree-r
            return total - c.ramification_points() * (r - r / 2);
        }
        case WSpaceKind::WMax:
            for (std::int64_t i = 1; i <= r; ++i) total += h0_canonical_power_plus(c, i, Linearization::Negative);
            return total;
        case WSpaceKind::WTau: {
            const std::int64_t kp2 = 2 * static_cast<std::int64_t>(which.k_p);
            for (std::int64_t i = 1; i <= r; ++i) {
                // up to i = 2k_p + 1 the required order is implied by parity
                if (i <= kp2 + 1)
                    total += h0_canonical_power_plus(c, i, Linearization::Negative);
                else
                    total += h0_twisted_plus(c, i, i - kp2);
            }
            return total;
        }
    }
    return 0;
}

std::int64_t dim_single_point_type_locus(const CoverData& c, std::int64_t r, std::int64_t k_p) {
    if (c.etale()) throw Error(ErrorKind::InadmissibleInput, "typed points need a ramified cover");
    std::vector<std::int64_t> ks(static_cast<std::size_t>(c.ramification_points()), r / 2);
    ks[0] = k_p;
    const InvariantType t = InvariantType::make(r, std::move(ks));
    return dim_invariant_locus(c, t, t.k_sum() % 2, false);
}

std::vector<InvariantType> enumerate_types(const CoverData& c, std::int64_t r, std::int64_t d, bool maximal_only) {
    if (c.etale()) throw Error(ErrorKind::InadmissibleInput, "types need a ramified cover");
    if (r < 1) throw Error(ErrorKind::InadmissibleInput, "rank must be at least 1");
    const std::size_t points = static_cast<std::size_t>(c.ramification_points());
    std::vector<std::int64_t> choices;
    if (maximal_only) {
        choices.push_back(r / 2);
        if (r % 2 != 0) choices.push_back(r / 2 + 1);
    } else {
        for (std::int64_t k = 0; k <= r; ++k) choices.push_back(k);
    }
    // walk the product of choices as a mixed-radix counter
    long double total = 1;
    for (std::size_t p = 0; p < points; ++p) total *= static_cast<long double>(choices.size());
    if (total > static_cast<long double>(kMaxTypeEnumeration))
        throw Error(ErrorKind::GridTooLarge, "type enumeration over " + std::to_string(choices.size()) + "^" +
                                                 std::to_string(points) + " vectors");

    std::vector<InvariantType> out;
    std::vector<std::size_t> digit(points, 0);
    std::vector<std::int64_t> ks(points);
    while (true) {
        for (std::size_t p = 0; p < points; ++p) ks[p] = choices[digit[p]];
        if (canonical_ks(r, ks) == ks) {
            InvariantType t = InvariantType::make(r, ks);
            if (t.parity_matches(d)) out.push_back(std::move(t));
        }
        std::size_t p = points;
        while (p > 0 && ++digit[p - 1] == choices.size()) digit[--p] = 0;
        if (p == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

OrbitReport p2_orbits_rank2(std::int64_t n) {
    if (n < 1 || n > 16) throw Error(ErrorKind::InadmissibleInput, "orbit computation needs 1 <= n <= 16");
    const unsigned points = static_cast<unsigned>(2 * n);
    const std::uint64_t all = (std::uint64_t{1} << points) - 1;
    // canonical masks have bit 0 clear; index them by mask >> 1
    const std::uint64_t classes = std::uint64_t{1} << (points - 1);
    std::vector<std::uint64_t> orbit(classes, UINT64_MAX);
    // even-weight vectors are generated by flipping two adjacent points
    std::vector<std::uint64_t> generators;
    for (unsigned p = 0; p + 1 < points; ++p) generators.push_back(std::uint64_t{3} << p);

    std::uint64_t orbits = 0;
    std::vector<std::uint64_t> stack;
    for (std::uint64_t start = 0; start < classes; ++start) {
        if (orbit[start] != UINT64_MAX) continue;
        orbit[start] = orbits;
        stack.push_back(start << 1);
        while (!stack.empty()) {
            const std::uint64_t m = stack.back();
            stack.pop_back();
            for (std::uint64_t g : generators) {
                std::uint64_t next = m ^ g;
                if (next & 1) next ^= all;
                if (orbit[next >> 1] == UINT64_MAX) {
                    orbit[next >> 1] = orbits;
                    stack.push_back(next);
                }
            }
        }
        ++orbits;
    }
    return {orbits, classes, std::uint64_t{1} << (points - 2)};
}

std::string to_string(const ComponentAnswer& a) {
    switch (a.kind) {
        case ComponentAnswer::Kind::Irreducible:
            return "irreducible";
        case ComponentAnswer::Kind::Empty:
            return "empty";
        case ComponentAnswer::Kind::Count:
            return std::to_string(a.count) + " connected components";
    }
    return {};
}

ComponentAnswer component_oracle(const ComponentScenario& s) {
    using K = ComponentAnswer::Kind;
    if (s.r < 1) throw Error(ErrorKind::UnknownScenario, "rank must be at least 1");
    if (s.locus == Locus::AntiInvariant) {
        if (!s.ramified) return {K::Count, 2};
        if (s.kind == AntiKind::Plus) return {K::Irreducible, 0};
        if (s.r % 2 != 0) return {K::Empty, 0};
        return {K::Count, 2};
    }
    if (s.ramified && s.kind == AntiKind::Plus) return {K::Irreducible, 0};
    if (s.ramified && s.kind == AntiKind::Minus && s.r == 2 && s.n >= 1 && s.n <= 31)
        return {K::Count, std::uint64_t{1} << (2 * s.n - 1)};
    throw Error(ErrorKind::UnknownScenario, "no known component count for this fixed-determinant scenario");
}

std::uint64_t max_grid_cells() {
    if (const char* env = std::getenv("PRYM_HITCHIN_MAX_GRID")) {
        std::uint64_t v = 0;
        const char* end = env + std::char_traits<char>::length(env);
        auto [ptr, ec] = std::from_chars(env, end, v);
        if (ec == std::errc() && ptr == end && v > 0) return v;
    }
    return kDefaultMaxGrid;
}

namespace {

IdentityCheck make_check(std::string family, const CoverData& c, std::int64_t r, std::optional<std::int64_t> k_p,
                         std::vector<std::pair<std::string, std::int64_t>> routes) {
    const bool pass = std::all_of(routes.begin(), routes.end(),
                                  [&](const auto& rt) { return rt.second == routes.front().second; });
    return {std::move(family), c.g_Y(), c.n(), r, k_p, std::move(routes), pass};
}

}  // namespace

std::vector<IdentityCheck> identity_checks(const CoverData& c, std::int64_t r, std::optional<Range> k_p) {
    std::vector<IdentityCheck> out;
    const std::int64_t n = c.n();

    const GenusLedger sym = genus_ledger(c, r, {LedgerScenarioKind::AntiSymmetric, 0});
    const std::int64_t u_plus = dim_anti_invariant(c, r, AntiKind::Plus);
    out.push_back(make_check("W+ = U+", c, r, {},
                             {{"W+", dim_w_space(c, r, WSpace::plus())},
                              {"W+ by sections", dim_w_space_by_sections(c, r, WSpace::plus())},
                              {"U+", u_plus}}));
    out.push_back(make_check("P+ = U+", c, r, {}, {{"P+", sym.prym_dim}, {"U+", u_plus}}));
    // the quotient of the spectral curve is a spectral curve over Y for
    // L = K_Y (x) Delta, deg L = 2 g_Y - 2 + n
    out.push_back(make_check("quotient spectral genus", c, r, {},
                             {{"g(Xs/sigma) by Riemann-Hurwitz", sym.g_quotient_spectral},
                              {"g(Xs/sigma) over Y", spectral_genus(2 * c.g_Y() - 2 + n, r, c.g_Y())}}));

    if (r % 2 == 0 || c.etale()) {
        const GenusLedger alt = genus_ledger(c, r, {LedgerScenarioKind::AntiAlternating, 0});
        const std::int64_t u_minus = dim_anti_invariant(c, r, AntiKind::Minus);
        out.push_back(make_check("W- = U-", c, r, {},
                                 {{"W-", dim_w_space(c, r, WSpace::minus())},
                                  {"W- by sections", dim_w_space_by_sections(c, r, WSpace::minus())},
                                  {"Prym of normalized curve", alt.prym_dim},
                                  {"U-", u_minus}}));
        out.push_back(make_check("normalized genus", c, r, {},
                                 {{"g_normalized", *alt.g_normalized}, {"g_spectral - rn", alt.g_spectral - r * n}}));
    }

    const GenusLedger inv = genus_ledger(c, r, {LedgerScenarioKind::InvariantMax, 0});
    std::vector<std::pair<std::string, std::int64_t>> max_routes = {
        {"W^m", dim_w_space(c, r, WSpace::max())},
        {"W^m by sections", dim_w_space_by_sections(c, r, WSpace::max())},
        {"Prym of quotient", inv.prym_dim}};
    if (c.etale()) {
        max_routes.push_back({"U(r,0)", r * r * (c.g_Y() - 1) + 1});
    } else {
        max_routes.push_back({"U(r,0) maximal type", dim_single_point_type_locus(c, r, r / 2)});
        max_routes.push_back({"U(r,0) closed form", r * r * (c.g_Y() - 1) + 1 + 2 * n * max_local_defect(r)});
    }
    out.push_back(make_check("U(r,0) = W^m", c, r, {}, std::move(max_routes)));

    if (!c.etale()) {
        const std::int64_t lo = k_p ? std::max<std::int64_t>(k_p->lo, 0) : 0;
        const std::int64_t hi = k_p ? std::min<std::int64_t>(k_p->hi, r / 2) : r / 2;
        for (std::int64_t k = lo; k <= hi; ++k) {
            const WSpace tau = WSpace::tau(static_cast<std::size_t>(k));
            const std::int64_t u_tau = dim_single_point_type_locus(c, r, k);
            out.push_back(make_check("U^tau = W^tau", c, r, k,
                                     {{"W^tau", dim_w_space(c, r, tau)},
                                      {"W^tau by sections", dim_w_space_by_sections(c, r, tau)},
                                      {"U^tau", u_tau}}));
            const GenusLedger led = genus_ledger(c, r, {LedgerScenarioKind::InvariantTau, k});
            out.push_back(make_check("ghat_Y = dim Pic^m(Xhat)^sigma = U^tau", c, r, k,
                                     {{"ghat_Y closed form", led.prym_dim},
                                      {"ghat_Y by Riemann-Hurwitz", *led.g_normalized_quotient},
                                      {"U^tau", u_tau}}));
        }
    }
    return out;
}

SweepReport identity_sweep(const GridSpec& grid, unsigned jobs) {
    for (const Range* rg : {&grid.g_Y, &grid.n, &grid.r})
        if (rg->lo < 0 || rg->hi < rg->lo)
            throw Error(ErrorKind::InadmissibleInput, "grid ranges must satisfy 0 <= lo <= hi");
    if (grid.r.lo < 1) throw Error(ErrorKind::InadmissibleInput, "rank range must start at 1 or above");
    const long double cells = static_cast<long double>(grid.g_Y.size()) * grid.n.size() * grid.r.size();
    if (cells > static_cast<long double>(max_grid_cells()))
        throw Error(ErrorKind::GridTooLarge, "grid has " + std::to_string(static_cast<unsigned long long>(cells)) +
                                                 " cells, limit " + std::to_string(max_grid_cells()));

    struct Cell {
        std::int64_t g_Y, n, r;
    };
    std::vector<Cell> list;
    for (std::int64_t g = grid.g_Y.lo; g <= grid.g_Y.hi; ++g)
        for (std::int64_t n = grid.n.lo; n <= grid.n.hi; ++n)
            for (std::int64_t r = grid.r.lo; r <= grid.r.hi; ++r) list.push_back({g, n, r});

    auto per_cell = parallel_map(list.size(), jobs, [&](std::size_t i) -> std::optional<std::vector<IdentityCheck>> {
        const Cell& cell = list[i];
        if (2 * cell.g_Y - 1 + cell.n < 2) return std::nullopt;
        return identity_checks(CoverData::make(cell.g_Y, cell.n), cell.r, grid.k_p);
    });

    SweepReport rep;
    rep.cells = list.size();
    for (auto& cell : per_cell) {
        if (!cell) {
            ++rep.skipped_cells;
            continue;
        }
        for (auto& chk : *cell) {
            rep.checks.push_back(std::move(chk));
            if (!rep.checks.back().pass) {
                rep.first_failure = rep.checks.size() - 1;
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace prym
