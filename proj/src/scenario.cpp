// SPDX-License-Identifier: Apache-2.0
#include "prym/scenario.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "prym/error.hpp"
#include "prym/higgs.hpp"
#include "prym/parallel.hpp"
#include "prym/spectral.hpp"

namespace prym {

std::optional<Format> parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "md") return Format::Md;
    return std::nullopt;
}

bool DimReport::ok() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

namespace {

const std::set<std::string>& families_for(const std::string& space) {
    static const std::map<std::string, std::set<std::string>> table = {
        {"wplus", {"W+ = U+", "P+ = U+", "quotient spectral genus"}},
        {"wminus", {"W- = U-", "normalized genus"}},
        {"wmax", {"U(r,0) = W^m"}},
        {"wtau", {"U^tau = W^tau", "ghat_Y = dim Pic^m(Xhat)^sigma = U^tau"}},
    };
    return table.at(space);
}

std::string route_label(const IdentityCheck& chk, const std::string& route) {
    if (!chk.k_p) return route;
    return route + " (k_p=" + std::to_string(*chk.k_p) + ")";
}

}  // namespace

DimReport dims_report(const CoverData& c, const DimsQuery& q) {
    DimReport rep;
    if (q.ks) {
        const InvariantType t = InvariantType::make(q.r, *q.ks);
        rep.dims.emplace_back(q.fixed_det ? "SU^tau" : "U^tau", dim_invariant_locus(c, t, q.d, q.fixed_det));
        std::string canon;
        for (std::size_t i = 0; i < t.ks().size(); ++i) canon += (i ? "," : "") + std::to_string(t.ks()[i]);
        rep.notes.push_back("canonical type (" + canon + ")");
        return rep;
    }
    if (q.kind) {
        rep.dims.emplace_back(*q.kind == AntiKind::Plus ? "U+" : "U-", dim_anti_invariant(c, q.r, *q.kind));
        return rep;
    }

    std::optional<Range> kp_range;
    if (q.k_p) kp_range = Range{*q.k_p, *q.k_p};
    if (q.space == "wminus") dim_w_space(c, q.r, WSpace::minus());
    if (q.space == "wtau") {
        dim_w_space(c, q.r, WSpace::tau(static_cast<std::size_t>(q.k_p.value_or(0))));
    } else if (q.k_p && !c.etale() && (*q.k_p < 0 || *q.k_p > q.r / 2)) {
        throw Error(ErrorKind::InadmissibleInput, "k_p must lie in [0, floor(r/2)]");
    }
    if (q.space != "all" && q.space != "wplus" && q.space != "wminus" && q.space != "wmax" && q.space != "wtau")
        throw Error(ErrorKind::InadmissibleInput, "unknown space \"" + q.space + "\"");

    std::set<std::string> seen;
    for (auto& chk : identity_checks(c, q.r, kp_range)) {
        if (q.space != "all" && !families_for(q.space).count(chk.family)) continue;
        for (const auto& [label, value] : chk.routes) {
            const std::string l = route_label(chk, label);
            if (seen.insert(l).second) rep.dims.emplace_back(l, value);
        }
        rep.checks.push_back(std::move(chk));
    }
    if (q.space == "all" && q.r % 2 != 0 && !c.etale())
        rep.notes.push_back("U- is empty: odd rank on a ramified cover");
    return rep;
}

Json to_json(const IdentityCheck& chk) {
    Json routes = Json::object();
    for (const auto& [label, value] : chk.routes) routes[label] = value;
    Json j{{"family", chk.family}, {"g_Y", chk.g_Y}, {"n", chk.n}, {"r", chk.r}};
    if (chk.k_p) j["k_p"] = *chk.k_p;
    j["routes"] = std::move(routes);
    j["pass"] = chk.pass;
    return j;
}

Json to_json(const DimReport& rep) {
    Json dims = Json::object();
    for (const auto& [label, value] : rep.dims) dims[label] = value;
    Json checks = Json::array();
    for (const auto& chk : rep.checks) {
        Json labels = Json::array();
        for (const auto& rt : chk.routes) labels.push_back(route_label(chk, rt.first));
        checks.push_back(Json{{"identity", chk.family}, {"labels", std::move(labels)}, {"pass", chk.pass}});
    }
    Json j{{"dims", std::move(dims)}, {"equality_checks", std::move(checks)}};
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

Json to_json(const SweepReport& rep) {
    Json j{{"cells", rep.cells},
           {"skipped_cells", rep.skipped_cells},
           {"checks", rep.checks.size()},
           {"ok", rep.ok()}};
    if (rep.first_failure) j["first_failure"] = to_json(rep.checks[*rep.first_failure]);
    return j;
}

namespace {

using Runner = std::function<Json(bool& ok)>;

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }

const Json* optional_field(const Json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

std::int64_t int_or(const Json& obj, const char* key, const std::string& at, std::int64_t fallback) {
    if (const Json* v = optional_field(obj, key)) return int_from_json(*v, child(at, key));
    return fallback;
}

Range range_from_json(const Json& j, const std::string& at) {
    if (j.is_array() && j.size() == 2) return {int_from_json(j[0], at + "/0"), int_from_json(j[1], at + "/1")};
    if (j.is_number_integer()) {
        const std::int64_t v = j.get<std::int64_t>();
        return {v, v};
    }
    malformed(at, "expected [lo, hi] or an integer");
}

Json fixed_points_json(const FixedPointCount& fp) {
    if (std::holds_alternative<FiberwiseIdentity>(fp)) return "fiberwise identity";
    return std::get<std::size_t>(fp);
}

Json node_json(const std::optional<NodeCertificate>& nc) {
    if (!nc) return nullptr;
    return Json{{"singular_points", nc->singular_points},
                {"hessian", to_json(nc->hessian)},
                {"degenerate_gcd", to_json(nc->degenerate_gcd)},
                {"all_nodes", nc->all_nodes}};
}

WSpace parse_space(const Json& j, const std::string& at, std::string& label) {
    label = string_from_json(j, at);
    if (label == "wplus") return WSpace::plus();
    if (label == "wminus") return WSpace::minus();
    if (label == "wmax") return WSpace::max();
    if (label.rfind("wtau", 0) == 0) {
        if (label == "wtau") return WSpace::tau(0);
        if (label.size() > 5 && label[4] == ':') {
            const std::string digits = label.substr(5);
            if (std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) &&
                digits.size() < 9)
                return WSpace::tau(static_cast<std::size_t>(std::stoul(digits)));
        }
    }
    malformed(at, "expected \"wplus\", \"wminus\", \"wmax\" or \"wtau:K\"");
}

Runner parse_germ_task(const Json& task, const std::string& at) {
    SpectralGerm g = germ_from_json(require_field(task, "germ", at), child(at, "germ"));
    std::vector<std::pair<std::string, WSpace>> spaces;
    if (const Json* s = optional_field(task, "spaces")) {
        if (!s->is_array()) malformed(child(at, "spaces"), "expected an array");
        for (std::size_t k = 0; k < s->size(); ++k) {
            std::string label;
            WSpace w = parse_space((*s)[k], child(at, "spaces") + "/" + std::to_string(k), label);
            spaces.emplace_back(label, w);
        }
    }
    Json expect = Json::object();
    if (const Json* e = optional_field(task, "expect")) {
        if (!e->is_object()) malformed(child(at, "expect"), "expected an object");
        for (auto it = e->begin(); it != e->end(); ++it) {
            const std::string ea = child(child(at, "expect"), it.key());
            if (it.key() == "fixed_points") {
                if (!it.value().is_string() && !it.value().is_number_integer())
                    malformed(ea, "expected a count or \"fiberwise identity\"");
            } else if (it.key() == "smooth") {
                bool_from_json(it.value(), ea);
            } else if (it.key() == "member") {
                if (!it.value().is_object()) malformed(ea, "expected {space: bool}");
            } else {
                malformed(ea, "unknown expectation");
            }
        }
        expect = *e;
    }
    return [g = std::move(g), spaces = std::move(spaces), expect = std::move(expect)](bool& ok) {
        const SpectralCurveReport rep = analyze(g);
        Json out{{"kind", "germ"},
                 {"r", g.r()},
                 {"spectral_polynomial", to_json(rep.spectral_polynomial)},
                 {"smooth_on_fiber", rep.smooth_on_fiber},
                 {"singular_fiber_gcd", to_json(rep.singular_fiber_gcd)}};
        out["fixed_points"] = rep.fixed_point_count_on_fiber ? fixed_points_json(*rep.fixed_point_count_on_fiber)
                                                             : Json(nullptr);
        out["node_certificate"] = node_json(rep.node_certificate);
        Json members = Json::array();
        Json member_map = Json::object();
        for (const auto& [label, w] : spaces) {
            const Membership m = w_membership(g, w);
            Json mj{{"space", label}, {"member", m.member}};
            if (w.kind == WSpaceKind::WMinus)
                mj["certificate"] = m.square_certificate ? to_json(*m.square_certificate) : Json(nullptr);
            if (w.kind == WSpaceKind::WTau) {
                Json orders = Json::array();
                for (const auto& o : m.vanishing_orders) orders.push_back(order_to_json(o));
                mj["vanishing_orders"] = std::move(orders);
            }
            member_map[label] = m.member;
            members.push_back(std::move(mj));
        }
        out["memberships"] = std::move(members);
        if (!expect.empty()) {
            Json checks = Json::object();
            if (auto it = expect.find("fixed_points"); it != expect.end())
                checks["fixed_points"] = out["fixed_points"] == *it;
            if (auto it = expect.find("smooth"); it != expect.end())
                checks["smooth"] = rep.smooth_on_fiber == it->get<bool>();
            if (auto it = expect.find("member"); it != expect.end())
                for (auto m = it->begin(); m != it->end(); ++m)
                    checks["member " + m.key()] = member_map.contains(m.key()) && member_map[m.key()] == m.value();
            for (const auto& c : checks) ok = ok && c.get<bool>();
            out["checks"] = std::move(checks);
        }
        return out;
    };
}

const char* structure_name(HiggsStructureKind k) {
    switch (k) {
        case HiggsStructureKind::Symmetric:
            return "symmetric";
        case HiggsStructureKind::Alternating:
            return "alternating";
        case HiggsStructureKind::InvariantTyped:
            return "invariant";
    }
    return "";
}

Poly x_polynomial(const BiPoly& p) {
    std::vector<Rat> c;
    for (const Poly& k : p.coefficients()) c.push_back(k[0]);
    return Poly(std::move(c));
}

Runner parse_higgs_task(const Json& task, const std::string& at) {
    HiggsGerm h = higgs_from_json(require_field(task, "higgs", at), child(at, "higgs"));
    return [h = std::move(h)](bool& ok) {
        const HitchinImage img = hitchin_map(h);
        Json hitchin = Json::array();
        for (const Poly& p : img.components) hitchin.push_back(to_json(p));
        const ParityReport par = equivariance_parity_check(h);
        Json parity = Json::array();
        for (const auto& c : par.components)
            parity.push_back(Json{{"i", c.i}, {"expected", c.expect_even ? "even" : "odd"}, {"ok", c.ok}});
        Json out{{"kind", "higgs"},
                 {"r", h.r()},
                 {"structure", structure_name(h.structure().kind)},
                 {"hitchin", std::move(hitchin)},
                 {"parity", std::move(parity)},
                 {"nilpotent", is_nilpotent(h.phi())}};
        Json checks{{"parity", par.ok()}};
        if (h.structure().kind == HiggsStructureKind::Alternating) {
            const Poly q = alternating_square_certificate(h);
            out["certificate"] = to_json(q);
            checks["certificate_square"] = q * q == x_polynomial(char_poly(h.phi().at_t_zero()));
        }
        if (h.structure().kind == HiggsStructureKind::InvariantTyped) {
            const VanishingProfile prof = vanishing_order_profile(h);
            Json orders = Json::array();
            for (const auto& o : prof.orders) orders.push_back(order_to_json(o));
            out["vanishing_profile"] = Json{{"orders", std::move(orders)}, {"bounds", prof.bounds}, {"ok", prof.ok}};
            checks["vanishing_bound"] = prof.ok;
        }
        for (const auto& c : checks) ok = ok && c.get<bool>();
        out["checks"] = std::move(checks);
        return out;
    };
}

Runner parse_matrix_task(const Json& task, const std::string& at) {
    PolyMatrix m = matrix_from_json(require_field(task, "matrix", at), child(at, "matrix"));
    if (!m.is_square()) throw Error(ErrorKind::NonSquareMatrix, child(at, "matrix") + ": matrix must be square");
    return [m = std::move(m)](bool& ok) {
        const BiPoly cp = char_poly(m);
        const Poly det = determinant(m);
        Json out{{"kind", "matrix"},
                 {"rows", m.rows()},
                 {"char_poly", to_json(cp)},
                 {"determinant", to_json(det)},
                 {"trace", to_json(m.trace())},
                 {"nilpotent", is_nilpotent(m)}};
        Json checks{{"cayley_hamilton", evaluate(cp, m).is_zero()}};
        if (m.is_antisymmetric()) {
            if (m.rows() % 2 == 0) {
                const Poly pf = pfaffian(m);
                out["pfaffian"] = to_json(pf);
                checks["pfaffian_squared_is_det"] = pf * pf == det;
            } else {
                checks["odd_antisymmetric_det_zero"] = det.is_zero();
            }
        }
        for (const auto& c : checks) ok = ok && c.get<bool>();
        out["checks"] = std::move(checks);
        return out;
    };
}

std::optional<bool> expect_square(const Json& task, const std::string& at) {
    if (const Json* e = optional_field(task, "expect")) {
        if (const Json* s = optional_field(*e, "square")) return bool_from_json(*s, child(at, "expect/square"));
    }
    return std::nullopt;
}

Runner parse_bipoly_task(const Json& task, const std::string& at) {
    BiPoly p = bipoly_from_json(require_field(task, "P", at), child(at, "P"));
    if (!p.is_monic()) throw Error(ErrorKind::InadmissibleInput, child(at, "P") + ": P must be monic in x");
    const auto expect = expect_square(task, at);
    return [p = std::move(p), expect](bool& ok) {
        const FiberSingularity fs = fiber_singularity_test(p);
        const auto root = square_root(p);
        Json out{{"kind", "bipoly"},
                 {"smooth_on_fiber", fs.smooth},
                 {"singular_fiber_gcd", to_json(fs.witness_gcd)},
                 {"node_certificate", fs.smooth ? Json(nullptr) : node_json(node_profile(p))},
                 {"square_root", root ? to_json(*root) : Json(nullptr)}};
        Json checks{{"jacobian_resultant_agrees", fiber_singular_by_resultant(p) == !fs.smooth}};
        if (expect) checks["square"] = root.has_value() == *expect;
        for (const auto& c : checks) ok = ok && c.get<bool>();
        out["checks"] = std::move(checks);
        return out;
    };
}

Runner parse_poly_task(const Json& task, const std::string& at) {
    Poly p = poly_from_json(require_field(task, "p", at), child(at, "p"));
    const auto expect = expect_square(task, at);
    return [p = std::move(p), expect](bool& ok) {
        const auto root = square_root(p);
        const ParityParts parts = parity_decompose(p);
        Json out{{"kind", "poly"},
                 {"square_root", root ? to_json(*root) : Json(nullptr)},
                 {"vanishing_order", order_to_json(vanishing_order(p))},
                 {"even_part", to_json(parts.even)},
                 {"odd_part", to_json(parts.odd)}};
        if (expect) {
            const bool pass = root.has_value() == *expect;
            ok = ok && pass;
            out["checks"] = Json{{"square", pass}};
        }
        return out;
    };
}

AntiKind parse_sign(const Json& j, const std::string& at) {
    const std::string s = string_from_json(j, at);
    if (s == "plus") return AntiKind::Plus;
    if (s == "minus") return AntiKind::Minus;
    malformed(at, "expected \"plus\" or \"minus\"");
}

Runner parse_dims_task(const Json& task, const std::string& at, const CoverData& c) {
    DimsQuery q;
    q.r = int_from_json(require_field(task, "r", at), child(at, "r"));
    if (const Json* s = optional_field(task, "space")) {
        q.space = string_from_json(*s, child(at, "space"));
        static const std::set<std::string> known = {"all", "wplus", "wminus", "wmax", "wtau"};
        if (!known.count(q.space)) malformed(child(at, "space"), "unknown space \"" + q.space + "\"");
    }
    if (const Json* k = optional_field(task, "sign")) q.kind = parse_sign(*k, child(at, "sign"));
    if (const Json* k = optional_field(task, "k_p")) q.k_p = int_from_json(*k, child(at, "k_p"));
    if (const Json* ks = optional_field(task, "ks")) {
        if (!ks->is_array()) malformed(child(at, "ks"), "expected an array of integers");
        std::vector<std::int64_t> v;
        for (std::size_t i = 0; i < ks->size(); ++i)
            v.push_back(int_from_json((*ks)[i], child(at, "ks") + "/" + std::to_string(i)));
        q.ks = std::move(v);
    }
    q.d = int_or(task, "d", at, 0);
    if (const Json* f = optional_field(task, "fixed_det")) q.fixed_det = bool_from_json(*f, child(at, "fixed_det"));
    return [q, c](bool& ok) {
        const DimReport rep = dims_report(c, q);
        ok = ok && rep.ok();
        Json out{{"kind", "dims"}, {"r", q.r}};
        const Json body = to_json(rep);
        for (auto& [k, v] : body.items()) out[k] = v;
        return out;
    };
}

Runner parse_identities_task(const Json& task, const std::string& at, const CoverData& c, unsigned jobs) {
    GridSpec grid{{c.g_Y(), c.g_Y()}, {c.n(), c.n()}, {1, 8}, std::nullopt};
    if (const Json* g = optional_field(task, "grid")) {
        const std::string ga = child(at, "grid");
        if (!g->is_object()) malformed(ga, "expected an object");
        if (const Json* v = optional_field(*g, "g_Y")) grid.g_Y = range_from_json(*v, child(ga, "g_Y"));
        if (const Json* v = optional_field(*g, "n")) grid.n = range_from_json(*v, child(ga, "n"));
        if (const Json* v = optional_field(*g, "r")) grid.r = range_from_json(*v, child(ga, "r"));
        if (const Json* v = optional_field(*g, "k_p")) grid.k_p = range_from_json(*v, child(ga, "k_p"));
    }
    return [grid, jobs](bool& ok) {
        const SweepReport rep = identity_sweep(grid, jobs);
        ok = ok && rep.ok();
        Json out{{"kind", "identities"}};
        const Json body = to_json(rep);
        for (auto& [k, v] : body.items()) out[k] = v;
        return out;
    };
}

Runner parse_types_task(const Json& task, const std::string& at, const CoverData& c) {
    const std::int64_t r = int_from_json(require_field(task, "r", at), child(at, "r"));
    const std::int64_t d = int_or(task, "d", at, 0);
    bool maximal = false;
    if (const Json* m = optional_field(task, "maximal_only")) maximal = bool_from_json(*m, child(at, "maximal_only"));
    return [c, r, d, maximal](bool&) {
        const auto types = enumerate_types(c, r, d, maximal);
        Json list = Json::array();
        for (const auto& t : types) list.push_back(t.ks());
        return Json{{"kind", "types"}, {"r", r}, {"d", d}, {"maximal_only", maximal}, {"count", types.size()},
                    {"types", std::move(list)}};
    };
}

Runner parse_orbits_task(const Json& task, const std::string& at, const CoverData& c) {
    const std::int64_t n = int_or(task, "n", at, c.n());
    return [n](bool& ok) {
        const OrbitReport rep = p2_orbits_rank2(n);
        const bool pass = rep.orbit_count == 2 && rep.component_count == (std::uint64_t{1} << (2 * n - 1));
        ok = ok && pass;
        return Json{{"kind", "orbits"},
                    {"n", n},
                    {"orbit_count", rep.orbit_count},
                    {"component_count", rep.component_count},
                    {"group_order", rep.group_order},
                    {"checks", Json{{"two_orbits", rep.orbit_count == 2},
                                    {"component_count", rep.component_count == (std::uint64_t{1} << (2 * n - 1))}}}};
    };
}

Runner parse_ledger_task(const Json& task, const std::string& at, const CoverData& c) {
    const std::int64_t r = int_from_json(require_field(task, "r", at), child(at, "r"));
    const std::string s = string_from_json(require_field(task, "scenario", at), child(at, "scenario"));
    LedgerScenario sc{LedgerScenarioKind::AntiSymmetric, int_or(task, "k_p", at, 0)};
    if (s == "anti_symmetric")
        sc.kind = LedgerScenarioKind::AntiSymmetric;
    else if (s == "anti_alternating")
        sc.kind = LedgerScenarioKind::AntiAlternating;
    else if (s == "invariant_max")
        sc.kind = LedgerScenarioKind::InvariantMax;
    else if (s == "invariant_tau")
        sc.kind = LedgerScenarioKind::InvariantTau;
    else
        malformed(child(at, "scenario"),
                  "expected \"anti_symmetric\", \"anti_alternating\", \"invariant_max\" or \"invariant_tau\"");
    return [c, r, sc, s](bool&) {
        const GenusLedger led = genus_ledger(c, r, sc);
        auto opt = [](const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); };
        return Json{{"kind", "ledger"},
                    {"r", r},
                    {"scenario", s},
                    {"g_spectral", led.g_spectral},
                    {"deg_ram_spectral", led.deg_ram_spectral},
                    {"pic_degree", led.pic_degree},
                    {"g_quotient_spectral", led.g_quotient_spectral},
                    {"singular_points", opt(led.singular_points)},
                    {"g_normalized", opt(led.g_normalized)},
                    {"g_normalized_quotient", opt(led.g_normalized_quotient)},
                    {"prym_dim", led.prym_dim}};
    };
}

Runner parse_components_task(const Json& task, const std::string& at, const CoverData& c) {
    ComponentScenario s{};
    const std::string locus = string_from_json(require_field(task, "locus", at), child(at, "locus"));
    if (locus == "anti_invariant")
        s.locus = Locus::AntiInvariant;
    else if (locus == "anti_invariant_fixed_det")
        s.locus = Locus::AntiInvariantFixedDet;
    else
        malformed(child(at, "locus"), "expected \"anti_invariant\" or \"anti_invariant_fixed_det\"");
    s.kind = parse_sign(require_field(task, "sign", at), child(at, "sign"));
    s.r = int_from_json(require_field(task, "r", at), child(at, "r"));
    s.ramified = !c.etale();
    s.n = c.n();
    return [s, locus](bool&) {
        return Json{{"kind", "components"},
                    {"locus", locus},
                    {"sign", s.kind == AntiKind::Plus ? "plus" : "minus"},
                    {"r", s.r},
                    {"answer", to_string(component_oracle(s))}};
    };
}

}  // namespace

ScenarioResult run_scenario(const Json& doc, unsigned jobs) {
    if (!doc.is_object()) malformed("", "expected a scenario object");
    const std::string version = string_from_json(require_field(doc, "version", ""), "/version");
    if (version != "1") malformed("/version", "unsupported version \"" + version + "\"");
    const CoverData cover = cover_from_json(require_field(doc, "cover", ""), "/cover");
    const Json& tasks = require_field(doc, "tasks", "");
    if (!tasks.is_array()) malformed("/tasks", "expected an array");

    std::vector<Runner> runners;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const std::string at = "/tasks/" + std::to_string(i);
        const Json& task = tasks[i];
        const std::string kind = string_from_json(require_field(task, "kind", at), at + "/kind");
        if (kind == "germ")
            runners.push_back(parse_germ_task(task, at));
        else if (kind == "higgs")
            runners.push_back(parse_higgs_task(task, at));
        else if (kind == "matrix")
            runners.push_back(parse_matrix_task(task, at));
        else if (kind == "bipoly")
            runners.push_back(parse_bipoly_task(task, at));
        else if (kind == "poly")
            runners.push_back(parse_poly_task(task, at));
        else if (kind == "dims")
            runners.push_back(parse_dims_task(task, at, cover));
        else if (kind == "identities")
            runners.push_back(parse_identities_task(task, at, cover, jobs));
        else if (kind == "types")
            runners.push_back(parse_types_task(task, at, cover));
        else if (kind == "orbits")
            runners.push_back(parse_orbits_task(task, at, cover));
        else if (kind == "ledger")
            runners.push_back(parse_ledger_task(task, at, cover));
        else if (kind == "components")
            runners.push_back(parse_components_task(task, at, cover));
        else
            malformed(at + "/kind", "unknown task kind \"" + kind + "\"");
    }

    // tasks share no state; results come back in input order
    auto outcomes = parallel_map(runners.size(), jobs, [&](std::size_t i) {
        bool ok = true;
        Json r = runners[i](ok);
        return std::make_pair(std::move(r), ok);
    });
    ScenarioResult res;
    Json results = Json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        res.ok = res.ok && outcomes[i].second;
        Json entry{{"task", i}};
        for (auto& [k, v] : outcomes[i].first.items()) entry[k] = v;
        results.push_back(std::move(entry));
    }
    res.report = Json{{"version", "1"}, {"cover", to_json(cover)}, {"ok", res.ok}, {"results", std::move(results)}};
    return res;
}

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
    if (v.is_object()) {
        if (v.empty()) out.emplace_back(path, "{}");
        for (auto it = v.begin(); it != v.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "/" + it.key(), out);
        return;
    }
    if (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); })) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "/" + std::to_string(i), out);
        return;
    }
    out.emplace_back(path, scalar_text(v));
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += '\\';
        out += ch;
    }
    return out;
}

}  // namespace

std::string render(const Json& report, Format f) {
    if (f == Format::Json) return report.dump(2) + "\n";
    std::ostringstream os;
    const Json empty = Json::array();
    const Json& results = report.contains("results") ? report["results"] : empty;
    if (f == Format::Csv) {
        os << "task,kind,field,value\n";
        for (const auto& r : results) {
            std::vector<std::pair<std::string, std::string>> rows;
            flatten(r, "", rows);
            const std::string task = scalar_text(r.value("task", Json(0)));
            const std::string kind = r.value("kind", "");
            for (const auto& [k, v] : rows) {
                if (k == "task" || k == "kind") continue;
                os << task << ',' << csv_cell(kind) << ',' << csv_cell(k) << ',' << csv_cell(v) << '\n';
            }
        }
        return os.str();
    }
    os << "# Scenario report\n\n";
    if (report.contains("cover")) {
        const Json& c = report["cover"];
        os << "Cover: g_Y = " << c["g_Y"].dump() << ", n = " << c["n"].dump()
           << (c.value("etale", false) ? " (etale)" : "") << "\n\n";
    }
    if (results.empty()) os << "No tasks.\n";
    for (const auto& r : results) {
        os << "## Task " << scalar_text(r.value("task", Json(0))) << ": " << r.value("kind", "") << "\n\n";
        os << "| field | value |\n|---|---|\n";
        std::vector<std::pair<std::string, std::string>> rows;
        flatten(r, "", rows);
        for (const auto& [k, v] : rows) {
            if (k == "task" || k == "kind") continue;
            os << "| " << md_cell(k) << " | " << md_cell(v) << " |\n";
        }
        os << "\n";
    }
    if (report.contains("ok")) os << "Overall: " << (report["ok"].get<bool>() ? "all checks pass" : "CHECK FAILED") << "\n";
    return os.str();
}

}  // namespace prym
