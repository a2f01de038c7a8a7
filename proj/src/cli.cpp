// SPDX-License-Identifier: Apache-2.0
#include "prym/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "prym/error.hpp"
#include "prym/scenario.hpp"
#include "prym/suites.hpp"

namespace prym {

namespace {

struct UsageError {
    std::string message;
};

// "a..b" or a single integer "a".
Range parse_range(const std::string& text, const char* flag) {
    auto to_int = [&](const std::string& s) -> std::int64_t {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size())
            throw UsageError{std::string(flag) + ": expected an integer or a range a..b, got \"" + text + "\""};
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const std::int64_t v = to_int(text);
        return {v, v};
    }
    const Range r{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
    if (r.hi < r.lo) throw UsageError{std::string(flag) + ": empty range \"" + text + "\""};
    return r;
}

std::string range_text(const Range& r) {
    return r.lo == r.hi ? std::to_string(r.lo) : std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

// ---- dims ----------------------------------------------------------------

struct DimsArgs {
    std::int64_t g_Y = 0;
    std::int64_t n = 0;
    bool etale = false;
    DimsQuery q;
    std::string kind;
    std::optional<std::int64_t> k_p;
    std::vector<std::int64_t> ks;
    std::string format = "md";
};

std::string route_chain(const std::vector<std::pair<std::string, std::int64_t>>& routes) {
    const bool agree = std::all_of(routes.begin(), routes.end(),
                                   [&](const auto& p) { return p.second == routes.front().second; });
    std::string s;
    for (std::size_t i = 0; i < routes.size(); ++i) {
        if (i) s += agree ? " = " : ", ";
        s += routes[i].first;
        if (!agree) s += " = " + std::to_string(routes[i].second);
    }
    if (agree && !routes.empty()) s += " = " + std::to_string(routes.front().second);
    return s;
}

std::string render_dims_md(const CoverData& c, std::int64_t r, const DimReport& rep) {
    std::ostringstream os;
    os << "# Dimensions for g_Y = " << c.g_Y() << ", n = " << c.n() << ", r = " << r << "\n\n";
    os << "| quantity | value |\n|---|---|\n";
    for (const auto& [label, value] : rep.dims) os << "| " << label << " | " << value << " |\n";
    if (!rep.checks.empty()) {
        os << "\n| identity | routes | status |\n|---|---|---|\n";
        for (const auto& chk : rep.checks) {
            std::string family = chk.family;
            if (chk.k_p) family += " (k_p=" + std::to_string(*chk.k_p) + ")";
            os << "| " << family << " | " << route_chain(chk.routes) << " | " << (chk.pass ? "pass" : "FAIL")
               << " |\n";
        }
    }
    for (const auto& note : rep.notes) os << "\nNote: " << note << "\n";
    return os.str();
}

std::string render_dims_csv(const DimReport& rep) {
    std::ostringstream os;
    os << "quantity,value\n";
    for (const auto& [label, value] : rep.dims) {
        const bool quote = label.find(',') != std::string::npos;
        os << (quote ? "\"" + label + "\"" : label) << ',' << value << '\n';
    }
    return os.str();
}

int run_dims(const DimsArgs& a, std::ostream& out) {
    const CoverData c = a.etale ? CoverData::make(a.g_Y, a.n, true) : CoverData::make(a.g_Y, a.n);
    DimsQuery q = a.q;
    if (!a.kind.empty()) q.kind = a.kind == "plus" ? AntiKind::Plus : AntiKind::Minus;
    q.k_p = a.k_p;
    if (!a.ks.empty()) q.ks = a.ks;
    const DimReport rep = dims_report(c, q);
    if (a.format == "json") {
        Json j{{"cover", to_json(c)}, {"r", q.r}};
        const Json body = to_json(rep);
        for (auto& [k, v] : body.items()) j[k] = v;
        j["ok"] = rep.ok();
        out << j.dump(2) << "\n";
    } else if (a.format == "csv") {
        out << render_dims_csv(rep);
    } else {
        out << render_dims_md(c, q.r, rep);
    }
    return rep.ok() ? kExitOk : kExitCheckFailed;
}

// ---- analyze -------------------------------------------------------------

struct AnalyzeArgs {
    std::string file;
    std::string format = "json";
    unsigned jobs = 1;
};

int run_analyze(const AnalyzeArgs& a, std::ostream& out) {
    std::ifstream in(a.file, std::ios::binary);
    if (!in) throw Error(ErrorKind::MalformedInput, "/: cannot read \"" + a.file + "\"");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::MalformedInput, std::string("/: not valid JSON (") + e.what() + ")");
    }
    const ScenarioResult res = run_scenario(doc, a.jobs);
    out << render(res.report, *parse_format(a.format));
    return res.ok ? kExitOk : kExitCheckFailed;
}

// ---- sweep ---------------------------------------------------------------

struct SweepArgs {
    std::string gy, n, r, kp;
    std::uint64_t seed = kDefaultSeed;
    unsigned jobs = 1;
    std::optional<std::size_t> pfaffian, parity, vanishing, fixed_point, smoothness, square, kernel;
    std::size_t max_dim = 8;
    bool orbits = false;
    bool maximal_types = false;
    bool all = false;
    std::string format = "md";
};

constexpr std::size_t kDefaultTrials = 200;

Json suite_json(const SuiteResult& s) {
    Json j{{"name", s.name}, {"trials", s.trials}, {"failures", s.failures}, {"ok", s.ok()}};
    if (!s.notes.empty()) j["notes"] = s.notes;
    if (s.counterexample) j["counterexample"] = *s.counterexample;
    return j;
}

Json identity_replay(const IdentityCheck& chk) {
    Json grid{{"g_Y", {chk.g_Y, chk.g_Y}}, {"n", {chk.n, chk.n}}, {"r", {chk.r, chk.r}}};
    if (chk.k_p) grid["k_p"] = {*chk.k_p, *chk.k_p};
    return replay_scenario(Json{{"kind", "identities"}, {"grid", std::move(grid)}},
                           CoverData::make(chk.g_Y, chk.n));
}

int run_sweep(const SweepArgs& a, std::ostream& out) {
    const bool grid_flags = !a.gy.empty() || !a.r.empty() || !a.kp.empty();
    const bool any_suite = a.pfaffian || a.parity || a.vanishing || a.fixed_point || a.smoothness || a.square ||
                           a.kernel || a.orbits || a.maximal_types;
    const bool run_identities = grid_flags || a.all || !any_suite;

    const Range gy = a.gy.empty() ? Range{1, 5} : parse_range(a.gy, "--gy");
    const Range n = a.n.empty() ? Range{1, 6} : parse_range(a.n, "--n");
    const Range r = a.r.empty() ? Range{1, 8} : parse_range(a.r, "--r");
    std::optional<Range> kp;
    if (!a.kp.empty()) kp = parse_range(a.kp, "--kp");
    if (a.max_dim < 1) throw UsageError{"--max-dim must be at least 1"};

    auto trials = [&](const std::optional<std::size_t>& t) -> std::optional<std::size_t> {
        if (t) return t;
        if (a.all) return kDefaultTrials;
        return std::nullopt;
    };

    Json report{{"seed", a.seed}};
    std::vector<std::string> lines;
    lines.push_back("seed: " + std::to_string(a.seed));
    bool ok = true;
    std::optional<Json> replay;

    if (run_identities) {
        const GridSpec grid{gy, n, r, kp};
        const SweepReport rep = identity_sweep(grid, a.jobs);
        std::string line = "identities over g_Y " + range_text(gy) + ", n " + range_text(n) + ", r " + range_text(r);
        if (kp) line += ", k_p " + range_text(*kp);
        line += ": " + std::to_string(rep.checks.size()) + " checks in " + std::to_string(rep.cells) + " cells (" +
                std::to_string(rep.skipped_cells) + " skipped with g_X < 2): ";
        Json j = to_json(rep);
        if (rep.ok()) {
            line += "all identities pass";
        } else {
            const IdentityCheck& bad = rep.checks[*rep.first_failure];
            line += "FAIL at " + bad.family + " for g_Y = " + std::to_string(bad.g_Y) + ", n = " +
                    std::to_string(bad.n) + ", r = " + std::to_string(bad.r) + ": " + route_chain(bad.routes);
            ok = false;
            replay = identity_replay(bad);
            j["counterexample"] = *replay;
        }
        lines.push_back(line);
        report["identities"] = std::move(j);
    }

    SuiteOptions base;
    base.seed = a.seed;
    base.jobs = a.jobs;
    base.max_dim = a.max_dim;
    std::vector<SuiteResult> suites;
    auto run = [&](const std::optional<std::size_t>& t, std::initializer_list<SuiteResult (*)(const SuiteOptions&)> fs) {
        const auto count = trials(t);
        if (!count) return;
        SuiteOptions o = base;
        o.trials = *count;
        for (auto f : fs) suites.push_back(f(o));
    };
    run(a.pfaffian, {&pfaffian_det_suite, &pfaffian_square_suite});
    run(a.parity, {&hitchin_parity_suite});
    run(a.vanishing, {&vanishing_order_suite});
    run(a.fixed_point, {&fixed_point_suite});
    run(a.smoothness, {&smoothness_suite, &square_node_suite});
    run(a.square, {&square_root_suite});
    run(a.kernel, {&cayley_hamilton_suite});
    if (a.orbits || a.all) suites.push_back(orbit_suite(n));
    if (a.maximal_types || a.all) {
        std::vector<std::int64_t> odd;
        for (std::int64_t k = std::max<std::int64_t>(r.lo, 1); k <= r.hi; ++k)
            if (k % 2 != 0) odd.push_back(k);
        suites.push_back(maximal_type_suite(n, odd));
    }

    Json suite_list = Json::array();
    for (const SuiteResult& s : suites) {
        std::string line = s.name + ": " + std::to_string(s.trials) + " trials, " + std::to_string(s.failures) +
                           " failures: " + (s.ok() ? "pass" : "FAIL");
        lines.push_back(line);
        for (const auto& note : s.notes) lines.push_back("  " + note);
        if (!s.ok()) {
            ok = false;
            if (!replay && s.counterexample) replay = *s.counterexample;
        }
        suite_list.push_back(suite_json(s));
    }
    if (!suites.empty()) report["suites"] = std::move(suite_list);
    report["ok"] = ok;

    if (a.format == "json") {
        out << report.dump(2) << "\n";
    } else {
        for (const auto& l : lines) out << l << "\n";
        out << (ok ? "all checks pass" : "FAILED") << "\n";
        if (replay) out << "replay scenario:\n" << replay->dump(2) << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dimension tables, local Higgs field checks and identity sweeps for Hitchin systems on double covers",
                 "prym-hitchin"};
    app.require_subcommand(1);
    const auto formats = CLI::IsMember({"json", "csv", "md"});

    DimsArgs da;
    auto* dims = app.add_subcommand("dims", "Dimensions of the moduli loci and W-spaces with cross-checks");
    dims->add_option("--gy", da.g_Y, "Genus of the quotient curve Y")->required();
    dims->add_option("--n", da.n, "Half the number of ramification points")->required();
    dims->add_flag("--etale", da.etale, "Assert the cover is etale (requires --n 0)");
    dims->add_option("--r", da.q.r, "Rank")->required();
    dims->add_option("--space", da.q.space, "Which spaces to report")
        ->check(CLI::IsMember({"all", "wplus", "wminus", "wmax", "wtau"}))
        ->capture_default_str();
    dims->add_option("--kind", da.kind, "Anti-invariant locus U+ or U-")->check(CLI::IsMember({"plus", "minus"}));
    dims->add_option("--kp", da.k_p, "Single-point type k_p for the tau spaces");
    dims->add_option("--ks", da.ks, "Type (k_1,...,k_2n) of an invariant locus")->delimiter(',');
    dims->add_option("--d", da.q.d, "Degree for the invariant locus")->capture_default_str();
    dims->add_flag("--fixed-det", da.q.fixed_det, "Fix the determinant");
    dims->add_option("--format", da.format, "Output format")->check(formats)->capture_default_str();

    AnalyzeArgs aa;
    auto* analyze = app.add_subcommand("analyze", "Run the tasks of a JSON scenario file");
    analyze->add_option("file", aa.file, "Scenario file")->required();
    analyze->add_option("--format", aa.format, "Output format")->check(formats)->capture_default_str();
    analyze->add_option("--jobs", aa.jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

    SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep", "Identity sweep over a grid and seeded property suites");
    sweep->add_option("--gy", sa.gy, "Range of g_Y, a..b (default 1..5)");
    sweep->add_option("--n", sa.n, "Range of n, a..b (default 1..6)");
    sweep->add_option("--r", sa.r, "Range of r, a..b (default 1..8)");
    sweep->add_option("--kp", sa.kp, "Range of k_p for the tau identities (default 0..floor(r/2))");
    sweep->add_option("--seed", sa.seed, "Seed for the random suites")->capture_default_str();
    sweep->add_option("--jobs", sa.jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
    sweep->add_option("--pfaffian-trials", sa.pfaffian, "pf^2 = det and Pfaffian certificate trials");
    sweep->add_option("--parity-trials", sa.parity, "Hitchin parity trials per structure kind");
    sweep->add_option("--vanishing-trials", sa.vanishing, "Vanishing-order bound trials");
    sweep->add_option("--fixed-point-trials", sa.fixed_point, "Fixed-point count trials");
    sweep->add_option("--smoothness-trials", sa.smoothness, "Fiber smoothness and square-node trials");
    sweep->add_option("--square-trials", sa.square, "Polynomial square-root trials");
    sweep->add_option("--kernel-trials", sa.kernel, "Cayley-Hamilton trials");
    sweep->add_option("--max-dim", sa.max_dim, "Largest matrix size in the suites")->capture_default_str();
    sweep->add_flag("--orbits", sa.orbits, "Count P[2] orbits on rank-2 sign types over --n");
    sweep->add_flag("--maximal-types", sa.maximal_types, "Count maximal types for odd ranks in --r over --n");
    sweep->add_flag("--all", sa.all, "Run the identity sweep and every suite");
    sweep->add_option("--format", sa.format, "Output format")->check(CLI::IsMember({"json", "md"}))->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (dims->parsed()) return run_dims(da, out);
        if (analyze->parsed()) return run_analyze(aa, out);
        return run_sweep(sa, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.message << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.kind() == ErrorKind::GridTooLarge ? kExitUsage : kExitData;
    }
}

}  // namespace prym
