// SPDX-License-Identifier: Apache-2.0
#include "prym/json_io.hpp"

#include "prym/error.hpp"

namespace prym {

void malformed(const std::string& at, const std::string& what) {
    throw Error(ErrorKind::MalformedInput, (at.empty() ? std::string("/") : at) + ": " + what);
}

namespace {

std::string child(const std::string& at, const std::string& key) {
    std::string esc;
    for (char ch : key) {
        if (ch == '~')
            esc += "~0";
        else if (ch == '/')
            esc += "~1";
        else
            esc += ch;
    }
    return at + "/" + esc;
}

std::string child(const std::string& at, std::size_t index) { return at + "/" + std::to_string(index); }

// Re-raise a module error with the pointer of the object that failed to build.
template <class F>
auto located(const std::string& at, F&& build) {
    try {
        return build();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::MalformedInput) throw;
        throw Error(e.kind(), (at.empty() ? std::string("/") : at) + ": " + e.detail());
    }
}

}  // namespace

const Json& require_field(const Json& obj, const char* key, const std::string& at) {
    if (!obj.is_object()) malformed(at, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) malformed(child(at, key), "missing field");
    return *it;
}

std::int64_t int_from_json(const Json& j, const std::string& at) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_number_unsigned()) {
        const auto v = j.get<std::uint64_t>();
        if (v > static_cast<std::uint64_t>(INT64_MAX)) malformed(at, "integer out of range");
        return static_cast<std::int64_t>(v);
    }
    malformed(at, "expected an integer");
}

bool bool_from_json(const Json& j, const std::string& at) {
    if (!j.is_boolean()) malformed(at, "expected true or false");
    return j.get<bool>();
}

std::string string_from_json(const Json& j, const std::string& at) {
    if (!j.is_string()) malformed(at, "expected a string");
    return j.get<std::string>();
}

Json to_json(const Rat& q) { return to_string(q); }

Json to_json(const Poly& p) {
    Json a = Json::array();
    for (const Rat& c : p.coefficients()) a.push_back(to_json(c));
    return a;
}

Json to_json(const BiPoly& p) {
    Json a = Json::array();
    for (const Poly& c : p.coefficients()) a.push_back(to_json(c));
    return a;
}

Json to_json(const PolyMatrix& m) {
    Json entries = Json::array();
    for (const Poly& e : m.entries()) entries.push_back(to_json(e));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const CoverData& c) { return Json{{"g_Y", c.g_Y()}, {"n", c.n()}, {"etale", c.etale()}}; }

Json to_json(const SpectralGerm& g) {
    Json sections = Json::array();
    for (const Poly& s : g.sections()) sections.push_back(to_json(s));
    return Json{{"r", g.r()},
                {"sections", std::move(sections)},
                {"chart", g.chart() == Chart::Ramified ? "ramified" : "ordinary"},
                {"linearization", g.linearization() == Linearization::Positive ? "positive" : "negative"}};
}

Json to_json(const HiggsGerm& h) {
    Json structure;
    switch (h.structure().kind) {
        case HiggsStructureKind::Symmetric:
            structure = Json{{"kind", "symmetric"}, {"S", to_json(h.structure().form)}};
            break;
        case HiggsStructureKind::Alternating:
            structure = Json{{"kind", "alternating"}, {"J", to_json(h.structure().form)}};
            break;
        case HiggsStructureKind::InvariantTyped:
            structure = Json{{"kind", "invariant"}, {"k_p", h.structure().k_p}};
            break;
    }
    return Json{{"r", h.r()}, {"phi", to_json(h.phi())}, {"structure", std::move(structure)}};
}

Json order_to_json(const std::optional<std::size_t>& order) {
    if (!order) return "inf";
    return *order;
}

Rat rat_from_json(const Json& j, const std::string& at) {
    if (j.is_number_integer() || j.is_number_unsigned()) {
        // via the decimal text so 64-bit values survive on every platform
        return *parse_rational(j.dump());
    }
    if (j.is_string()) {
        if (auto q = parse_rational(j.get<std::string>())) return *q;
        malformed(at, "not a rational \"p/q\": \"" + j.get<std::string>() + "\"");
    }
    malformed(at, "expected an integer or a rational string \"p/q\"");
}

Poly poly_from_json(const Json& j, const std::string& at) {
    if (!j.is_array()) return Poly::constant(rat_from_json(j, at));
    std::vector<Rat> c;
    c.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) c.push_back(rat_from_json(j[k], child(at, k)));
    return Poly(std::move(c));
}

BiPoly bipoly_from_json(const Json& j, const std::string& at) {
    if (!j.is_array()) malformed(at, "expected an array of polynomials indexed by x-degree");
    std::vector<Poly> c;
    c.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) c.push_back(poly_from_json(j[k], child(at, k)));
    return BiPoly(std::move(c));
}

namespace {

PolyMatrix matrix_from_rows(const Json& rows, const std::string& at, std::optional<std::size_t> expect_rows,
                            std::optional<std::size_t> expect_cols) {
    const std::size_t nr = rows.size();
    if (expect_rows && *expect_rows != nr) malformed(at, "expected " + std::to_string(*expect_rows) + " rows");
    std::size_t nc = expect_cols.value_or(nr == 0 ? 0 : rows[0].is_array() ? rows[0].size() : 0);
    std::vector<Poly> entries;
    for (std::size_t i = 0; i < nr; ++i) {
        const std::string ri = child(at, i);
        if (!rows[i].is_array()) malformed(ri, "expected a row array");
        if (rows[i].size() != nc) malformed(ri, "expected " + std::to_string(nc) + " entries in the row");
        for (std::size_t k = 0; k < nc; ++k) entries.push_back(poly_from_json(rows[i][k], child(ri, k)));
    }
    return PolyMatrix(nr, nc, std::move(entries));
}

}  // namespace

PolyMatrix matrix_from_json(const Json& j, const std::string& at) {
    if (j.is_array()) return matrix_from_rows(j, at, std::nullopt, std::nullopt);
    if (!j.is_object()) malformed(at, "expected a matrix {rows, cols, entries} or a list of rows");
    const std::int64_t rows = int_from_json(require_field(j, "rows", at), child(at, "rows"));
    const std::int64_t cols = int_from_json(require_field(j, "cols", at), child(at, "cols"));
    if (rows < 0 || cols < 0) malformed(at, "matrix dimensions must be nonnegative");
    const Json& entries = require_field(j, "entries", at);
    const std::string ea = child(at, "entries");
    if (!entries.is_array()) malformed(ea, "expected an array");
    const auto r = static_cast<std::size_t>(rows), c = static_cast<std::size_t>(cols);
    // a list of rows is told apart from the flat form by its length
    if (r > 0 && c != 1 && entries.size() == r) return matrix_from_rows(entries, ea, r, c);
    if (entries.size() != r * c)
        malformed(ea, "expected " + std::to_string(r * c) + " entries, found " + std::to_string(entries.size()));
    std::vector<Poly> polys;
    polys.reserve(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) polys.push_back(poly_from_json(entries[k], child(ea, k)));
    return PolyMatrix(r, c, std::move(polys));
}

CoverData cover_from_json(const Json& j, const std::string& at) {
    const std::int64_t g = int_from_json(require_field(j, "g_Y", at), child(at, "g_Y"));
    const std::int64_t n = int_from_json(require_field(j, "n", at), child(at, "n"));
    return located(at, [&] {
        if (auto it = j.find("etale"); it != j.end())
            return CoverData::make(g, n, bool_from_json(*it, child(at, "etale")));
        return CoverData::make(g, n);
    });
}

SpectralGerm germ_from_json(const Json& j, const std::string& at) {
    const Json& secs = require_field(j, "sections", at);
    const std::string sa = child(at, "sections");
    if (!secs.is_array()) malformed(sa, "expected an array of polynomials");
    std::vector<Poly> sections;
    for (std::size_t k = 0; k < secs.size(); ++k) sections.push_back(poly_from_json(secs[k], child(sa, k)));
    if (auto it = j.find("r"); it != j.end()) {
        const std::int64_t r = int_from_json(*it, child(at, "r"));
        if (r != static_cast<std::int64_t>(sections.size()))
            malformed(child(at, "r"), "r = " + std::to_string(r) + " but " + std::to_string(sections.size()) +
                                          " sections given");
    }
    Chart chart = Chart::Ramified;
    if (auto it = j.find("chart"); it != j.end()) {
        const std::string s = string_from_json(*it, child(at, "chart"));
        if (s == "ramified")
            chart = Chart::Ramified;
        else if (s == "ordinary")
            chart = Chart::Ordinary;
        else
            malformed(child(at, "chart"), "expected \"ramified\" or \"ordinary\"");
    }
    const std::string ls = string_from_json(require_field(j, "linearization", at), child(at, "linearization"));
    Linearization lin;
    if (ls == "positive")
        lin = Linearization::Positive;
    else if (ls == "negative")
        lin = Linearization::Negative;
    else
        malformed(child(at, "linearization"), "expected \"positive\" or \"negative\"");
    return located(at, [&] { return SpectralGerm::make(std::move(sections), chart, lin); });
}

HiggsGerm higgs_from_json(const Json& j, const std::string& at) {
    PolyMatrix phi = matrix_from_json(require_field(j, "phi", at), child(at, "phi"));
    if (auto it = j.find("r"); it != j.end()) {
        const std::int64_t r = int_from_json(*it, child(at, "r"));
        if (r != static_cast<std::int64_t>(phi.rows()))
            malformed(child(at, "r"), "r = " + std::to_string(r) + " but phi has " + std::to_string(phi.rows()) +
                                          " rows");
    }
    const Json& st = require_field(j, "structure", at);
    const std::string sa = child(at, "structure");
    const std::string kind = string_from_json(require_field(st, "kind", sa), child(sa, "kind"));
    HiggsStructure structure = HiggsStructure::invariant(0);
    if (kind == "symmetric") {
        structure = HiggsStructure::symmetric(matrix_from_json(require_field(st, "S", sa), child(sa, "S")));
    } else if (kind == "alternating") {
        structure = HiggsStructure::alternating(matrix_from_json(require_field(st, "J", sa), child(sa, "J")));
    } else if (kind == "invariant") {
        const std::int64_t kp = int_from_json(require_field(st, "k_p", sa), child(sa, "k_p"));
        if (kp < 0) malformed(child(sa, "k_p"), "k_p must be nonnegative");
        structure = HiggsStructure::invariant(static_cast<std::size_t>(kp));
    } else {
        malformed(child(sa, "kind"), "expected \"symmetric\", \"alternating\" or \"invariant\"");
    }
    return located(at, [&] { return HiggsGerm::classify(std::move(phi), std::move(structure)); });
}

}  // namespace prym
