// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prym/json_io.hpp"
#include "prym/moduli.hpp"

namespace prym {

enum class Format { Json, Csv, Md };

/// Parses "json", "csv", "md"; nullopt otherwise.
std::optional<Format> parse_format(const std::string& s);

/// Selection for a dimension report. Exactly one of ks / kind / space drives
/// the report, in that order of precedence.
struct DimsQuery {
    std::int64_t r = 2;
    /// "all", "wplus", "wminus", "wmax", "wtau".
    std::string space = "all";
    std::optional<AntiKind> kind;
    std::optional<std::int64_t> k_p;
    std::optional<std::vector<std::int64_t>> ks;
    std::int64_t d = 0;
    bool fixed_det = false;
};

struct DimReport {
    std::vector<std::pair<std::string, std::int64_t>> dims;
    std::vector<IdentityCheck> checks;
    std::vector<std::string> notes;
    bool ok() const noexcept;
};

/// Throws the module errors of the underlying dimension formulas.
DimReport dims_report(const CoverData& c, const DimsQuery& q);
Json to_json(const DimReport& rep);
Json to_json(const IdentityCheck& chk);
Json to_json(const SweepReport& rep);

struct ScenarioResult {
    Json report;
    /// False when some embedded identity or expectation check failed.
    bool ok = true;
};

/// Validates the whole document (version, cover, every task payload) before
/// running any task, then runs the tasks in order. Throws Error; malformed
/// fields raise MalformedInput with a JSON pointer.
ScenarioResult run_scenario(const Json& doc, unsigned jobs = 1);

/// JSON: pretty printed. CSV: task,kind,field,value rows. Markdown: one
/// field/value table per task. Nested objects are flattened to
/// slash-separated paths; arrays of scalars stay compact JSON.
std::string render(const Json& report, Format f);

}  // namespace prym
