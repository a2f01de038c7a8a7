// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "json.hpp"

#include "prym/bipoly.hpp"
#include "prym/cover.hpp"
#include "prym/higgs.hpp"
#include "prym/poly.hpp"
#include "prym/poly_matrix.hpp"
#include "prym/rational.hpp"
#include "prym/spectral.hpp"

namespace prym {

/// Insertion-ordered so reports keep a fixed, readable key order.
using Json = nlohmann::ordered_json;

// Writers. Rationals are strings "p/q" (or "p"), polynomials ascending
// coefficient arrays, bivariate polynomials arrays indexed by x-degree,
// matrices {"rows", "cols", "entries"} with row-major entries.
Json to_json(const Rat& q);
Json to_json(const Poly& p);
Json to_json(const BiPoly& p);
Json to_json(const PolyMatrix& m);
Json to_json(const CoverData& c);
Json to_json(const SpectralGerm& g);
Json to_json(const HiggsGerm& h);
/// Vanishing order, or the string "inf" for the zero polynomial.
Json order_to_json(const std::optional<std::size_t>& order);

// Readers. `at` is the JSON pointer of `j` inside the document; every
// MalformedInput message starts with the pointer of the offending field.
// Module errors raised while constructing (InvalidGerm, StructureViolation,
// ...) keep their kind and gain the pointer prefix.
Rat rat_from_json(const Json& j, const std::string& at);
Poly poly_from_json(const Json& j, const std::string& at);
BiPoly bipoly_from_json(const Json& j, const std::string& at);
/// Accepts {"rows", "cols", "entries"} (entries flat row-major or a list of
/// rows) or a bare list of rows.
PolyMatrix matrix_from_json(const Json& j, const std::string& at);
CoverData cover_from_json(const Json& j, const std::string& at);
SpectralGerm germ_from_json(const Json& j, const std::string& at);
HiggsGerm higgs_from_json(const Json& j, const std::string& at);

/// Helpers shared with the scenario reader.
const Json& require_field(const Json& obj, const char* key, const std::string& at);
std::int64_t int_from_json(const Json& j, const std::string& at);
bool bool_from_json(const Json& j, const std::string& at);
std::string string_from_json(const Json& j, const std::string& at);
[[noreturn]] void malformed(const std::string& at, const std::string& what);

}  // namespace prym
