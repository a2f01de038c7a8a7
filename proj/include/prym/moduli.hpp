// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prym/cover.hpp"
#include "prym/spectral.hpp"

namespace prym {

/// Type of a sigma-invariant bundle: k_p = multiplicity of -1 in the
/// linearization at each of the 2n ramification points, up to the global sign
/// A_p -> -A_p, which replaces every k_p by r - k_p. Stored canonically as the
/// lexicographically smaller of the two vectors.
class InvariantType {
   public:
    /// Throws InadmissibleInput when some k_p lies outside [0, r].
    static InvariantType make(std::int64_t r, std::vector<std::int64_t> ks);

    std::int64_t r() const noexcept { return r_; }
    const std::vector<std::int64_t>& ks() const noexcept { return ks_; }
    std::int64_t k_sum() const noexcept;
    /// Sum of k_p (r - k_p), unchanged by the flip.
    std::int64_t defect() const noexcept;
    bool parity_matches(std::int64_t d) const noexcept;

    friend bool operator==(const InvariantType&, const InvariantType&) = default;
    friend auto operator<=>(const InvariantType&, const InvariantType&) = default;

   private:
    InvariantType(std::int64_t r, std::vector<std::int64_t> ks) : r_(r), ks_(std::move(ks)) {}
    std::int64_t r_;
    std::vector<std::int64_t> ks_;
};

/// Canonical form of a raw k-vector: min(ks, r - ks) lexicographically.
std::vector<std::int64_t> canonical_ks(std::int64_t r, const std::vector<std::int64_t>& ks);

/// Sign type of a rank-2 anti-invariant bundle: +-1 at each ramification
/// point, modulo the global sign. Bit p of a mask set means -1 at point p.
class SignType {
   public:
    static SignType from_mask(unsigned points, std::uint64_t mask);
    static SignType make(std::vector<int> signs);

    unsigned points() const noexcept { return points_; }
    std::uint64_t mask() const noexcept { return mask_; }
    std::vector<int> signs() const;

    friend bool operator==(const SignType&, const SignType&) = default;

   private:
    SignType(unsigned points, std::uint64_t mask) : points_(points), mask_(mask) {}
    unsigned points_;
    std::uint64_t mask_;
};

/// r^2 (g_Y - 1) + 1 + sum k_p (r - k_p), or (r^2 - 1)(g_Y - 1) + sum k_p (r - k_p)
/// with fixed determinant. Throws ParityViolation when sum k_p and d differ
/// mod 2 on a ramified cover, InadmissibleInput when the type has the wrong
/// length for the cover.
std::int64_t dim_invariant_locus(const CoverData& c, const InvariantType& t, std::int64_t d, bool fixed_det);

enum class AntiKind { Plus, Minus };

/// sigma-symmetric (Plus) or sigma-alternating (Minus) anti-invariant bundles:
/// r^2 (g_Y - 1) + n r (r +- 1) / 2. Throws EmptyLocus for Minus with odd r on
/// a ramified cover.
std::int64_t dim_anti_invariant(const CoverData& c, std::int64_t r, AntiKind kind);

/// Closed forms for the Hitchin base spaces. WTau assumes one point with k_p
/// and all other points maximal. Throws InadmissibleInput for r < 1, WMinus
/// with odd r on a ramified cover, and WTau with n = 0 or k_p > floor(r/2).
std::int64_t dim_w_space(const CoverData& c, std::int64_t r, const WSpace& which);

/// Same spaces counted section by section: sum of h0(K_X^i)_+ for the
/// matching lift, minus the local conditions at ramification points.
std::int64_t dim_w_space_by_sections(const CoverData& c, std::int64_t r, const WSpace& which);

/// Dimension of the locus for the type with one point of multiplicity k_p
/// and every other point maximal; d is taken to match its parity.
std::int64_t dim_single_point_type_locus(const CoverData& c, std::int64_t r, std::int64_t k_p);

/// Upper bound on the number of raw k-vectors enumerate_types will walk.
inline constexpr std::uint64_t kMaxTypeEnumeration = std::uint64_t{1} << 24;

/// Canonical types of rank r satisfying the parity constraint for degree d,
/// in increasing lexicographic order. maximal_only keeps k_p = r/2 (even r)
/// or k_p in {(r-1)/2, (r+1)/2} (odd r). Throws InadmissibleInput for n = 0
/// and GridTooLarge when the full enumeration would exceed
/// kMaxTypeEnumeration vectors.
std::vector<InvariantType> enumerate_types(const CoverData& c, std::int64_t r, std::int64_t d, bool maximal_only);

struct OrbitReport {
    std::uint64_t orbit_count;
    /// Number of canonical sign types, 2^(2n-1).
    std::uint64_t component_count;
    /// Order of the acting group after dividing out the global sign.
    std::uint64_t group_order;
};

/// Orbits of the 2-torsion action on canonical sign types of rank-2
/// sigma-alternating bundles. The group is modeled as even-weight sign vectors
/// modulo the global sign, acting by componentwise product. Throws
/// InadmissibleInput for n outside [1, 16].
OrbitReport p2_orbits_rank2(std::int64_t n);

enum class Locus { AntiInvariant, AntiInvariantFixedDet };

struct ComponentScenario {
    Locus locus;
    AntiKind kind;
    bool ramified;
    std::int64_t r;
    std::int64_t n = 0;
};

struct ComponentAnswer {
    enum class Kind { Irreducible, Empty, Count };
    Kind kind;
    std::uint64_t count = 0;

    friend bool operator==(const ComponentAnswer&, const ComponentAnswer&) = default;
};

std::string to_string(const ComponentAnswer& a);

/// Fixed table of known connectedness results; nothing is computed. Throws
/// UnknownScenario outside the table.
ComponentAnswer component_oracle(const ComponentScenario& s);

struct Range {
    std::int64_t lo;
    std::int64_t hi;
    std::int64_t size() const noexcept { return hi < lo ? 0 : hi - lo + 1; }
};

struct GridSpec {
    Range g_Y{1, 5};
    Range n{1, 6};
    Range r{1, 8};
    /// Restricts the WTau multiplicities; default is every admissible k_p.
    std::optional<Range> k_p;
};

struct IdentityCheck {
    std::string family;
    std::int64_t g_Y;
    std::int64_t n;
    std::int64_t r;
    std::optional<std::int64_t> k_p;
    std::vector<std::pair<std::string, std::int64_t>> routes;
    bool pass;
};

struct SweepReport {
    std::vector<IdentityCheck> checks;
    std::size_t cells = 0;
    std::size_t skipped_cells = 0;
    /// Index into checks of the first failure; the report stops there.
    std::optional<std::size_t> first_failure;
    bool ok() const noexcept { return !first_failure; }
};

/// Default cap on the number of (g_Y, n, r) cells, overridable with the
/// PRYM_HITCHIN_MAX_GRID environment variable.
inline constexpr std::uint64_t kDefaultMaxGrid = 10000;
std::uint64_t max_grid_cells();

/// All dimension identities on one (g_Y, n, r) cell, in a fixed order.
std::vector<IdentityCheck> identity_checks(const CoverData& c, std::int64_t r, std::optional<Range> k_p = {});

/// Runs identity_checks on every admissible cell of the grid (cells with
/// g_X < 2 are counted as skipped). Throws GridTooLarge above
/// max_grid_cells(), InadmissibleInput for negative bounds.
SweepReport identity_sweep(const GridSpec& grid, unsigned jobs = 1);

}  // namespace prym
