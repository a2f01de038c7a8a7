// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prym/poly.hpp"
#include "prym/poly_matrix.hpp"

namespace prym {

enum class HiggsStructureKind { Symmetric, Alternating, InvariantTyped };

/// Equivariance data of a Higgs germ at a ramification point.
///
/// Symmetric(S) and Alternating(J) carry the constant matrix of the pairing
/// psi_p; InvariantTyped(k_p) carries the multiplicity of -1 in the
/// linearization A_p = diag(-1 (k_p times), +1 (r - k_p times)).
struct HiggsStructure {
    HiggsStructureKind kind;
    PolyMatrix form;
    std::size_t k_p = 0;

    static HiggsStructure symmetric(PolyMatrix S) { return {HiggsStructureKind::Symmetric, std::move(S), 0}; }
    static HiggsStructure alternating(PolyMatrix J) { return {HiggsStructureKind::Alternating, std::move(J), 0}; }
    static HiggsStructure invariant(std::size_t k_p) { return {HiggsStructureKind::InvariantTyped, {}, k_p}; }
};

/// A local Higgs field phi(t) together with a verified equivariance structure:
///
///   Symmetric(S):      phi(t)^T = S phi(-t) S^-1
///   Alternating(J):    phi(t)^T = J phi(-t) J^-1
///   InvariantTyped:    phi(-t)  = -A phi(t) A
class HiggsGerm {
   public:
    /// Throws DimensionMismatch for a non-square phi or a form of the wrong
    /// size, StructureViolation when the form is not constant invertible
    /// (anti)symmetric or the first entry identity fails.
    static HiggsGerm classify(PolyMatrix phi, HiggsStructure structure);

    std::size_t r() const noexcept { return phi_.rows(); }
    const PolyMatrix& phi() const noexcept { return phi_; }
    const HiggsStructure& structure() const noexcept { return structure_; }

   private:
    HiggsGerm(PolyMatrix phi, HiggsStructure s) : phi_(std::move(phi)), structure_(std::move(s)) {}
    PolyMatrix phi_;
    HiggsStructure structure_;
};

struct HitchinImage {
    /// H_1..H_r with H_i = (-1)^i Tr(Lambda^i phi).
    std::vector<Poly> components;
    /// parity_flags[i-1] is true when H_i is even in t.
    std::vector<bool> parity_flags;
};

HitchinImage hitchin_map(const HiggsGerm& h);
/// Same map on a bare square matrix (no equivariance check).
HitchinImage hitchin_map(const PolyMatrix& phi);

struct ComponentParity {
    std::size_t i;
    /// Expected symmetry: even, or odd when the negative lift acts by -1 on K^i.
    bool expect_even;
    bool ok;
};

struct ParityReport {
    std::vector<ComponentParity> components;
    bool ok() const noexcept;
};

/// Invariance of the Hitchin components under the lifted involution:
/// Symmetric/Alternating germs land in the positive part (every H_i even),
/// typed invariant germs in the negative part (H_i(-t) = (-1)^i H_i(t)).
ParityReport equivariance_parity_check(const HiggsGerm& h);

/// q(x) = pf(J (phi(0) - x I)) / pf(J), sign-normalized to a positive leading
/// coefficient, so that q^2 = det(x I - phi(0)). Throws StructureViolation
/// unless the germ is Alternating.
Poly alternating_square_certificate(const HiggsGerm& h);

struct VanishingProfile {
    /// vanishing_order(H_i), nullopt when H_i = 0.
    std::vector<std::optional<std::size_t>> orders;
    /// max(0, i - 2 k_p).
    std::vector<std::size_t> bounds;
    bool ok;
};

/// Throws StructureViolation unless the germ is InvariantTyped.
VanishingProfile vanishing_order_profile(const HiggsGerm& h);

/// phi^r == 0. Throws NonSquareMatrix.
bool is_nilpotent(const PolyMatrix& phi);

}  // namespace prym
