// SPDX-License-Identifier: Apache-2.0
#include "prym/higgs.hpp"

#include <algorithm>
#include <string>

#include "prym/error.hpp"

namespace prym {

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void check_conjugation(const PolyMatrix& phi, const PolyMatrix& form, const char* label) {
    const std::size_t r = phi.rows();
    if (form.rows() != r || form.cols() != r)
        throw Error(ErrorKind::DimensionMismatch, std::string(label) + " form must be " + std::to_string(r) + "x" +
                                                      std::to_string(r));
    if (!form.is_constant()) throw Error(ErrorKind::StructureViolation, std::string(label) + " form must be constant");
    auto inv = constant_inverse(form);
    if (!inv) throw Error(ErrorKind::StructureViolation, std::string(label) + " form is singular");
    const PolyMatrix lhs = phi.transposed();
    const PolyMatrix rhs = form * phi.reflected() * *inv;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (lhs(i, j) != rhs(i, j))
                throw Error(ErrorKind::StructureViolation,
                            std::string(label) + " identity phi(t)^T = M phi(-t) M^-1 fails at entry " +
                                entry_name(i, j));
}

}  // namespace

HiggsGerm HiggsGerm::classify(PolyMatrix phi, HiggsStructure structure) {
    if (!phi.is_square() || phi.rows() == 0)
        throw Error(ErrorKind::DimensionMismatch, "Higgs field must be a nonempty square matrix");
    const std::size_t r = phi.rows();
    switch (structure.kind) {
        case HiggsStructureKind::Symmetric:
            if (structure.form.transposed() != structure.form)
                throw Error(ErrorKind::StructureViolation, "S must be symmetric");
            check_conjugation(phi, structure.form, "symmetric");
            break;
        case HiggsStructureKind::Alternating:
            if (!structure.form.is_antisymmetric())
                throw Error(ErrorKind::StructureViolation, "J must be antisymmetric");
            check_conjugation(phi, structure.form, "alternating");
            break;
        case HiggsStructureKind::InvariantTyped: {
            if (structure.k_p > r) throw Error(ErrorKind::StructureViolation, "k_p exceeds the rank");
            // (A phi A)_ij = a_i a_j phi_ij, so phi_ij(-t) = -a_i a_j phi_ij(t)
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) {
                    const bool same_block = (i < structure.k_p) == (j < structure.k_p);
                    const Poly& e = phi(i, j);
                    if (same_block ? !e.is_odd() : !e.is_even())
                        throw Error(ErrorKind::StructureViolation,
                                    "phi(-t) = -A phi(t) A fails at entry " + entry_name(i, j) + ": expected " +
                                        (same_block ? "odd" : "even") + " entry");
                }
            break;
        }
    }
    return HiggsGerm(std::move(phi), std::move(structure));
}

HitchinImage hitchin_map(const PolyMatrix& phi) {
    const BiPoly cp = char_poly(phi);
    const std::size_t r = phi.rows();
    HitchinImage img;
    img.components.reserve(r);
    for (std::size_t i = 1; i <= r; ++i) {
        img.components.push_back(cp[r - i]);
        img.parity_flags.push_back(img.components.back().is_even());
    }
    return img;
}

HitchinImage hitchin_map(const HiggsGerm& h) { return hitchin_map(h.phi()); }

bool ParityReport::ok() const noexcept {
    return std::all_of(components.begin(), components.end(), [](const ComponentParity& c) { return c.ok; });
}

ParityReport equivariance_parity_check(const HiggsGerm& h) {
    const HitchinImage img = hitchin_map(h);
    const bool typed = h.structure().kind == HiggsStructureKind::InvariantTyped;
    ParityReport rep;
    for (std::size_t i = 1; i <= img.components.size(); ++i) {
        const bool expect_even = !typed || i % 2 == 0;
        const Poly& H = img.components[i - 1];
        rep.components.push_back({i, expect_even, expect_even ? H.is_even() : H.is_odd()});
    }
    return rep;
}

Poly alternating_square_certificate(const HiggsGerm& h) {
    if (h.structure().kind != HiggsStructureKind::Alternating)
        throw Error(ErrorKind::StructureViolation, "square certificate needs an alternating germ");
    const std::size_t r = h.r();
    const PolyMatrix& J = h.structure().form;
    // J (phi(0) - x I) = J phi(0) - x J, read as a matrix of polynomials in x
    const PolyMatrix jphi = J * h.phi().at_t_zero();
    PolyMatrix pencil(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) pencil(i, j) = Poly{jphi(i, j)[0], -J(i, j)[0]};
    const Rat pf_j = pfaffian(J)[0];
    Poly q = pfaffian(pencil) * (1 / pf_j);
    if (sgn(q.leading()) < 0) q = -q;
    return q;
}

VanishingProfile vanishing_order_profile(const HiggsGerm& h) {
    if (h.structure().kind != HiggsStructureKind::InvariantTyped)
        throw Error(ErrorKind::StructureViolation, "vanishing profile needs a typed invariant germ");
    const HitchinImage img = hitchin_map(h);
    const std::size_t kp2 = 2 * h.structure().k_p;
    VanishingProfile prof{{}, {}, true};
    for (std::size_t i = 1; i <= img.components.size(); ++i) {
        auto ord = vanishing_order(img.components[i - 1]);
        const std::size_t bound = i > kp2 ? i - kp2 : 0;
        prof.orders.push_back(ord);
        prof.bounds.push_back(bound);
        if (ord && *ord < bound) prof.ok = false;
    }
    return prof;
}

bool is_nilpotent(const PolyMatrix& phi) {
    if (!phi.is_square()) throw Error(ErrorKind::NonSquareMatrix, "nilpotency of a non-square matrix");
    return pow(phi, static_cast<unsigned>(phi.rows())).is_zero();
}

}  // namespace prym
