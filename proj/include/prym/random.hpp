// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "prym/bipoly.hpp"
#include "prym/higgs.hpp"
#include "prym/poly.hpp"
#include "prym/poly_matrix.hpp"
#include "prym/spectral.hpp"

namespace prym {

/// splitmix64 finalizer; mixes a master seed with a trial index so every
/// trial has its own reproducible stream regardless of scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Seeded generator with a portable integer mapping (plain modulo on
/// mt19937_64 output), so streams agree across standard libraries.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return (eng_() >> 11) & 1; }
    /// Small rational p/q with |p| <= bound, 1 <= q <= den.
    Rat rational(std::int64_t bound, std::int64_t den = 3);
    Rat nonzero_rational(std::int64_t bound, std::int64_t den = 3);

   private:
    std::mt19937_64 eng_;
};

/// Coefficients in [-bound, bound], degree <= max_deg.
Poly random_poly(Rng& rng, int max_deg, std::int64_t bound = 4);
/// Only even (resp. odd) powers of t, degree <= max_deg.
Poly random_even_poly(Rng& rng, int max_deg, std::int64_t bound = 4);
Poly random_odd_poly(Rng& rng, int max_deg, std::int64_t bound = 4);

PolyMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_deg, std::int64_t bound = 3);
PolyMatrix random_antisymmetric(Rng& rng, std::size_t r, int max_deg, std::int64_t bound = 3);
/// Monic in x of degree dx with t-coefficients of degree <= dt.
BiPoly random_monic_bipoly(Rng& rng, int dx, int dt, std::int64_t bound = 3);

/// Standard block form [[0, I], [-I, 0]] for even r.
PolyMatrix standard_symplectic(std::size_t r);
/// Constant invertible symmetric matrix (retries until invertible).
PolyMatrix random_symmetric_form(Rng& rng, std::size_t r);
/// Constant invertible antisymmetric matrix, r even.
PolyMatrix random_alternating_form(Rng& rng, std::size_t r);

/// phi = (B + M^-1 B(-t)^T M) / 2 for random B, which satisfies
/// phi(t)^T = M phi(-t) M^-1 for symmetric or antisymmetric M.
HiggsGerm random_symmetric_germ(Rng& rng, const PolyMatrix& S, int max_deg);
HiggsGerm random_alternating_germ(Rng& rng, const PolyMatrix& J, int max_deg);
/// Odd entries in the two diagonal blocks, even entries off them.
HiggsGerm random_invariant_germ(Rng& rng, std::size_t r, std::size_t k_p, int max_deg);

/// Germ satisfying the parity rule of the lift. With generic_constants the
/// constant term of every section allowed to have one is nonzero.
SpectralGerm random_spectral_germ(Rng& rng, std::size_t r, Linearization lin, int max_deg, bool generic_constants);

}  // namespace prym
