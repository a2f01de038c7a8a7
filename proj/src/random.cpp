// SPDX-License-Identifier: Apache-2.0
#include "prym/random.hpp"

#include "prym/error.hpp"

namespace prym {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(eng_() % span);
}

Rat Rng::rational(std::int64_t bound, std::int64_t den) {
    Rat q(static_cast<long>(uniform(-bound, bound)), static_cast<unsigned long>(uniform(1, den)));
    q.canonicalize();
    return q;
}

Rat Rng::nonzero_rational(std::int64_t bound, std::int64_t den) {
    Rat q = rational(bound, den);
    while (q == 0) q = rational(bound, den);
    return q;
}

namespace {

Poly random_with_step(Rng& rng, int first, int max_deg, std::int64_t bound) {
    std::vector<Rat> c(static_cast<std::size_t>(std::max(max_deg + 1, 0)));
    for (int k = first; k <= max_deg; k += 2) c[static_cast<std::size_t>(k)] = Rat(static_cast<long>(rng.uniform(-bound, bound)));
    return Poly(std::move(c));
}

}  // namespace

Poly random_poly(Rng& rng, int max_deg, std::int64_t bound) {
    std::vector<Rat> c(static_cast<std::size_t>(std::max(max_deg + 1, 0)));
    for (auto& x : c) x = Rat(static_cast<long>(rng.uniform(-bound, bound)));
    return Poly(std::move(c));
}

Poly random_even_poly(Rng& rng, int max_deg, std::int64_t bound) { return random_with_step(rng, 0, max_deg, bound); }

Poly random_odd_poly(Rng& rng, int max_deg, std::int64_t bound) { return random_with_step(rng, 1, max_deg, bound); }

PolyMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_deg, std::int64_t bound) {
    PolyMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_poly(rng, max_deg, bound);
    return m;
}

PolyMatrix random_antisymmetric(Rng& rng, std::size_t r, int max_deg, std::int64_t bound) {
    PolyMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            m(i, j) = random_poly(rng, max_deg, bound);
            m(j, i) = -m(i, j);
        }
    return m;
}

BiPoly random_monic_bipoly(Rng& rng, int dx, int dt, std::int64_t bound) {
    std::vector<Poly> c(static_cast<std::size_t>(dx + 1));
    for (int k = 0; k < dx; ++k) c[static_cast<std::size_t>(k)] = random_poly(rng, dt, bound);
    c[static_cast<std::size_t>(dx)] = Poly::constant(1);
    return BiPoly(std::move(c));
}

PolyMatrix standard_symplectic(std::size_t r) {
    if (r % 2 != 0) throw Error(ErrorKind::OddDimension, "symplectic form needs even size");
    PolyMatrix j(r, r);
    const std::size_t h = r / 2;
    for (std::size_t i = 0; i < h; ++i) {
        j(i, h + i) = Poly::constant(1);
        j(h + i, i) = Poly::constant(-1);
    }
    return j;
}

PolyMatrix random_symmetric_form(Rng& rng, std::size_t r) {
    while (true) {
        PolyMatrix s(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i; j < r; ++j) {
                s(i, j) = Poly::constant(Rat(static_cast<long>(rng.uniform(-2, 2))));
                s(j, i) = s(i, j);
            }
        if (constant_inverse(s)) return s;
    }
}

PolyMatrix random_alternating_form(Rng& rng, std::size_t r) {
    if (r % 2 != 0) throw Error(ErrorKind::OddDimension, "alternating form needs even size");
    while (true) {
        PolyMatrix j = random_antisymmetric(rng, r, 0, 2);
        if (constant_inverse(j)) return j;
    }
}

namespace {

PolyMatrix symmetrize(const PolyMatrix& b, const PolyMatrix& form) {
    const PolyMatrix inv = *constant_inverse(form);
    PolyMatrix phi = b + inv * b.reflected().transposed() * form;
    return phi * Poly::constant(Rat(1, 2));
}

}  // namespace

HiggsGerm random_symmetric_germ(Rng& rng, const PolyMatrix& S, int max_deg) {
    const PolyMatrix b = random_matrix(rng, S.rows(), S.rows(), max_deg);
    return HiggsGerm::classify(symmetrize(b, S), HiggsStructure::symmetric(S));
}

HiggsGerm random_alternating_germ(Rng& rng, const PolyMatrix& J, int max_deg) {
    const PolyMatrix b = random_matrix(rng, J.rows(), J.rows(), max_deg);
    return HiggsGerm::classify(symmetrize(b, J), HiggsStructure::alternating(J));
}

HiggsGerm random_invariant_germ(Rng& rng, std::size_t r, std::size_t k_p, int max_deg) {
    PolyMatrix phi(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const bool same_block = (i < k_p) == (j < k_p);
            phi(i, j) = same_block ? random_odd_poly(rng, max_deg) : random_even_poly(rng, max_deg);
        }
    return HiggsGerm::classify(std::move(phi), HiggsStructure::invariant(k_p));
}

SpectralGerm random_spectral_germ(Rng& rng, std::size_t r, Linearization lin, int max_deg, bool generic_constants) {
    std::vector<Poly> s;
    s.reserve(r);
    for (std::size_t i = 1; i <= r; ++i) {
        const bool even = lin == Linearization::Positive || i % 2 == 0;
        Poly p = even ? random_even_poly(rng, max_deg) : random_odd_poly(rng, max_deg);
        if (even && generic_constants && p[0] == 0) p = p + Poly::constant(rng.nonzero_rational(4, 1));
        s.push_back(std::move(p));
    }
    return SpectralGerm::make(std::move(s), Chart::Ramified, lin);
}

}  // namespace prym
