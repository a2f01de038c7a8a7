// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "prym/bipoly.hpp"
#include "prym/poly.hpp"

namespace prym {

/// Dense row-major matrix of polynomials in t.
class PolyMatrix {
   public:
    PolyMatrix() = default;
    /// Zero matrix.
    PolyMatrix(std::size_t rows, std::size_t cols);
    /// Throws DimensionMismatch unless entries.size() == rows * cols.
    PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries);

    static PolyMatrix identity(std::size_t n);
    static PolyMatrix from_constants(std::size_t rows, std::size_t cols, const std::vector<Rat>& values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const std::vector<Poly>& entries() const noexcept { return e_; }

    const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Poly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    bool is_zero() const noexcept;
    bool is_constant() const noexcept;
    bool is_antisymmetric() const;

    PolyMatrix transposed() const;
    /// Entrywise t -> -t.
    PolyMatrix reflected() const;
    /// Entrywise value at t = 0, as a constant matrix.
    PolyMatrix at_t_zero() const;
    Poly trace() const;

    PolyMatrix operator-() const;
    PolyMatrix& operator+=(const PolyMatrix& rhs);
    PolyMatrix& operator-=(const PolyMatrix& rhs);
    PolyMatrix& operator*=(const Poly& s);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(PolyMatrix a, const Poly& s) { return a *= s; }
    friend PolyMatrix operator*(const Poly& s, PolyMatrix a) { return a *= s; }
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> e_;
};

PolyMatrix pow(const PolyMatrix& m, unsigned exponent);

/// det(x*I - m) as an element of Q[t][x]. The coefficient of x^(r-i) is
/// (-1)^i Tr(Lambda^i m). Computed with the Faddeev-LeVerrier recurrence,
/// which divides only by the integers 1..r and so stays in Q[t].
/// Throws NonSquareMatrix.
BiPoly char_poly(const PolyMatrix& m);

/// det(m), read off the constant term of char_poly.
Poly determinant(const PolyMatrix& m);

/// Pfaffian by expansion along the first remaining row, memoized on the set
/// of remaining indices. Throws NonSquareMatrix, NotAntisymmetric, OddDimension.
Poly pfaffian(const PolyMatrix& m);

/// sum_k p_k(t) * m^k for p = sum_k p_k(t) x^k.
PolyMatrix evaluate(const BiPoly& p, const PolyMatrix& m);

/// Inverse of a constant square matrix over Q; nullopt when singular or
/// when some entry depends on t.
std::optional<PolyMatrix> constant_inverse(const PolyMatrix& m);

/// Sylvester resultant of two polynomials in one variable, as the determinant
/// of the (deg a + deg b) square Sylvester matrix. Zero iff a and b share a
/// root over the algebraic closure (or one of them is zero).
Rat resultant(const Poly& a, const Poly& b);

}  // namespace prym
