// SPDX-License-Identifier: Apache-2.0
#include "prym/poly_matrix.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "prym/error.hpp"

namespace prym {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows * cols)
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(rows * cols) + " entries, got " +
                                                      std::to_string(e_.size()));
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(1);
    return m;
}

PolyMatrix PolyMatrix::from_constants(std::size_t rows, std::size_t cols, const std::vector<Rat>& values) {
    std::vector<Poly> e;
    e.reserve(values.size());
    for (const auto& v : values) e.push_back(Poly::constant(v));
    return PolyMatrix(rows, cols, std::move(e));
}

bool PolyMatrix::is_zero() const noexcept {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::is_constant() const noexcept {
    for (const auto& p : e_)
        if (!p.is_constant()) return false;
    return true;
}

bool PolyMatrix::is_antisymmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

PolyMatrix PolyMatrix::reflected() const {
    PolyMatrix r = *this;
    for (auto& p : r.e_) p = p.reflected();
    return r;
}

PolyMatrix PolyMatrix::at_t_zero() const {
    PolyMatrix r = *this;
    for (auto& p : r.e_) p = Poly::constant(p[0]);
    return r;
}

Poly PolyMatrix::trace() const {
    Poly acc;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
    return acc;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r = *this;
    for (auto& p : r.e_) p = -p;
    return r;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += rhs.e_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= rhs.e_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Poly& s) {
    for (auto& p : e_) p *= s;
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    PolyMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Poly& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Poly& bkj = b(k, j);
                if (!bkj.is_zero()) c(i, j) += aik * bkj;
            }
        }
    return c;
}

PolyMatrix pow(const PolyMatrix& m, unsigned exponent) {
    if (!m.is_square()) throw Error(ErrorKind::NonSquareMatrix, "matrix power");
    PolyMatrix result = PolyMatrix::identity(m.rows());
    PolyMatrix b = m;
    while (exponent) {
        if (exponent & 1u) result = result * b;
        exponent >>= 1u;
        if (exponent) b = b * b;
    }
    return result;
}

BiPoly char_poly(const PolyMatrix& m) {
    if (!m.is_square())
        throw Error(ErrorKind::NonSquareMatrix,
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " has no characteristic polynomial");
    const std::size_t r = m.rows();
    // c[k] is the coefficient of x^k; M_k = A M_{k-1} + c_{r-k+1} I,
    // c_{r-k} = -tr(A M_k) / k.
    std::vector<Poly> c(r + 1);
    c[r] = Poly::constant(1);
    PolyMatrix mk(r, r);
    for (std::size_t k = 1; k <= r; ++k) {
        PolyMatrix next = m * mk;
        for (std::size_t i = 0; i < r; ++i) next(i, i) += c[r - k + 1];
        c[r - k] = (m * next).trace() * Rat(-1, static_cast<unsigned long>(k));
        mk = std::move(next);
    }
    return BiPoly(std::move(c));
}

Poly determinant(const PolyMatrix& m) {
    BiPoly cp = char_poly(m);
    Poly det = cp[0];
    if (m.rows() % 2) det = -det;
    return det;
}

namespace {

class PfaffianExpansion {
   public:
    explicit PfaffianExpansion(const PolyMatrix& m) : m_(m) {}

    Poly operator()(std::uint64_t remaining) {
        if (remaining == 0) return Poly::constant(1);
        if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;
        const int i = std::countr_zero(remaining);
        std::uint64_t rest = remaining & (remaining - 1);
        Poly acc;
        bool negative = false;
        for (std::uint64_t scan = rest; scan; scan &= scan - 1) {
            const int j = std::countr_zero(scan);
            const Poly& aij = m_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (!aij.is_zero()) {
                Poly term = aij * (*this)(rest & ~(std::uint64_t{1} << j));
                if (negative)
                    acc -= term;
                else
                    acc += term;
            }
            negative = !negative;
        }
        memo_.emplace(remaining, acc);
        return acc;
    }

   private:
    const PolyMatrix& m_;
    std::unordered_map<std::uint64_t, Poly> memo_;
};

}  // namespace

Poly pfaffian(const PolyMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::NonSquareMatrix, "pfaffian of a non-square matrix");
    if (!m.is_antisymmetric()) throw Error(ErrorKind::NotAntisymmetric, "pfaffian needs m^T = -m");
    if (m.rows() % 2) throw Error(ErrorKind::OddDimension, "pfaffian needs even dimension");
    if (m.rows() > 62) throw Error(ErrorKind::InadmissibleInput, "pfaffian dimension above 62");
    const std::uint64_t all = m.rows() == 0 ? 0 : (~std::uint64_t{0} >> (64 - m.rows()));
    return PfaffianExpansion(m)(all);
}

PolyMatrix evaluate(const BiPoly& p, const PolyMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::NonSquareMatrix, "matrix polynomial evaluation");
    const std::size_t n = m.rows();
    PolyMatrix acc(n, n);
    // Horner in x
    for (int k = p.degree_x(); k >= 0; --k) {
        acc = acc * m;
        const Poly& c = p[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
    }
    return acc;
}

std::optional<PolyMatrix> constant_inverse(const PolyMatrix& m) {
    if (!m.is_square() || !m.is_constant()) return std::nullopt;
    const std::size_t n = m.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j)[0];
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        const Rat inv = 1 / a[col][col];
        for (auto& v : a[col]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rat f = a[r][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    std::vector<Rat> vals;
    vals.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) vals.push_back(a[i][n + j]);
    return PolyMatrix::from_constants(n, n, vals);
}

Rat resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Rat(0);
    const std::size_t m = static_cast<std::size_t>(a.degree());
    const std::size_t n = static_cast<std::size_t>(b.degree());
    if (m + n == 0) return Rat(1);
    const std::size_t size = m + n;
    PolyMatrix syl(size, size);
    // n shifted rows of a, then m shifted rows of b, highest degree first
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t k = 0; k <= m; ++k) syl(row, row + k) = Poly::constant(a[m - k]);
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t k = 0; k <= n; ++k) syl(n + row, row + k) = Poly::constant(b[n - k]);
    return determinant(syl)[0];
}

}  // namespace prym
