// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prym/poly.hpp"

namespace prym {

/// Polynomial in x whose coefficients are polynomials in t, i.e. an element
/// of Q[t][x]. Coefficients are stored in ascending x-degree and trimmed.
class BiPoly {
   public:
    BiPoly() = default;
    explicit BiPoly(std::vector<Poly> x_coefficients);

    /// Embeds a polynomial in x with constant (t-free) coefficients.
    static BiPoly from_x_poly(const Poly& p);
    /// Embeds a polynomial in t as an x-degree-0 element.
    static BiPoly from_t_poly(const Poly& p);
    /// c(t) * x^k
    static BiPoly monomial(const Poly& c, std::size_t k);

    bool is_zero() const noexcept { return c_.empty(); }
    int degree_x() const noexcept { return static_cast<int>(c_.size()) - 1; }
    int degree_t() const noexcept;
    const Poly& operator[](std::size_t k) const noexcept;
    std::span<const Poly> coefficients() const noexcept { return c_; }
    const Poly& leading() const noexcept;
    bool is_monic() const noexcept;

    /// P(x, 0) as a polynomial in x.
    Poly at_t_zero() const;
    /// P(x, t0).
    Poly at_t(const Rat& t0) const;
    /// P(x0, t) as a polynomial in t.
    Poly at_x(const Rat& x0) const;

    BiPoly d_dx() const;
    BiPoly d_dt() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

   private:
    void trim();
    std::vector<Poly> c_;
};

/// Square root in Q[t][x] with positive leading rational (the leading x
/// coefficient is itself the canonical root of the original leading
/// coefficient). nullopt when no root exists.
std::optional<BiPoly> square_root(const BiPoly& p);

std::string to_string(const BiPoly& p);

}  // namespace prym
