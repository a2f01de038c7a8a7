// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prym/rational.hpp"

namespace prym {

/// Univariate polynomial over Q, coefficients in ascending degree.
///
/// Always trimmed: the leading stored coefficient is nonzero, and the zero
/// polynomial has no coefficients. Two polynomials are equal iff their
/// coefficient vectors are equal.
///
/// The variable is called t throughout the library (the chart parameter on
/// the base curve), but the same type is used for polynomials in the fiber
/// coordinate x, e.g. P(x, 0) or a square-root certificate.
class Poly {
   public:
    /// Degree reported for the zero polynomial; compares below every real degree.
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    explicit Poly(std::vector<Rat> coefficients);
    Poly(std::initializer_list<Rat> coefficients);

    static Poly constant(const Rat& c);
    /// c * t^k
    static Poly monomial(const Rat& c, std::size_t k);

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of t^k; zero past the degree.
    const Rat& operator[](std::size_t k) const noexcept;
    std::span<const Rat> coefficients() const noexcept { return c_; }
    const Rat& leading() const noexcept;

    Rat operator()(const Rat& at) const;

    /// p(-t)
    Poly reflected() const;
    Poly derivative() const;
    /// Scaled to leading coefficient 1; the zero polynomial stays zero.
    Poly monic() const;

    bool is_even() const noexcept;
    bool is_odd() const noexcept;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rat& rhs);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) = default;

   private:
    void trim();
    std::vector<Rat> c_;
};

Poly pow(const Poly& base, unsigned exponent);

/// Euclidean division; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Largest k with t^k | p. nullopt stands for the infinite order of p = 0.
std::optional<std::size_t> vanishing_order(const Poly& p);

struct ParityParts {
    Poly even;
    Poly odd;
};

/// p = even + odd with even(-t) = even(t), odd(-t) = -odd(t).
ParityParts parity_decompose(const Poly& p);

/// q with q*q == p and positive leading coefficient, or nullopt when p is
/// not a square in Q[t].
std::optional<Poly> square_root(const Poly& p);

/// Human-readable form such as "x^2 - 2*x + 1".
std::string to_string(const Poly& p, char var = 't');

}  // namespace prym
