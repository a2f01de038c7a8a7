// SPDX-License-Identifier: Apache-2.0
#include "prym/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace prym {

namespace {
const Rat kZero{0};
}

Poly::Poly(std::vector<Rat> coefficients) : c_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coefficients) : c_(coefficients) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t k) {
    if (c == 0) return {};
    std::vector<Rat> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::operator[](std::size_t k) const noexcept { return k < c_.size() ? c_[k] : kZero; }

const Rat& Poly::leading() const noexcept { return c_.empty() ? kZero : c_.back(); }

Rat Poly::operator()(const Rat& at) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::reflected() const {
    Poly r = *this;
    for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    Poly r = *this;
    Rat inv = 1 / leading();
    for (auto& c : r.c_) c *= inv;
    return r;
}

bool Poly::is_even() const noexcept {
    for (std::size_t k = 1; k < c_.size(); k += 2)
        if (c_[k] != 0) return false;
    return true;
}

bool Poly::is_odd() const noexcept {
    for (std::size_t k = 0; k < c_.size(); k += 2)
        if (c_[k] != 0) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    Rat tmp;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            out[i + j] += tmp;
        }
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rat& rhs) {
    if (rhs == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= rhs;
    return *this;
}

Poly pow(const Poly& base, unsigned exponent) {
    Poly result = Poly::constant(1);
    Poly b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1u;
        if (exponent) b *= b;
    }
    return result;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    assert(!b.is_zero());
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Rat> rem(a.coefficients().begin(), a.coefficients().end());
    const int db = b.degree();
    std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const Rat inv = 1 / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const Rat c = rem[static_cast<std::size_t>(k)] * inv;
        if (c == 0) continue;
        quo[static_cast<std::size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        // keep intermediate remainders monic so coefficient growth stays tame
        y = r.monic();
    }
    return x.monic();
}

std::optional<std::size_t> vanishing_order(const Poly& p) {
    if (p.is_zero()) return std::nullopt;
    std::size_t k = 0;
    while (p[k] == 0) ++k;
    return k;
}

ParityParts parity_decompose(const Poly& p) {
    std::vector<Rat> even(p.coefficients().size()), odd(p.coefficients().size());
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) (k % 2 ? odd : even)[k] = p[k];
    return {Poly(std::move(even)), Poly(std::move(odd))};
}

std::optional<Poly> square_root(const Poly& p) {
    if (p.is_zero()) return Poly{};
    if (p.degree() % 2 != 0) return std::nullopt;
    auto lead = rational_sqrt(p.leading());
    if (!lead) return std::nullopt;
    const std::size_t m = static_cast<std::size_t>(p.degree() / 2);
    std::vector<Rat> q(m + 1);
    q[m] = *lead;
    const Rat two_lead = 2 * *lead;
    // coefficient of t^(2m-k) in q^2 fixes q[m-k]
    for (std::size_t k = 1; k <= m; ++k) {
        Rat acc = p[2 * m - k];
        for (std::size_t i = m - k + 1; i < m; ++i) {
            const std::size_t j = 2 * m - k - i;
            if (j > m - k && j < m) acc -= q[i] * q[j];
        }
        q[m - k] = acc / two_lead;
    }
    Poly root(std::move(q));
    if (root * root != p) return std::nullopt;
    return root;
}

std::string to_string(const Poly& p, char var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat& c = p[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rat mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) {
            os << mag.get_str();
            if (k > 0) os << '*';
        }
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

}  // namespace prym
