// SPDX-License-Identifier: Apache-2.0
#include "prym/bipoly.hpp"

#include <sstream>

namespace prym {

namespace {
const Poly kZeroPoly{};
}

BiPoly::BiPoly(std::vector<Poly> x_coefficients) : c_(std::move(x_coefficients)) { trim(); }

BiPoly BiPoly::from_x_poly(const Poly& p) {
    std::vector<Poly> v;
    v.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) v.push_back(Poly::constant(c));
    return BiPoly(std::move(v));
}

BiPoly BiPoly::from_t_poly(const Poly& p) { return BiPoly(std::vector<Poly>{p}); }

BiPoly BiPoly::monomial(const Poly& c, std::size_t k) {
    if (c.is_zero()) return {};
    std::vector<Poly> v(k + 1);
    v[k] = c;
    return BiPoly(std::move(v));
}

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::degree_t() const noexcept {
    int d = Poly::kZeroDegree;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
}

const Poly& BiPoly::operator[](std::size_t k) const noexcept { return k < c_.size() ? c_[k] : kZeroPoly; }

const Poly& BiPoly::leading() const noexcept { return c_.empty() ? kZeroPoly : c_.back(); }

bool BiPoly::is_monic() const noexcept { return !c_.empty() && c_.back() == Poly::constant(1); }

Poly BiPoly::at_t_zero() const {
    std::vector<Rat> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c[0]);
    return Poly(std::move(v));
}

Poly BiPoly::at_t(const Rat& t0) const {
    std::vector<Rat> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c(t0));
    return Poly(std::move(v));
}

Poly BiPoly::at_x(const Rat& x0) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

BiPoly BiPoly::d_dx() const {
    if (c_.size() <= 1) return {};
    std::vector<Poly> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return BiPoly(std::move(v));
}

BiPoly BiPoly::d_dt() const {
    std::vector<Poly> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c.derivative());
    return BiPoly(std::move(v));
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Poly> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return BiPoly(std::move(out));
}

std::optional<BiPoly> square_root(const BiPoly& p) {
    if (p.is_zero()) return BiPoly{};
    if (p.degree_x() % 2 != 0) return std::nullopt;
    auto lead = square_root(p.leading());
    if (!lead) return std::nullopt;
    const std::size_t m = static_cast<std::size_t>(p.degree_x() / 2);
    std::vector<Poly> q(m + 1);
    q[m] = *lead;
    const Poly two_lead = *lead * Rat(2);
    for (std::size_t k = 1; k <= m; ++k) {
        Poly acc = p[2 * m - k];
        for (std::size_t i = m - k + 1; i < m; ++i) acc -= q[i] * q[2 * m - k - i];
        auto [quo, rem] = divmod(acc, two_lead);
        if (!rem.is_zero()) return std::nullopt;
        q[m - k] = std::move(quo);
    }
    BiPoly root(std::move(q));
    if (root * root != p) return std::nullopt;
    return root;
}

std::string to_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree_x(); k >= 0; --k) {
        const Poly& c = p[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = c == Poly::constant(1);
        if (!unit || k == 0) os << '(' << to_string(c, 't') << ')';
        if (k >= 1) os << (unit ? "" : "*") << 'x';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

}  // namespace prym
