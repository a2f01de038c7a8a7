// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace prym {

/// Lift of the involution to K_X. Positive acts as +1 on the fibers of K_X
/// over ramification points, Negative as -1.
enum class Linearization { Positive, Negative };

/// Double cover X -> Y = X/sigma ramified in 2n points (n = 0: etale).
///
/// Constructed only through make(), which enforces g_X = 2 g_Y - 1 + n >= 2
/// and etale <=> n == 0.
class CoverData {
   public:
    /// Throws InadmissibleCover.
    static CoverData make(std::int64_t g_Y, std::int64_t n);
    /// Same, with an explicit etale flag that must agree with n.
    static CoverData make(std::int64_t g_Y, std::int64_t n, bool etale);

    std::int64_t g_Y() const noexcept { return g_y_; }
    std::int64_t n() const noexcept { return n_; }
    bool etale() const noexcept { return n_ == 0; }
    /// Number of ramification points, deg R = 2n.
    std::int64_t ramification_points() const noexcept { return 2 * n_; }

    friend bool operator==(const CoverData&, const CoverData&) = default;

   private:
    CoverData(std::int64_t g_Y, std::int64_t n) : g_y_(g_Y), n_(n) {}
    std::int64_t g_y_;
    std::int64_t n_;
};

/// Hurwitz: g_X = 2 g_Y - 1 + n.
std::int64_t genus_upstairs(const CoverData& c);

/// dim H^0(X, K_X^i)_+ for the chosen lift of sigma to K_X; i >= 1.
std::int64_t h0_canonical_power_plus(const CoverData& c, std::int64_t i, Linearization lin);

/// dim H^0(X, K_X^i)_-, from the complementary summand of pi_* K_X^i.
std::int64_t h0_canonical_power_minus(const CoverData& c, std::int64_t i, Linearization lin);

/// dim H^0(X, K_X^k(-i p))_+ at a ramification point p, negative lift.
/// Defined on the window k >= 1, 0 <= i <= 2k - 2 (k = 1 forces i = 0);
/// throws OutOfValidityWindow elsewhere.
std::int64_t h0_twisted_plus(const CoverData& c, std::int64_t k, std::int64_t i);

}  // namespace prym
