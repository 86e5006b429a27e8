#pragma once

// Exact polarization-weight sums with beta = 2^{1/4}.
//
// A sum of beta^i over an index set is a_0 + a_1 t + a_2 t^2 + a_3 t^3 with
// t = 2^{1/4}, where index i adds 2^{floor(i/4)} to a_{i mod 4}. Since
// {1, t, t^2, t^3} is linearly independent over Q, two sums are equal iff
// their coefficient vectors are, and otherwise the sign of the difference is
// settled by evaluating it on a shrinking rational interval around t.

#include "wdx/bigint.hpp"
#include "wdx/monomial.hpp"

#include <array>
#include <compare>
#include <cstdint>

namespace wdx {

class BetaSum {
public:
    BetaSum() = default;

    explicit BetaSum(const Monomial& f)
    {
        for (int i : f.indices())
            coeffs_[static_cast<std::size_t>(i % 4)] += std::int64_t{1} << (i / 4);
    }

    const std::array<std::int64_t, 4>& coefficients() const { return coeffs_; }

    /// Floating-point value, for display only.
    double approx() const
    {
        const double t = 1.189207115002721;
        return double(coeffs_[0]) + t * (double(coeffs_[1]) + t * (double(coeffs_[2]) + t * double(coeffs_[3])));
    }

    friend bool operator==(const BetaSum&, const BetaSum&) = default;
    friend std::strong_ordering operator<=>(const BetaSum& a, const BetaSum& b);

private:
    std::array<std::int64_t, 4> coeffs_{};
};

namespace detail {

inline BigInt scaled_fourth_root_two(unsigned p)
{
    // floor(2^{1/4} * 2^p) = floor((2^{4p+1})^{1/4})
    return boost::multiprecision::sqrt(boost::multiprecision::sqrt(pow2(4 * p + 1)));
}

/// Sign of d_0 + d_1 t + d_2 t^2 + d_3 t^3 at t = 2^{1/4}, d != 0.
///
/// With S = 2^p and lo = floor(S t), t lies in (lo/S, (lo+1)/S). Scaling by
/// S^3, each term d_k X^k S^{3-k} is monotone in X > 0, so the sum over the
/// interval endpoints bounds the scaled value.
inline int beta_sign(const std::array<std::int64_t, 4>& d)
{
    // Fast path: p = 32 in 128-bit arithmetic. |d_k| < 2^20 keeps every
    // term below 2^120.
    bool small = true;
    for (auto v : d)
        small = small && v > -(1 << 20) && v < (1 << 20);
    if (small) {
        static const auto lo32 = static_cast<std::uint64_t>(scaled_fourth_root_two(32));
        const __int128 lo = lo32;
        const __int128 hi = lo + 1;
        const __int128 scale = __int128{1} << 32;
        __int128 lower = 0;
        __int128 upper = 0;
        __int128 lo_pow = 1;
        __int128 hi_pow = 1;
        __int128 s_pow = scale * scale * scale;
        for (std::size_t k = 0; k < 4; ++k) {
            const __int128 a = d[k] * lo_pow * s_pow;
            const __int128 b = d[k] * hi_pow * s_pow;
            lower += a < b ? a : b;
            upper += a < b ? b : a;
            if (k < 3) {
                lo_pow *= lo;
                hi_pow *= hi;
                s_pow /= scale;
            }
        }
        if (lower > 0)
            return 1;
        if (upper < 0)
            return -1;
    }
    for (unsigned p = 64;; p *= 2) {
        const BigInt scale = pow2(p);
        const BigInt lo = scaled_fourth_root_two(p);
        const BigInt hi = lo + 1;
        BigInt lower = 0;
        BigInt upper = 0;
        BigInt lo_pow = 1;
        BigInt hi_pow = 1;
        BigInt s_pow = scale * scale * scale;
        for (std::size_t k = 0; k < 4; ++k) {
            const BigInt a = d[k] * lo_pow * s_pow;
            const BigInt b = d[k] * hi_pow * s_pow;
            lower += a < b ? a : b;
            upper += a < b ? b : a;
            lo_pow *= lo;
            hi_pow *= hi;
            if (k < 3)
                s_pow /= scale;
        }
        if (lower > 0)
            return 1;
        if (upper < 0)
            return -1;
    }
}

} // namespace detail

inline std::strong_ordering operator<=>(const BetaSum& a, const BetaSum& b)
{
    if (a.coeffs_ == b.coeffs_)
        return std::strong_ordering::equal;
    std::array<std::int64_t, 4> d{};
    for (std::size_t k = 0; k < 4; ++k)
        d[k] = a.coeffs_[k] - b.coeffs_[k];
    return detail::beta_sign(d) < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

/// f <=_beta g: sum_{i in ind f} beta^i <= sum_{i in ind g} beta^i.
inline bool beta_leq(const Monomial& f, const Monomial& g)
{
    return BetaSum(f) <= BetaSum(g);
}

/// Strict weak order used everywhere a deterministic monomial order is needed:
/// degree, then beta-sum (more reliable first), then index mask.
struct CanonicalLess {
    bool operator()(const Monomial& f, const Monomial& g) const
    {
        if (f.degree() != g.degree())
            return f.degree() < g.degree();
        if (f.mask() == g.mask())
            return false;
        const auto c = BetaSum(f) <=> BetaSum(g);
        if (c != 0)
            return c < 0;
        return f.mask() < g.mask();
    }
};

} // namespace wdx
