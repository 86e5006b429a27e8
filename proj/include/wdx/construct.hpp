#pragma once

// Code constructions and the orders that drive them: Reed-Muller, polar via
// beta-expansion reliability, RMxPolar, and subcodes of R(2,m) chosen level
// by level of the minimum-weight contribution |lambda_f|.

#include "wdx/weight_enum.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace wdx {

/// Degree-2 monomials with |lambda_f| = level.
struct PosetLevel {
    int level = 0;
    std::vector<Monomial> members;
};

/// f strictly below g in minimum-weight contribution: |lambda_f| < |lambda_g|.
/// Only defined inside one degree layer.
inline bool wmin_leq(const Monomial& f, const Monomial& g)
{
    detail::require_same_m(f, g, "wmin_leq");
    if (f.degree() != g.degree())
        throw InputError("wmin_leq: monomials of different degree (" + f.to_string() + ", " + g.to_string()
                         + ") are not compared");
    return lambda_size(f) < lambda_size(g);
}

inline std::vector<PosetLevel> poset_levels(int m)
{
    check_variable_count(m);
    if (m < 3)
        throw InputError("poset_levels: m must be at least 3");
    std::vector<PosetLevel> levels(static_cast<std::size_t>(2 * (m - 2) + 1));
    for (std::size_t l = 0; l < levels.size(); ++l)
        levels[l].level = static_cast<int>(l);
    for (const auto& f : monomials_of_degree(m, 2))
        levels[static_cast<std::size_t>(lambda_size(f))].members.push_back(f);
    for (auto& l : levels)
        std::sort(l.members.begin(), l.members.end(), CanonicalLess{});
    return levels;
}

/// Degree-2 monomials ascending by |lambda_f|, ties broken by beta-sum.
inline std::vector<Monomial> blended_order(int m)
{
    std::vector<Monomial> out;
    for (const auto& level : poset_levels(m))
        out.insert(out.end(), level.members.begin(), level.members.end());
    return out;
}

inline CodeSpec construct_rm(int r, int m)
{
    check_variable_count(m);
    if (r < 0 || r > m)
        throw InputError("construct_rm: r=" + std::to_string(r) + " outside [0, " + std::to_string(m) + "]");
    return CodeSpec(monomials_up_to_degree(m, r));
}

namespace detail {

inline void check_dimension(int m, long long k, const char* op)
{
    check_variable_count(m);
    if (k < 0 || k > (1LL << m))
        throw InputError(std::string(op) + ": K=" + std::to_string(k) + " outside [0, 2^"
                         + std::to_string(m) + "]");
}

inline std::vector<Monomial> by_reliability(std::vector<Monomial> v)
{
    std::sort(v.begin(), v.end(), [](const Monomial& a, const Monomial& b) {
        const auto c = BetaSum(a) <=> BetaSum(b);
        return c != 0 ? c < 0 : a.mask() < b.mask();
    });
    return v;
}

} // namespace detail

/// Monomials ordered from most to least reliable: ascending beta-sum.
inline std::vector<Monomial> reliability_order(int m)
{
    return detail::by_reliability(all_monomials(m));
}

/// The K most reliable monomials.
inline CodeSpec construct_polar(int m, long long k)
{
    detail::check_dimension(m, k, "construct_polar");
    auto order = reliability_order(m);
    order.resize(static_cast<std::size_t>(k));
    return CodeSpec(MonomialSet(m, order));
}

inline long long rm_dimension(int m, int r)
{
    long long total = 0;
    for (int j = 0; j <= r; ++j)
        total += static_cast<long long>(binomial(static_cast<unsigned>(m), static_cast<unsigned>(j)));
    return total;
}

/// All monomials of degree <= r' (largest r' with dim R(r',m) <= K) plus the
/// K - K' most reliable monomials of degree r' + 1.
inline CodeSpec construct_rmxpolar(int m, long long k)
{
    detail::check_dimension(m, k, "construct_rmxpolar");
    int r = -1;
    while (r < m && rm_dimension(m, r + 1) <= k)
        ++r;
    std::vector<Monomial> members = r >= 0 ? monomials_up_to_degree(m, r).members() : std::vector<Monomial>{};
    const long long rest = k - static_cast<long long>(members.size());
    if (rest > 0) {
        auto next = detail::by_reliability(monomials_of_degree(m, r + 1));
        members.insert(members.end(), next.begin(), next.begin() + rest);
    }
    return CodeSpec(MonomialSet(m, members));
}

/// R(1,m) plus the first K - 1 - m monomials of the blended order.
inline CodeSpec construct_wmin_beta(int m, long long k)
{
    check_variable_count(m);
    if (m < 3)
        throw InputError("construct_wmin_beta: m must be at least 3");
    const long long lo = 1 + m;
    const long long hi = 1 + m + static_cast<long long>(m) * (m - 1) / 2;
    if (k < lo || k > hi)
        throw InputError("construct_wmin_beta: K=" + std::to_string(k) + " outside [" + std::to_string(lo)
                         + ", " + std::to_string(hi) + "]");
    auto members = monomials_up_to_degree(m, 1).members();
    const auto order = blended_order(m);
    members.insert(members.end(), order.begin(), order.begin() + (k - lo));
    return CodeSpec(MonomialSet(m, members));
}

/// Exact count at weight w when it is certified: the complete distribution for
/// codes between R(1,m) and R(2,m), otherwise weights below 2 w_min whose
/// spectrum entry is exact (weights not of the form w_mu hold no codewords).
inline std::optional<BigInt> certified_count(const MonomialSet& set, std::size_t w)
{
    const int m = set.m();
    const int r = set.max_degree();
    bool sandwich = r <= 2 && set.contains(Monomial::one(m));
    for (int i = 0; sandwich && i < m; ++i)
        sandwich = set.contains(Monomial(m, 1u << i));
    if (sandwich)
        return complete_wd_rm2_subcode(set).count(w);
    if (w == 0)
        return BigInt(1);
    if (r < 0)
        return BigInt(0);
    const std::size_t wmin = std::size_t{1} << (m - r);
    if (w < wmin)
        return BigInt(0);
    if (w >= 2 * wmin)
        return std::nullopt;
    for (const auto& e : low_weight_spectrum(set))
        if (e.weight == w)
            return e.exact ? std::optional<BigInt>(e.count) : std::nullopt;
    return BigInt(0);
}

/// C(I) <=_w C(J) on [w_lo, w_hi]: |W_w(J)| <= |W_w(I)| for every w in range.
inline bool code_leq_w(const MonomialSet& i_set, const MonomialSet& j_set, std::size_t w_lo, std::size_t w_hi)
{
    if (i_set.m() != j_set.m())
        throw InputError("code_leq_w: codes of different lengths");
    if (w_lo > w_hi)
        throw InputError("code_leq_w: empty weight range");
    detail::require_decreasing(i_set, "code_leq_w");
    detail::require_decreasing(j_set, "code_leq_w");
    bool result = true;
    for (std::size_t w = w_lo; w <= w_hi; ++w) {
        const auto ci = certified_count(i_set, w);
        const auto cj = certified_count(j_set, w);
        if (!ci || !cj)
            throw InputError("code_leq_w: count at weight " + std::to_string(w) + " cannot be certified");
        if (*cj > *ci)
            result = false;
    }
    return result;
}

} // namespace wdx
