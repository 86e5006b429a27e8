#pragma once

// Closed-form enumeration of low-weight codewords of decreasing monomial
// codes, the complete distribution of codes between R(1,m) and R(2,m), dual
// information sets and the MacWilliams transform.

#include "wdx/codeword.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wdx {

/// mu monomials of the top layer I_r sharing the pairwise gcd h, deg(h) = r - 2.
struct TypeIITuple {
    Monomial h;
    std::vector<Monomial> factors;

    std::vector<Monomial> quotients() const
    {
        std::vector<Monomial> q;
        q.reserve(factors.size());
        for (const auto& f : factors)
            q.push_back(quotient(f, h));
        return q;
    }

    friend bool operator==(const TypeIITuple&, const TypeIITuple&) = default;
};

struct SpectrumEntry {
    std::size_t weight = 0;
    BigInt count;
    /// false when Type I codewords may also have this weight and are not counted.
    bool exact = true;
    int mu = 1;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

namespace detail {

inline void require_decreasing(const MonomialSet& set, const char* op)
{
    if (!is_decreasing(set))
        throw InputError(std::string(op) + ": " + decreasing_diagnostic(set));
}

/// Calls visit(clique) for every mu-clique of the graph given by adjacency
/// bitsets (vertex count <= 64). Vertices are explored in descending degree
/// order and each clique is reported once as an increasing vertex list of
/// that order.
inline void for_each_clique(const std::vector<std::uint64_t>& adjacency, int mu,
                            const std::function<void(const std::vector<int>&)>& visit)
{
    const int n = static_cast<int>(adjacency.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(adjacency[static_cast<std::size_t>(a)])
               > std::popcount(adjacency[static_cast<std::size_t>(b)]);
    });
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    // later[v]: neighbours of v that come after v in the exploration order.
    std::vector<std::uint64_t> later(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (std::uint64_t w = adjacency[static_cast<std::size_t>(v)]; w; w &= w - 1) {
            const int u = std::countr_zero(w);
            if (rank[static_cast<std::size_t>(u)] > rank[static_cast<std::size_t>(v)])
                later[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        }

    std::vector<int> clique;
    std::function<void(std::uint64_t)> extend = [&](std::uint64_t candidates) {
        if (static_cast<int>(clique.size()) == mu) {
            visit(clique);
            return;
        }
        const int needed = mu - static_cast<int>(clique.size());
        if (std::popcount(candidates) < needed)
            return;
        for (std::uint64_t c = candidates; c; c &= c - 1) {
            const int v = std::countr_zero(c);
            clique.push_back(v);
            extend(candidates & later[static_cast<std::size_t>(v)]);
            clique.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        clique.assign(1, v);
        if (mu == 1)
            visit(clique);
        else
            extend(later[static_cast<std::size_t>(v)]);
    }
}

inline void check_mu(int m, int r, int mu)
{
    if (mu < 1 || 2 * mu > m - r + 2)
        throw InputError("mu=" + std::to_string(mu) + " outside the admissible range 2 <= 2mu <= m-r+2 = "
                         + std::to_string(m - r + 2));
}

/// 2^exponent, rejecting negative exponents (a non-integer orbit count).
inline BigInt exact_power_of_two(int exponent, const std::string& context)
{
    if (exponent < 0)
        throw ConsistencyError("non-integer term 2^" + std::to_string(exponent) + " in " + context);
    return pow2(static_cast<unsigned>(exponent));
}

} // namespace detail

/// Number of minimum-weight codewords: sum over f in I_r of 2^{r + |lambda_f|}.
inline BigInt count_min_weight(const MonomialSet& set)
{
    detail::require_decreasing(set, "count_min_weight");
    const int r = set.max_degree();
    if (r < 0)
        throw InputError("count_min_weight: empty monomial set");
    BigInt total = 0;
    for (const auto& f : set.layer(r))
        total += pow2(static_cast<unsigned>(r + lambda_size(f)));
    return total;
}

/// Every unordered mu-subset of I_r whose pairwise gcds all equal one h of degree r - 2.
inline std::vector<TypeIITuple> enumerate_type_ii_tuples(const MonomialSet& set, int mu)
{
    detail::require_decreasing(set, "enumerate_type_ii_tuples");
    const int m = set.m();
    const int r = set.max_degree();
    if (mu < 2)
        throw InputError("enumerate_type_ii_tuples: mu must be at least 2, got " + std::to_string(mu));
    detail::check_mu(m, r, mu);
    std::vector<TypeIITuple> out;
    if (r < 2)
        return out;
    const auto top = set.layer(r);
    for (const auto& h : set.layer(r - 2)) {
        std::vector<Monomial> candidates;
        for (const auto& f : top)
            if (divides(h, f))
                candidates.push_back(f);
        if (static_cast<int>(candidates.size()) < mu)
            continue;
        if (candidates.size() > 64)
            throw ResourceError("enumerate_type_ii_tuples: more than 64 top-degree multiples of "
                                + h.to_string());
        std::vector<std::uint64_t> adjacency(candidates.size(), 0);
        for (std::size_t a = 0; a < candidates.size(); ++a)
            for (std::size_t b = 0; b < candidates.size(); ++b)
                if (a != b && (candidates[a].mask() & candidates[b].mask()) == h.mask())
                    adjacency[a] |= std::uint64_t{1} << b;
        std::vector<TypeIITuple> local;
        detail::for_each_clique(adjacency, mu, [&](const std::vector<int>& clique) {
            TypeIITuple t{h, {}};
            for (int v : clique)
                t.factors.push_back(candidates[static_cast<std::size_t>(v)]);
            std::sort(t.factors.begin(), t.factors.end(), CanonicalLess{});
            local.push_back(std::move(t));
        });
        std::sort(local.begin(), local.end(), [](const TypeIITuple& a, const TypeIITuple& b) {
            return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(),
                                                b.factors.end(), CanonicalLess{});
        });
        out.insert(out.end(), local.begin(), local.end());
    }
    return out;
}

/// log2 of the number of Type II codewords carried by one tuple.
inline int type_ii_exponent(const TypeIITuple& t, int r)
{
    const int mu = static_cast<int>(t.factors.size());
    const auto q = t.quotients();
    int e = r - 2 + 2 * mu + lambda_size(t.h);
    for (std::size_t i = 0; i < t.factors.size(); ++i)
        e += lambda_restricted_size(t.factors[i], q[i]);
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            e -= alpha(q[i], q[j]);
    return e;
}

/// Number of Type II codewords of weight 2^{m+1-r} - 2^{m+1-r-mu}.
inline BigInt count_type_ii(const MonomialSet& set, int mu)
{
    const int r = set.max_degree();
    BigInt total = 0;
    for (const auto& t : enumerate_type_ii_tuples(set, mu))
        total += detail::exact_power_of_two(type_ii_exponent(t, r), "Type II count");
    return total;
}

inline std::size_t type_ii_weight(int m, int r, int mu)
{
    return (std::size_t{1} << (m + 1 - r)) - (std::size_t{1} << (m + 1 - r - mu));
}

/// Counts at w_min and at every admissible w_mu below 2 w_min.
inline std::vector<SpectrumEntry> low_weight_spectrum(const MonomialSet& set)
{
    detail::require_decreasing(set, "low_weight_spectrum");
    std::vector<SpectrumEntry> out;
    const int m = set.m();
    const int r = set.max_degree();
    if (r < 0)
        return out;
    out.push_back({std::size_t{1} << (m - r), count_min_weight(set), true, 1});
    if (r < 2)
        return out;
    for (int mu = 2; 2 * mu <= m - r + 2; ++mu) {
        const bool type_i_possible = mu >= 3 && mu <= r && m >= r + mu;
        out.push_back({type_ii_weight(m, r, mu), count_type_ii(set, mu), !type_i_possible, mu});
    }
    return out;
}

namespace detail {

inline void require_rm2_sandwich(const MonomialSet& set, const char* op)
{
    require_decreasing(set, op);
    const int m = set.m();
    if (!set.contains(Monomial::one(m)))
        throw InputError(std::string(op) + ": code does not contain R(1,m): missing monomial 1");
    for (int i = 0; i < m; ++i)
        if (!set.contains(Monomial(m, 1u << i)))
            throw InputError(std::string(op) + ": code does not contain R(1,m): missing monomial x"
                             + std::to_string(i));
    for (const auto& f : set)
        if (f.degree() > 2)
            throw InputError(std::string(op) + ": code is not inside R(2,m): monomial " + f.to_string()
                             + " has degree " + std::to_string(f.degree()));
}

} // namespace detail

/// Complete distribution of a code with R(1,m) <= C(I) <= R(2,m). The weight
/// 2^{m-1} count is 2^K minus twice the mass strictly below 2^{m-1}, using the
/// symmetry count(w) = count(2^m - w).
inline WeightDistribution complete_wd_rm2_subcode(const MonomialSet& set)
{
    detail::require_rm2_sandwich(set, "complete_wd_rm2_subcode");
    const int m = set.m();
    const std::size_t n = std::size_t{1} << m;
    const std::size_t k = set.size();
    WeightDistribution wd(n, k, true);
    wd.set(0, 1);
    wd.set(n, 1);
    BigInt below = 0;
    if (set.max_degree() == 2) {
        for (int mu = 1; 2 * mu <= m; ++mu) {
            const BigInt c = mu == 1 ? count_min_weight(set) : count_type_ii(set, mu);
            const std::size_t offset = std::size_t{1} << (m - 1 - mu);
            wd.add(n / 2 - offset, c);
            wd.add(n / 2 + offset, c);
            below += c;
        }
    }
    const BigInt middle = pow2(static_cast<unsigned>(k)) - 2 - 2 * below;
    if (middle < 0)
        throw ConsistencyError("complete_wd_rm2_subcode: negative count at weight 2^{m-1}");
    wd.add(n / 2, middle);
    return wd;
}

struct TwoWminCounts {
    BigInt orbit_formula;
    BigInt by_symmetry;
};

/// Weight 2^{m-1} count from the orbit sum over (x_j, f_1..f_l), pairwise
/// coprime, next to the symmetry-derived count. Each tuple contributes
///   2^{2l + sum |lambda_{f_i}| - sum alpha} * 2^{1 + free(x_j)}
/// where free(x_j) counts variables below j not used by any f_i.
inline TwoWminCounts count_2wmin_orbit_formula(const MonomialSet& set)
{
    detail::require_rm2_sandwich(set, "count_2wmin_orbit_formula");
    const int m = set.m();
    const auto top = set.max_degree() == 2 ? set.layer(2) : std::vector<Monomial>{};
    BigInt total = 0;

    std::vector<Monomial> chosen;
    std::function<void(std::size_t, std::uint32_t, int)> walk = [&](std::size_t start, std::uint32_t used,
                                                                     int exponent) {
        for (int j = 0; j < m; ++j) {
            if (used >> j & 1u)
                continue;
            const int free = std::popcount(((1u << j) - 1) & ~used);
            total += detail::exact_power_of_two(exponent + 1 + free, "2w_min orbit term");
        }
        for (std::size_t a = start; a < top.size(); ++a) {
            const auto& f = top[a];
            if (f.mask() & used)
                continue;
            int e = exponent + 2 + lambda_size(f);
            for (const auto& g : chosen)
                e -= alpha(f, g);
            chosen.push_back(f);
            walk(a + 1, used | f.mask(), e);
            chosen.pop_back();
        }
    };
    walk(0, 0, 0);
    return {total, complete_wd_rm2_subcode(set).count(std::size_t{1} << (m - 1))};
}

/// M_m minus the complements of I: the information set of the dual code.
inline MonomialSet dual_set(const MonomialSet& set)
{
    detail::require_decreasing(set, "dual_set");
    const int m = set.m();
    std::vector<Monomial> out;
    for (const auto& f : all_monomials(m))
        if (!set.contains(complement(f)))
            out.push_back(f);
    return MonomialSet(m, out);
}

/// Dual distribution B_j = 2^{-K} sum_i A_i K_j(i) with Krawtchouk
/// polynomials K_j(i) = sum_s (-1)^s C(i,s) C(n-i, j-s), in exact integers.
inline WeightDistribution macwilliams_dual_wd(const WeightDistribution& wd)
{
    if (!wd.complete())
        throw InputError("macwilliams_dual_wd: distribution is not flagged complete");
    if (wd.total() != pow2(static_cast<unsigned>(wd.k())))
        throw InputError("macwilliams_dual_wd: counts sum to " + wd.total().str() + ", not 2^"
                         + std::to_string(wd.k()));
    const std::size_t n = wd.n();
    if (wd.k() > n)
        throw InputError("macwilliams_dual_wd: dimension exceeds length");

    std::vector<std::vector<BigInt>> binom(n + 1);
    for (std::size_t a = 0; a <= n; ++a) {
        binom[a].resize(a + 1);
        binom[a][0] = binom[a][a] = 1;
        for (std::size_t b = 1; b < a; ++b)
            binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
    }
    auto c = [&](std::size_t a, std::size_t b) -> const BigInt& {
        static const BigInt zero = 0;
        return b > a ? zero : binom[a][b];
    };

    const BigInt size = pow2(static_cast<unsigned>(wd.k()));
    WeightDistribution dual(n, n - wd.k(), true);
    for (std::size_t j = 0; j <= n; ++j) {
        BigInt acc = 0;
        for (const auto& [i, a] : wd.counts()) {
            BigInt kraw = 0;
            for (std::size_t s = 0; s <= std::min(i, j); ++s) {
                if (j - s > n - i)
                    continue;
                const BigInt term = c(i, s) * c(n - i, j - s);
                if (s & 1u)
                    kraw -= term;
                else
                    kraw += term;
            }
            acc += a * kraw;
        }
        if (acc % size != 0)
            throw ConsistencyError("macwilliams_dual_wd: coefficient at weight " + std::to_string(j)
                                   + " is not divisible by 2^K");
        dual.set(j, acc / size);
    }
    return dual;
}

} // namespace wdx
