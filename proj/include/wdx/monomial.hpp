#pragma once

// Squarefree monomials over F_2[x_0, ..., x_{m-1}] stored as index bitmasks,
// together with the divisibility / shift / combined orders and the partition
// statistics that govern orbit sizes under the lower triangular affine group.

#include "wdx/error.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace wdx {

inline constexpr int kMaxVariables = 16;

inline void check_variable_count(int m)
{
    if (m < 1 || m > kMaxVariables)
        throw InputError("variable count m=" + std::to_string(m) + " outside [1, "
                         + std::to_string(kMaxVariables) + "]");
}

class Monomial {
public:
    Monomial() = default;

    Monomial(int m, std::uint32_t mask) : m_(m), mask_(mask)
    {
        check_variable_count(m);
        if (mask >> m)
            throw InputError("monomial mask has bits at or above m=" + std::to_string(m));
    }

    static Monomial one(int m) { return Monomial(m, 0); }

    static Monomial from_indices(int m, std::span<const int> indices)
    {
        check_variable_count(m);
        std::uint32_t mask = 0;
        for (int i : indices) {
            if (i < 0 || i >= m)
                throw InputError("variable index " + std::to_string(i) + " outside [0, "
                                 + std::to_string(m - 1) + "]");
            if (mask & (1u << i))
                throw InputError("duplicate variable index " + std::to_string(i));
            mask |= 1u << i;
        }
        return Monomial(m, mask);
    }

    static Monomial from_indices(int m, std::initializer_list<int> indices)
    {
        return from_indices(m, std::span<const int>(indices.begin(), indices.size()));
    }

    /// All-variable monomial x_0 x_1 ... x_{m-1}.
    static Monomial full(int m)
    {
        check_variable_count(m);
        return Monomial(m, (1u << m) - 1);
    }

    int m() const { return m_; }
    std::uint32_t mask() const { return mask_; }
    int degree() const { return std::popcount(mask_); }
    bool is_one() const { return mask_ == 0; }
    bool contains(int i) const { return i >= 0 && i < m_ && (mask_ >> i & 1u); }

    /// Ascending variable indices.
    std::vector<int> indices() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(degree()));
        for (std::uint32_t w = mask_; w; w &= w - 1)
            out.push_back(std::countr_zero(w));
        return out;
    }

    std::string to_string() const
    {
        if (mask_ == 0)
            return "1";
        std::string s;
        for (int i : indices())
            s += "x" + std::to_string(i);
        return s;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    int m_ = 1;
    std::uint32_t mask_ = 0;
};

namespace detail {

inline void require_same_m(const Monomial& f, const Monomial& g, const char* op)
{
    if (f.m() != g.m())
        throw InputError(std::string(op) + ": monomials over different variable counts ("
                         + std::to_string(f.m()) + " vs " + std::to_string(g.m()) + ")");
}

/// Descending variable indices.
inline std::vector<int> indices_desc(const Monomial& f)
{
    auto v = f.indices();
    std::reverse(v.begin(), v.end());
    return v;
}

} // namespace detail

inline bool divides(const Monomial& f, const Monomial& g)
{
    detail::require_same_m(f, g, "divides");
    return (f.mask() & ~g.mask()) == 0;
}

inline Monomial gcd(const Monomial& f, const Monomial& g)
{
    detail::require_same_m(f, g, "gcd");
    return Monomial(f.m(), f.mask() & g.mask());
}

/// Quotient f / g; requires g | f.
inline Monomial quotient(const Monomial& f, const Monomial& g)
{
    if (!divides(g, f))
        throw InputError("quotient: " + g.to_string() + " does not divide " + f.to_string());
    return Monomial(f.m(), f.mask() & ~g.mask());
}

inline Monomial product(const Monomial& f, const Monomial& g)
{
    detail::require_same_m(f, g, "product");
    return Monomial(f.m(), f.mask() | g.mask());
}

/// (x_0 ... x_{m-1}) / f.
inline Monomial complement(const Monomial& f)
{
    return Monomial(f.m(), Monomial::full(f.m()).mask() & ~f.mask());
}

/// Shift order on equal-degree monomials: ascending index lists compared
/// componentwise.
inline bool shift_leq(const Monomial& f, const Monomial& g)
{
    detail::require_same_m(f, g, "shift_leq");
    if (f.degree() != g.degree())
        throw InputError("shift_leq: degrees differ (" + std::to_string(f.degree()) + " vs "
                         + std::to_string(g.degree()) + ")");
    const auto a = f.indices();
    const auto b = g.indices();
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k])
            return false;
    return true;
}

/// The order f <= g: f is shift-below some divisor of g of the same degree
/// as f. Decided by matching f's indices against the top deg(f) indices of g.
inline bool leq(const Monomial& f, const Monomial& g)
{
    detail::require_same_m(f, g, "leq");
    if (f.degree() > g.degree())
        return false;
    const auto a = detail::indices_desc(f);
    const auto b = detail::indices_desc(g);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k])
            return false;
    return true;
}

inline bool comparable(const Monomial& f, const Monomial& g) { return leq(f, g) || leq(g, f); }

/// Non-increasing sequence of nonnegative integers.
struct Partition {
    std::vector<int> parts;

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    std::size_t length() const { return parts.size(); }

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Number of free lower variables for x_i relative to f: |{j < i : j not in ind(f)}|.
inline int free_below(const Monomial& f, int i)
{
    const std::uint32_t below = i >= 32 ? ~0u : (1u << i) - 1;
    return std::popcount(below & ~f.mask());
}

/// |lambda_f|; 0 for the constant monomial.
inline int lambda_size(const Monomial& f)
{
    int total = 0;
    int k = 0;
    for (int i : f.indices())
        total += i - k++;
    return total;
}

inline Partition lambda_partition(const Monomial& f)
{
    if (f.is_one())
        throw InputError("lambda_partition: constant monomial has no partition");
    const auto desc = detail::indices_desc(f);
    const int s = f.degree();
    Partition p;
    p.parts.reserve(desc.size());
    for (int k = 0; k < s; ++k)
        p.parts.push_back(desc[static_cast<std::size_t>(k)] - (s - 1 - k));
    return p;
}

/// lambda_f(g) for g | f: the free-variable counts of f restricted to ind(g).
inline Partition lambda_restricted(const Monomial& f, const Monomial& g)
{
    if (!divides(g, f))
        throw InputError("lambda_restricted: " + g.to_string() + " does not divide " + f.to_string());
    Partition p;
    for (int i : g.indices())
        p.parts.push_back(free_below(f, i));
    std::sort(p.parts.begin(), p.parts.end(), std::greater<>());
    return p;
}

inline int lambda_restricted_size(const Monomial& f, const Monomial& g)
{
    return lambda_restricted(f, g).size();
}

/// Collision exponent between two coprime degree-2 orbits.
/// 2 when incomparable; otherwise with the larger monomial (i1 < i2) and the
/// smaller one (j1 < j2): 1 if j2 > i1, else 0.
inline int alpha(const Monomial& f, const Monomial& g)
{
    detail::require_same_m(f, g, "alpha");
    if (f.degree() != 2 || g.degree() != 2)
        throw InputError("alpha: both monomials must have degree 2 (got " + f.to_string() + ", "
                         + g.to_string() + ")");
    if (f.mask() & g.mask())
        throw InputError("alpha: monomials " + f.to_string() + " and " + g.to_string()
                         + " are not coprime");
    const Monomial* larger = nullptr;
    const Monomial* smaller = nullptr;
    if (shift_leq(g, f)) {
        larger = &f;
        smaller = &g;
    } else if (shift_leq(f, g)) {
        larger = &g;
        smaller = &f;
    } else {
        return 2;
    }
    const int i1 = larger->indices()[0];
    const int j2 = smaller->indices()[1];
    return j2 > i1 ? 1 : 0;
}

/// Row i of the Kronecker power generator corresponds to x^{bin(2^m - 1 - i)}.
inline Monomial row_monomial(int m, std::uint32_t row)
{
    check_variable_count(m);
    const std::uint32_t n = 1u << m;
    if (row >= n)
        throw InputError("row index " + std::to_string(row) + " outside [0, " + std::to_string(n - 1)
                         + "]");
    return Monomial(m, (n - 1) ^ row);
}

inline std::uint32_t row_index(const Monomial& f)
{
    return ((1u << f.m()) - 1) ^ f.mask();
}

/// Monomials of exactly one degree, or all of them, in mask order.
inline std::vector<Monomial> all_monomials(int m)
{
    check_variable_count(m);
    std::vector<Monomial> out;
    out.reserve(std::size_t{1} << m);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
        out.emplace_back(m, mask);
    return out;
}

inline std::vector<Monomial> monomials_of_degree(int m, int degree)
{
    std::vector<Monomial> out;
    for (const auto& f : all_monomials(m))
        if (f.degree() == degree)
            out.push_back(f);
    return out;
}

} // namespace wdx

template <>
struct std::hash<wdx::Monomial> {
    std::size_t operator()(const wdx::Monomial& f) const noexcept
    {
        return std::hash<std::uint64_t>{}((std::uint64_t(f.m()) << 32) | f.mask());
    }
};
