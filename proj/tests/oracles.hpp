#pragma once

// Slow, definition-level reference implementations. They share no code with
// the library beyond the Monomial value type.

#include "wdx/monomial.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using wdx::Monomial;

inline std::vector<int> ascending(std::uint32_t mask, int m)
{
    std::vector<int> out;
    for (int i = 0; i < m; ++i)
        if (mask >> i & 1u)
            out.push_back(i);
    return out;
}

/// Equal-degree shift order on ascending index lists.
inline bool shift_leq(std::uint32_t f, std::uint32_t g, int m)
{
    const auto a = ascending(f, m), b = ascending(g, m);
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

/// f below g iff some divisor g* of g with deg g* = deg f dominates f in the shift order.
inline bool leq(std::uint32_t f, std::uint32_t g, int m)
{
    for (std::uint32_t sub = g;; sub = (sub - 1) & g) {
        if (std::popcount(sub) == std::popcount(f) && shift_leq(f, sub, m))
            return true;
        if (sub == 0)
            return false;
    }
}

/// Every monomial below some generator.
inline std::vector<std::uint32_t> closure(int m, const std::vector<std::uint32_t>& gens)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t f = 0; f < (1u << m); ++f)
        for (auto g : gens)
            if (leq(f, g, m)) {
                out.push_back(f);
                break;
            }
    return out;
}

inline int lambda_size(std::uint32_t f, int m)
{
    int total = 0;
    for (int i = 0; i < m; ++i)
        if (f >> i & 1u)
            for (int j = 0; j < i; ++j)
                total += !(f >> j & 1u);
    return total;
}

/// Rows of [[1,0],[1,1]]^{(x) m}, built by repeated Kronecker products.
inline std::vector<std::vector<int>> kronecker_power(int m)
{
    std::vector<std::vector<int>> g{{1}};
    for (int step = 0; step < m; ++step) {
        const std::size_t n = g.size();
        std::vector<std::vector<int>> next(2 * n, std::vector<int>(2 * n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                next[i][j] = g[i][j];
                next[n + i][j] = g[i][j];
                next[n + i][n + j] = g[i][j];
            }
        g = std::move(next);
    }
    return g;
}

/// Point j as the bit vector of j; monomial value is the product of its variables there.
inline std::vector<int> evaluate(std::uint32_t f, int m)
{
    std::vector<int> out(std::size_t{1} << m);
    for (std::size_t j = 0; j < out.size(); ++j) {
        int v = 1;
        for (int i = 0; i < m; ++i)
            if (f >> i & 1u)
                v &= ((~j) >> i) & 1u;
        out[j] = v;
    }
    return out;
}

/// Weight histogram over every message, each codeword summed from scratch.
inline std::map<std::size_t, std::uint64_t> weight_distribution(int m, const std::vector<std::uint32_t>& set)
{
    std::vector<std::vector<int>> rows;
    for (auto f : set)
        rows.push_back(evaluate(f, m));
    const std::size_t n = std::size_t{1} << m;
    std::map<std::size_t, std::uint64_t> hist;
    for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << rows.size()); ++msg) {
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) {
            int bit = 0;
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (msg >> r & 1u)
                    bit ^= rows[r][j];
            w += static_cast<std::size_t>(bit);
        }
        ++hist[w];
    }
    return hist;
}

using Float = boost::multiprecision::cpp_bin_float_100;

inline Float beta_value(std::uint32_t f, int m)
{
    const Float beta = boost::multiprecision::pow(Float(2), Float(0.25));
    Float total = 0;
    for (int i = 0; i < m; ++i)
        if (f >> i & 1u)
            total += boost::multiprecision::pow(beta, i);
    return total;
}

} // namespace oracle
