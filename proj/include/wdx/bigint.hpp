#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wdx {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned exponent)
{
    BigInt v = 1;
    v <<= exponent;
    return v;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace wdx
