#pragma once

/*
 * Small-integer helpers shared by the quadratic-form, character and
 * group-model code. Everything here works on 64-bit signed integers;
 * intermediate products go through __int128.
 */

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace cmbound {

using i64 = std::int64_t;
using i128 = __int128;

/* Floor modulus: result in [0, |m|). */
constexpr i64 mod_floor(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + (m < 0 ? -m : m) : r;
}

struct ext_gcd_result
{
    i64 g, x, y; /* g = a*x + b*y, g >= 0 */
};

constexpr ext_gcd_result ext_gcd(i64 a, i64 b)
{
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return { -old_r, -old_s, -old_t };
    return { old_r, old_s, old_t };
}

struct prime_power
{
    i64 p;
    int e;
};

/* Trial-division factorization of |n|, n != 0. Primes in increasing order. */
inline std::vector<prime_power> factor(i64 n)
{
    std::vector<prime_power> out;
    if (n < 0)
        n = -n;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({ p, e });
    }
    if (n > 1)
        out.push_back({ n, 1 });
    return out;
}

inline bool is_squarefree(i64 n)
{
    for (auto const & pp : factor(n))
        if (pp.e > 1)
            return false;
    return true;
}

/* Number of distinct prime divisors. */
inline int omega(i64 n)
{
    return static_cast<int>(factor(n).size());
}

inline i64 euler_phi(i64 n)
{
    i64 r = n < 0 ? -n : n;
    for (auto const & pp : factor(n))
        r = r / pp.p * (pp.p - 1);
    return r;
}

inline std::vector<i64> primes_up_to(i64 bound)
{
    std::vector<i64> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (i64 p = 2; p <= bound; ++p) {
        if (composite[static_cast<std::size_t>(p)])
            continue;
        out.push_back(p);
        for (i64 k = p * p; k <= bound; k += p)
            composite[static_cast<std::size_t>(k)] = true;
    }
    return out;
}

inline bool is_prime(i64 n)
{
    if (n < 2)
        return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

/* Integer square root: largest r with r*r <= n, n >= 0. */
inline i64 isqrt(i64 n)
{
    if (n < 2)
        return n;
    i64 r = static_cast<i64>(__builtin_sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

constexpr i64 lcm(i64 a, i64 b)
{
    return std::lcm(a, b);
}

} // namespace cmbound
