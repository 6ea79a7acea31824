#pragma once

#include "arith.hpp"

namespace cmbound {

/*
 * Kronecker symbol (a/n), extending Jacobi to all integers n:
 *   (a/0) = 1 if |a| = 1 else 0,
 *   (a/-1) = -1 if a < 0 else 1,
 *   (a/2) = 0 for a even, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
 */
inline int kronecker(i64 a, i64 n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    if ((a % 2 == 0) && (n % 2 == 0))
        return 0;

    int k = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            k = -1;
    }
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v % 2 == 1) {
        i64 r8 = mod_floor(a, 8);
        if (r8 == 3 || r8 == 5)
            k = -k;
    }

    /* now n odd positive: Jacobi (a/n) */
    a = mod_floor(a, n);
    while (a != 0) {
        int t = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++t;
        }
        if (t % 2 == 1) {
            i64 r8 = n % 8;
            if (r8 == 3 || r8 == 5)
                k = -k;
        }
        if (a % 4 == 3 && n % 4 == 3)
            k = -k;
        i64 r = n % a;
        n = a;
        a = r;
    }
    return n == 1 ? k : 0;
}

} // namespace cmbound
