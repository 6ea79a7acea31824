#pragma once

// Independent reference computations used by the tests. None of these call
// into the library routines they are compared against.

#include <mpfr.h>

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline i64 powmod(i64 b, i64 e, i64 m)
{
    __int128 r = 1, x = ((b % m) + m) % m;
    while (e > 0) {
        if (e & 1)
            r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<i64>(r);
}

/* Legendre symbol by Euler's criterion, p an odd prime. */
inline int legendre(i64 a, i64 p)
{
    i64 r = powmod(a, (p - 1) / 2, p);
    return r == 0 ? 0 : r == 1 ? 1 : -1;
}

/* Kronecker symbol from the definition: factor n, multiply local symbols. */
inline int kronecker(i64 a, i64 n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    int s = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            s = -s;
    }
    for (i64 p = 2; p * p <= n || n > 1; ++p) {
        if (p * p > n)
            p = n;
        while (n % p == 0) {
            n /= p;
            int t;
            if (p == 2) {
                if (a % 2 == 0)
                    t = 0;
                else {
                    i64 m = ((a % 8) + 8) % 8;
                    t = (m == 1 || m == 7) ? 1 : -1;
                }
            } else {
                t = legendre(a, p);
            }
            s *= t;
        }
    }
    return s;
}

inline bool is_fundamental(i64 d)
{
    if (d >= 0)
        return false;
    auto squarefree = [](i64 m) {
        m = m < 0 ? -m : m;
        for (i64 p = 2; p * p <= m; ++p)
            if (m % (p * p) == 0)
                return false;
        return true;
    };
    i64 r = ((d % 4) + 4) % 4;
    if (r == 1)
        return squarefree(d);
    if (r != 0)
        return false;
    i64 m = d / 4;
    i64 r4 = ((m % 4) + 4) % 4;
    return (r4 == 2 || r4 == 3) && squarefree(m);
}

/*
 * Exact class number of a negative fundamental discriminant:
 * h = -(w / (2|D|)) sum_{a=1}^{|D|-1} chi(a) a.
 */
inline i64 class_number_exact(i64 d)
{
    i64 q = -d;
    i64 s = 0;
    for (i64 a = 1; a < q; ++a)
        s += kronecker(d, a) * a;
    i64 w = d == -3 ? 6 : d == -4 ? 4 : 2;
    return -(w * s) / (2 * q);
}

/* Number of SL2(Z)-reduced forms counted by a plain triple loop. */
inline i64 reduced_form_count(i64 d)
{
    i64 n = 0;
    for (i64 a = 1; 3 * a * a <= -d; ++a)
        for (i64 b = -a + 1; b <= a; ++b) {
            i64 num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            i64 c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            i64 g = std::gcd(std::gcd(a, b < 0 ? -b : b), c);
            if (g == 1)
                ++n;
        }
    return n;
}

/*
 * sum_n chi(n)/n for chi periodic mod q (chi[0] = chi(q)). Partial sums
 * oscillate with period q; their mean over the last period converges like
 * 1/N^2 instead of 1/N.
 */
inline double l_series(std::vector<int> const & chi, i64 periods)
{
    i64 q = static_cast<i64>(chi.size());
    long double s = 0, mean = 0;
    for (i64 n = 1; n <= periods * q; ++n) {
        s += static_cast<long double>(chi[n % q]) / static_cast<long double>(n);
        if (n > (periods - 1) * q)
            mean += s;
    }
    return static_cast<double>(mean / static_cast<long double>(q));
}

/* Minimal MPFR value and complex pair for the j oracle below. */
class Mp
{
  public:
    mpfr_t v;
    explicit Mp(mpfr_prec_t p) { mpfr_init2(v, p); mpfr_set_ui(v, 0, MPFR_RNDN); }
    Mp(Mp const & o) { mpfr_init2(v, mpfr_get_prec(o.v)); mpfr_set(v, o.v, MPFR_RNDN); }
    Mp & operator=(Mp const & o) { mpfr_set(v, o.v, MPFR_RNDN); return *this; }
    ~Mp() { mpfr_clear(v); }
};

struct Cx
{
    Mp re, im;
    explicit Cx(mpfr_prec_t p) : re(p), im(p) {}
};

inline void cx_mul(Cx & r, Cx const & a, Cx const & b, mpfr_prec_t p)
{
    Mp t1(p), t2(p), t3(p), t4(p);
    mpfr_mul(t1.v, a.re.v, b.re.v, MPFR_RNDN);
    mpfr_mul(t2.v, a.im.v, b.im.v, MPFR_RNDN);
    mpfr_mul(t3.v, a.re.v, b.im.v, MPFR_RNDN);
    mpfr_mul(t4.v, a.im.v, b.re.v, MPFR_RNDN);
    mpfr_sub(r.re.v, t1.v, t2.v, MPFR_RNDN);
    mpfr_add(r.im.v, t3.v, t4.v, MPFR_RNDN);
}

inline void cx_div(Cx & r, Cx const & a, Cx const & b, mpfr_prec_t p)
{
    Mp den(p), t1(p), t2(p), nr(p), ni(p);
    mpfr_sqr(t1.v, b.re.v, MPFR_RNDN);
    mpfr_sqr(t2.v, b.im.v, MPFR_RNDN);
    mpfr_add(den.v, t1.v, t2.v, MPFR_RNDN);
    mpfr_mul(t1.v, a.re.v, b.re.v, MPFR_RNDN);
    mpfr_mul(t2.v, a.im.v, b.im.v, MPFR_RNDN);
    mpfr_add(nr.v, t1.v, t2.v, MPFR_RNDN);
    mpfr_mul(t1.v, a.im.v, b.re.v, MPFR_RNDN);
    mpfr_mul(t2.v, a.re.v, b.im.v, MPFR_RNDN);
    mpfr_sub(ni.v, t1.v, t2.v, MPFR_RNDN);
    mpfr_div(r.re.v, nr.v, den.v, MPFR_RNDN);
    mpfr_div(r.im.v, ni.v, den.v, MPFR_RNDN);
}

/*
 * j(tau) = E4(tau)^3 / Delta(tau) with E4 = 1 + 240 sum sigma3(n) q^n and
 * Delta = q prod (1 - q^n)^24, in MPFR at the given precision. tau is
 * (-b + i sqrt|D|) / (2a).
 */
inline Cx j_eisenstein(i64 a, i64 b, i64 d, mpfr_prec_t p, int terms)
{
    Mp pi(p), r(p), ang(p), s(p), c(p);
    mpfr_const_pi(pi.v, MPFR_RNDN);
    mpfr_set_si(r.v, -d, MPFR_RNDN);
    mpfr_sqrt(r.v, r.v, MPFR_RNDN);
    mpfr_mul(r.v, r.v, pi.v, MPFR_RNDN);
    mpfr_div_si(r.v, r.v, a, MPFR_RNDN);
    mpfr_neg(r.v, r.v, MPFR_RNDN);
    mpfr_exp(r.v, r.v, MPFR_RNDN); /* |q| = exp(-pi sqrt|D| / a) */
    mpfr_mul_si(ang.v, pi.v, -b, MPFR_RNDN);
    mpfr_div_si(ang.v, ang.v, a, MPFR_RNDN); /* arg q = -pi b / a */
    mpfr_sin_cos(s.v, c.v, ang.v, MPFR_RNDN);
    Cx q(p);
    mpfr_mul(q.re.v, r.v, c.v, MPFR_RNDN);
    mpfr_mul(q.im.v, r.v, s.v, MPFR_RNDN);

    Cx e4(p), qn(p), prod(p), tmp(p);
    mpfr_set_ui(e4.re.v, 1, MPFR_RNDN);
    mpfr_set_ui(prod.re.v, 1, MPFR_RNDN);
    mpfr_set_ui(qn.re.v, 1, MPFR_RNDN);
    for (int n = 1; n <= terms; ++n) {
        cx_mul(tmp, qn, q, p);
        qn = tmp;
        mpz_class sigma = 0;
        for (int k = 1; k <= n; ++k)
            if (n % k == 0)
                sigma += mpz_class(k) * k * k;
        sigma *= 240;
        Mp t(p);
        mpfr_mul_z(t.v, qn.re.v, sigma.get_mpz_t(), MPFR_RNDN);
        mpfr_add(e4.re.v, e4.re.v, t.v, MPFR_RNDN);
        mpfr_mul_z(t.v, qn.im.v, sigma.get_mpz_t(), MPFR_RNDN);
        mpfr_add(e4.im.v, e4.im.v, t.v, MPFR_RNDN);
        /* prod *= (1 - q^n) */
        Cx one_minus(p);
        mpfr_ui_sub(one_minus.re.v, 1, qn.re.v, MPFR_RNDN);
        mpfr_neg(one_minus.im.v, qn.im.v, MPFR_RNDN);
        cx_mul(tmp, prod, one_minus, p);
        prod = tmp;
    }
    Cx delta = prod;
    for (int k = 0; k < 23; ++k) {
        cx_mul(tmp, delta, prod, p);
        delta = tmp;
    }
    cx_mul(tmp, delta, q, p);
    delta = tmp;
    Cx e4c(p);
    cx_mul(tmp, e4, e4, p);
    cx_mul(e4c, tmp, e4, p);
    Cx j(p);
    cx_div(j, e4c, delta, p);
    return j;
}

/* Finite abelian group Z/m1 x ... x Z/mk with elements encoded mixed-radix. */
struct AbGroup
{
    std::vector<i64> mod;
    i64 order() const
    {
        i64 n = 1;
        for (i64 m : mod)
            n *= m;
        return n;
    }
    std::vector<i64> decode(i64 idx) const
    {
        std::vector<i64> x(mod.size());
        for (std::size_t i = mod.size(); i-- > 0;) {
            x[i] = idx % mod[i];
            idx /= mod[i];
        }
        return x;
    }
    i64 encode(std::vector<i64> const & x) const
    {
        i64 idx = 0;
        for (std::size_t i = 0; i < mod.size(); ++i)
            idx = idx * mod[i] + (((x[i] % mod[i]) + mod[i]) % mod[i]);
        return idx;
    }
    i64 add(i64 a, i64 b) const
    {
        auto x = decode(a), y = decode(b);
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += y[i];
        return encode(x);
    }
    i64 scale(i64 a, i64 k) const
    {
        auto x = decode(a);
        for (auto & v : x)
            v *= k;
        return encode(x);
    }
};

/*
 * Isomorphism type of G/S as the list n -> #{x in G/S : n x = 0} over the
 * divisors n of the exponent; two finite abelian groups with equal counts for
 * every n are isomorphic. in_s is a membership table for S.
 */
inline std::vector<i64> quotient_torsion_profile(AbGroup const & g, std::vector<char> const & in_s, i64 exponent)
{
    i64 s_order = 0;
    for (char c : in_s)
        s_order += c;
    std::vector<i64> prof;
    for (i64 n = 1; n <= exponent; ++n) {
        if (exponent % n)
            continue;
        i64 cnt = 0;
        for (i64 x = 0; x < g.order(); ++x)
            if (in_s[g.scale(x, n)])
                ++cnt;
        prof.push_back(cnt / s_order);
    }
    return prof;
}

/* Same profile for an abstract group given by its invariant factors. */
inline std::vector<i64> torsion_profile(std::vector<i64> const & invariants, i64 exponent)
{
    std::vector<i64> prof;
    for (i64 n = 1; n <= exponent; ++n) {
        if (exponent % n)
            continue;
        i64 cnt = 1;
        for (i64 m : invariants)
            cnt *= std::gcd(m, n);
        prof.push_back(cnt);
    }
    return prof;
}

} // namespace oracle
