#pragma once

/*
 * Singular moduli j((-b + sqrt(D)) / 2a) and Hilbert class polynomials
 * H_D(x) = prod over reduced forms (x - j(tau_f)), computed in floating
 * point and snapped to integers.
 *
 * j is evaluated through the eta quotient
 *   f = q prod_{n>=1} (1 + q^n)^24 = Delta(2 tau) / Delta(tau),
 *   j = (256 f + 1)^3 / f,
 * with prod (1 - q^n) summed as the pentagonal series
 *   sum_{k in Z} (-1)^k q^(k(3k-1)/2).
 */

#include <gmpxx.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bigfloat.hpp"
#include "discriminant.hpp"
#include "error.hpp"
#include "poly.hpp"
#include "quadform.hpp"

namespace cmbound {

namespace detail {

/*
 * prod_{n>=1} (1 - q^n) to absolute error below 2^-prec. The terms beyond
 * index K have exponents >= m0 = (K+1)(3K+2)/2 and are distinct integers,
 * so the two tails together are at most 2 r^m0 / (1 - r) with r = |q|.
 */
inline BigComplex euler_product(BigComplex const & q, double log2_r, mpfr_prec_t prec)
{
    BigComplex sum(BigFloat(1L, prec), BigFloat(0L, prec));
    BigComplex qk = q;                     /* q^k */
    BigComplex cur = q;                    /* q^(k(3k-1)/2), k = 1 */
    double r = std::exp2(log2_r);
    for (long k = 1;; ++k) {
        BigComplex next = cur * qk;        /* q^(k(3k+1)/2) */
        BigComplex pair = cur + next;
        sum = (k % 2 == 1) ? sum - pair : sum + pair;

        double m0 = static_cast<double>(k + 1) * static_cast<double>(3 * k + 2) / 2.0;
        double tail_log2 = m0 * log2_r + 1.0 - std::log2(1.0 - r);
        if (tail_log2 < -static_cast<double>(prec))
            break;
        BigComplex qk1 = qk * q;           /* q^(k+1) */
        cur = next * qk * qk1;             /* q^((k+1)(3k+2)/2) */
        qk = std::move(qk1);
    }
    return sum;
}

inline double log2_j_bound(QuadForm const & f)
{
    double d = static_cast<double>(-f.discriminant());
    double inv_r = std::exp(std::numbers::pi * std::sqrt(d) / static_cast<double>(f.a));
    return std::log2(inv_r + 2000.0);
}

inline BigComplex j_at_working_precision(QuadForm const & f, mpfr_prec_t wp)
{
    double dabs = static_cast<double>(-f.discriminant());
    BigFloat pi = BigFloat::pi(wp);
    BigFloat sqrt_d = sqrt(BigFloat(static_cast<long>(-f.discriminant()), wp));
    BigFloat a(static_cast<long>(f.a), wp);
    BigFloat b(static_cast<long>(f.b), wp);
    /* q = exp(2 pi i tau) = exp(-pi sqrt|D| / a) * exp(-i pi b / a) */
    BigFloat modulus = exp(-(pi * sqrt_d / a));
    auto [s, c] = sin_cos(-(pi * b / a));
    BigComplex q(modulus * c, modulus * s);

    double log2_r = -std::numbers::pi * std::sqrt(dabs) / (static_cast<double>(f.a) * std::numbers::ln2);
    BigComplex q2 = q * q;
    BigComplex e1 = euler_product(q, log2_r, wp);
    BigComplex e2 = euler_product(q2, 2 * log2_r, wp);

    BigComplex ratio = e2 / e1;            /* prod (1 + q^n) */
    BigComplex r2 = ratio * ratio;
    BigComplex r4 = r2 * r2;
    BigComplex r8 = r4 * r4;
    BigComplex r24 = r8 * r8 * r8;
    BigComplex ff = q * r24;
    BigComplex one(BigFloat(1L, wp), BigFloat(0L, wp));
    BigComplex t = ff * BigFloat(256L, wp) + one;
    return t * t * t / ff;
}

} // namespace detail

/*
 * j(tau_f) for a reduced form f, accurate to +-2^(-precision_bits/2).
 * Throws precision_error when |j| is too large for that guarantee at the
 * requested precision.
 */
inline BigComplex j_invariant(QuadForm const & f, long precision_bits)
{
    if (!f.is_positive_definite() || !f.is_primitive() || !f.is_reduced())
        throw invalid_argument("j_invariant: form must be reduced, primitive and positive definite");
    if (precision_bits < 64)
        throw invalid_argument("j_invariant: precision_bits must be >= 64");
    double need = detail::log2_j_bound(f) + 16;
    if (need > static_cast<double>(precision_bits) / 2)
        throw precision_error("j_invariant: " + std::to_string(precision_bits)
                              + " bits too low for |D| = " + std::to_string(-f.discriminant()));
    return detail::j_at_working_precision(f, static_cast<mpfr_prec_t>(precision_bits + 32));
}

struct HilbertPoly
{
    Discriminant discriminant;
    ZPoly poly; /* monic, degree h(D) */

    std::vector<mpz_class> const & coefficients() const { return poly.coeffs(); }
    int degree() const { return poly.degree(); }
};

inline constexpr i64 default_hilbert_limit = 200'000;
inline constexpr int hilbert_max_escalations = 10;

/* Starting precision: 3.5 * log2 of the product of the |j|-estimates, plus 64. */
inline long hilbert_initial_precision(Discriminant const & d, std::vector<QuadForm> const & forms)
{
    double s = 0;
    for (auto const & f : forms)
        s += 1.0 / static_cast<double>(f.a);
    return static_cast<long>(std::ceil(3.5 * std::numbers::pi * std::sqrt(static_cast<double>(d.abs())) * s
                                       / std::numbers::ln2 + 64));
}

namespace detail {

/* Tries one precision; returns false if some coefficient fails to snap. */
inline bool try_hilbert(std::vector<QuadForm> const & forms, long bits, ZPoly & out)
{
    mpfr_prec_t wp = static_cast<mpfr_prec_t>(bits);
    std::vector<BigFloat> coeffs{ BigFloat(1L, wp) }; /* ascending */

    auto mul_linear = [&](BigFloat const & root) {
        std::vector<BigFloat> r(coeffs.size() + 1, BigFloat(0L, wp));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            r[i + 1] = r[i + 1] + coeffs[i];
            r[i] = r[i] - coeffs[i] * root;
        }
        coeffs = std::move(r);
    };
    auto mul_quadratic = [&](BigFloat const & lin, BigFloat const & cst) { /* x^2 + lin x + cst */
        std::vector<BigFloat> r(coeffs.size() + 2, BigFloat(0L, wp));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            r[i + 2] = r[i + 2] + coeffs[i];
            r[i + 1] = r[i + 1] + coeffs[i] * lin;
            r[i] = r[i] + coeffs[i] * cst;
        }
        coeffs = std::move(r);
    };

    for (auto const & f : forms) {
        if (f.b < 0)
            continue; /* conjugate of (a, -b, c), handled with it */
        BigComplex j = j_at_working_precision(f, wp);
        bool real_root = (f.b == 0 || f.b == f.a || f.a == f.c);
        if (real_root) {
            mul_linear(j.re);
        } else {
            BigFloat two(2L, wp);
            mul_quadratic(-(two * j.re), j.re * j.re + j.im * j.im);
        }
    }

    std::vector<mpz_class> z;
    BigFloat quarter(0.25, wp);
    for (auto const & c : coeffs) {
        mpz_class n = c.round();
        if (!(abs(c - BigFloat(n, wp)) < quarter))
            return false;
        z.push_back(n);
    }
    out = ZPoly(std::move(z));
    return true;
}

} // namespace detail

inline HilbertPoly hilbert_class_poly(Discriminant const & d, i64 limit = default_hilbert_limit)
{
    if (d.abs() > limit)
        throw resource_error("|D| = " + std::to_string(d.abs()) + " exceeds Hilbert polynomial limit "
                             + std::to_string(limit));
    auto forms = reduced_forms(d);
    long bits = hilbert_initial_precision(d, forms);
    for (int attempt = 0; attempt <= hilbert_max_escalations; ++attempt, bits *= 2) {
        ZPoly p;
        if (detail::try_hilbert(forms, bits, p) && p.degree() == static_cast<int>(forms.size()))
            return { d, std::move(p) };
    }
    throw precision_error("Hilbert class polynomial of D = " + std::to_string(d.value())
                          + " did not snap to integers after precision escalation");
}

/* All (D, H_D) with -bound <= D <= -3, ordered by |D|. */
inline std::vector<HilbertPoly> singular_moduli_up_to(i64 bound, i64 limit = default_hilbert_limit)
{
    std::vector<HilbertPoly> out;
    if (bound > limit)
        throw resource_error("bound " + std::to_string(bound) + " exceeds Hilbert polynomial limit "
                             + std::to_string(limit));
    for (i64 n = 3; n <= bound; ++n)
        if (Discriminant::is_valid(-n))
            out.push_back(hilbert_class_poly(Discriminant(-n), limit));
    return out;
}

} // namespace cmbound
