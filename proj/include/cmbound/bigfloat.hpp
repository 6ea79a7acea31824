#pragma once

/*
 * Thin value wrapper over mpfr_t plus a complex pair on top of it. Results
 * take the larger precision of their operands; all rounding is to nearest.
 */

#include <mpfr.h>

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <utility>

namespace cmbound {

class BigFloat
{
    mpfr_t v_;

  public:
    explicit BigFloat(mpfr_prec_t prec = 64)
    {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }

    BigFloat(long x, mpfr_prec_t prec)
    {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }

    BigFloat(double x, mpfr_prec_t prec)
    {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }

    BigFloat(mpz_class const & x, mpfr_prec_t prec)
    {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
    }

    BigFloat(BigFloat const & o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat && o) noexcept
    {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }

    BigFloat & operator=(BigFloat const & o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat & operator=(BigFloat && o) noexcept
    {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() noexcept { return v_; }
    mpfr_srcptr get() const noexcept { return v_; }
    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

    static BigFloat pi(mpfr_prec_t prec)
    {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /* nearest integer */
    mpz_class round() const
    {
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
        return z;
    }

    friend BigFloat operator+(BigFloat const & a, BigFloat const & b)
    {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator-(BigFloat const & a, BigFloat const & b)
    {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator*(BigFloat const & a, BigFloat const & b)
    {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator/(BigFloat const & a, BigFloat const & b)
    {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    BigFloat operator-() const
    {
        BigFloat r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat abs(BigFloat const & a)
    {
        BigFloat r(a.precision());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat sqrt(BigFloat const & a)
    {
        BigFloat r(a.precision());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat exp(BigFloat const & a)
    {
        BigFloat r(a.precision());
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend std::pair<BigFloat, BigFloat> sin_cos(BigFloat const & a)
    {
        BigFloat s(a.precision()), c(a.precision());
        mpfr_sin_cos(s.v_, c.v_, a.v_, MPFR_RNDN);
        return { std::move(s), std::move(c) };
    }

    friend bool operator<(BigFloat const & a, BigFloat const & b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(BigFloat const & a, BigFloat const & b) { return mpfr_greater_p(a.v_, b.v_); }
};

struct BigComplex
{
    BigFloat re, im;

    explicit BigComplex(mpfr_prec_t prec = 64)
        : re(prec)
        , im(prec)
    {
    }

    BigComplex(BigFloat r, BigFloat i)
        : re(std::move(r))
        , im(std::move(i))
    {
    }

    friend BigComplex operator+(BigComplex const & a, BigComplex const & b) { return { a.re + b.re, a.im + b.im }; }
    friend BigComplex operator-(BigComplex const & a, BigComplex const & b) { return { a.re - b.re, a.im - b.im }; }

    friend BigComplex operator*(BigComplex const & a, BigComplex const & b)
    {
        return { a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re };
    }

    friend BigComplex operator/(BigComplex const & a, BigComplex const & b)
    {
        BigFloat den = b.re * b.re + b.im * b.im;
        return { (a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den };
    }

    friend BigComplex operator*(BigComplex const & a, BigFloat const & s) { return { a.re * s, a.im * s }; }
};

} // namespace cmbound
