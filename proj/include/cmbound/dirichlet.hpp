#pragma once

/*
 * Real Dirichlet characters chi_D(n) = (D/n) attached to negative
 * fundamental discriminants, L(1, chi_D), and the explicit constants that
 * turn lower bounds for L(1, chi) into lower bounds for class numbers of
 * arbitrary imaginary quadratic orders.
 */

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "arith.hpp"
#include "discriminant.hpp"
#include "error.hpp"
#include "kronecker.hpp"
#include "quadform.hpp"

namespace cmbound {

/* Primitive odd real character of conductor |D|, D a negative fundamental discriminant. */
class RealCharacter
{
    Discriminant disc_;

  public:
    explicit RealCharacter(Discriminant d)
        : disc_(d)
    {
        if (!d.is_fundamental())
            throw invalid_argument("character of D = " + std::to_string(d.value())
                                   + " is not primitive (D not fundamental)");
    }

    i64 modulus() const noexcept { return disc_.abs(); }
    Discriminant const & discriminant() const noexcept { return disc_; }
    int operator()(i64 n) const { return kronecker(disc_.value(), n); }
};

/* Smallest absolute precision l_one() will certify. */
inline constexpr double l_one_precision_floor = 1e-13;

/*
 * L(1, chi) for odd primitive real chi of conductor q:
 *   L(1, chi) = -pi / q^(3/2) * sum_{a=1}^{q-1} chi(a) a.
 * The sum is exact; only the final scaling is floating point.
 */
inline double l_one(RealCharacter const & chi, double precision = 1e-9)
{
    if (!(precision >= l_one_precision_floor))
        throw precision_error("requested L(1,chi) precision below the certified floor");
    i64 q = chi.modulus();
    i128 s = 0;
    for (i64 a = 1; a < q; ++a)
        s += static_cast<i128>(chi(a)) * a;
    long double qq = static_cast<long double>(q);
    long double val = -std::numbers::pi_v<long double> * static_cast<long double>(s) / (qq * std::sqrt(qq));
    return static_cast<double>(val);
}

/* Number of roots of unity in the maximal order of discriminant d_K. */
inline int roots_of_unity(i64 fundamental)
{
    return fundamental == -3 ? 6 : fundamental == -4 ? 4 : 2;
}

/*
 * Compares round(w sqrt|D| L(1,chi_D) / (2 pi)) with the number of reduced
 * forms. Throws precision_error when the L-value tolerance does not allow
 * rounding to a unique integer.
 */
inline bool class_number_formula_check(Discriminant const & d, double precision = 1e-9)
{
    RealCharacter chi(d);
    double l = l_one(chi, precision);
    double scale = roots_of_unity(d.value()) * std::sqrt(static_cast<double>(d.abs())) / (2 * std::numbers::pi);
    double value = scale * l;
    double err = scale * precision;
    double nearest = std::round(value);
    if (std::abs(value - nearest) + err >= 0.5)
        throw precision_error("class number formula value " + std::to_string(value)
                              + " cannot be rounded safely for D = " + std::to_string(d.value()));
    return static_cast<i64>(nearest) == static_cast<i64>(reduced_forms(d).size());
}

struct EffectiveConstant
{
    std::string name;
    double epsilon = 0;
    /* natural log of the constant; value may overflow to inf, log_value does not */
    double log_value = 0;
    double validity_threshold = 3;
    bool exceptional_allowance = false;

    double value() const { return std::exp(log_value); }
};

/*
 * Explicit lower bound for L(1, chi):
 *   L(1, chi_D) > coefficient * eps * |D|^(-eps)   for |D| >= max(e^(1/eps), e^log_floor),
 * with at most one exceptional D.
 */
struct TatuzawaConstants
{
    double coefficient = 0.655;
    double log_floor = 11.2;
    double unit_index_bound = 3;
};

inline constexpr TatuzawaConstants tatuzawa_table{};

inline void check_tatuzawa_epsilon(double eps)
{
    if (!(eps > 0 && eps < 0.5))
        throw invalid_argument("epsilon must lie in (0, 1/2)");
}

inline double tatuzawa_log_threshold(double eps, TatuzawaConstants const & t = tatuzawa_table)
{
    return std::max(1.0 / eps, t.log_floor);
}

inline EffectiveConstant tatuzawa_c2(double eps, TatuzawaConstants const & t = tatuzawa_table)
{
    check_tatuzawa_epsilon(eps);
    return { "c2", eps, std::log(t.coefficient * eps), std::exp(tatuzawa_log_threshold(eps, t)), true };
}

/*
 * h(d_K) > c3 |d_K|^(1/2 - eps) for every field other than the exception.
 * Above the threshold T this is the class number formula with w >= 2;
 * below it h >= 1 > T^(eps - 1/2) |d_K|^(1/2 - eps). The constant is the
 * smaller of the two.
 */
inline EffectiveConstant tatuzawa_c3(double eps, TatuzawaConstants const & t = tatuzawa_table)
{
    auto c2 = tatuzawa_c2(eps, t);
    double from_formula = c2.log_value - std::log(std::numbers::pi);
    double from_floor = -(0.5 - eps) * tatuzawa_log_threshold(eps, t);
    return { "c3", eps, std::min(from_formula, from_floor), c2.validity_threshold, true };
}

/*
 * log sup_{f >= 1} f^(1 - eps) / phi(f). The supremum is attained at a
 * primorial: a prime p is worth including iff p^eps (p - 1) / p < 1, and
 * that quantity is increasing in p.
 */
inline double log_phi_lower_bound_constant(double eps)
{
    if (!(eps > 0 && eps < 1))
        throw invalid_argument("epsilon must lie in (0, 1)");
    double acc = 0;
    for (i64 p = 2;; ++p) {
        if (!is_prime(p))
            continue;
        double lp = std::log(static_cast<double>(p));
        double step = -eps * lp + lp - std::log(static_cast<double>(p - 1));
        if (step <= 0)
            break;
        acc += step;
    }
    return acc;
}

/*
 * #Pic(O) > c4 |disc O|^(1/2 - eps) for every order O outside the
 * exceptional field, with
 *   h(O) >= h(d_K) phi(f) / [O_K^x : O^x] >= c3 |d_K|^(1/2-eps) f^(1-eps) / (3 c_phi)
 * and f^(1-eps) >= f^(1-2 eps).
 */
inline EffectiveConstant tatuzawa_c4(double eps, TatuzawaConstants const & t = tatuzawa_table)
{
    auto c3 = tatuzawa_c3(eps, t);
    double log_cphi = log_phi_lower_bound_constant(eps);
    return { "c4", eps, c3.log_value - std::log(t.unit_index_bound) - log_cphi,
             c3.validity_threshold, true };
}

/* Primes below this are summed exactly in genus_c8; above it explicit
 * Chebyshev-function bounds take over. */
inline constexpr i64 genus_c8_exact_limit = i64{ 1 } << 20;

/*
 * c8(eps) = sup_{m >= 1} 2^(omega(m)+1) / m^eps, attained at the primorial
 * of all primes p with p^eps < 2. Since #Pic(O)[2] <= 2^omega(disc), this
 * bounds the 2-torsion cardinality by c8 |disc|^eps for every order.
 *
 * When the cutoff X = 2^(1/eps) exceeds genus_c8_exact_limit, the primes in
 * [Y, X) contribute at most
 *   log 2 (pi(X) - pi(Y)) - eps (theta(X) - theta(Y))
 * with pi(X) <= X/ln X (1 + 1.2762/ln X) and theta(X) >= X (1 - 1/ln X),
 * so the returned value is an upper bound for the supremum.
 */
inline EffectiveConstant genus_c8(double eps)
{
    if (!(eps > 0 && eps <= 1))
        throw invalid_argument("epsilon must lie in (0, 1]");
    double const log2 = std::log(2.0);
    double cutoff = std::exp2(1.0 / eps);
    double acc = log2; /* m = 1 */
    i64 exact_to = static_cast<i64>(std::min<double>(cutoff, static_cast<double>(genus_c8_exact_limit)));
    double pi_y = 0, theta_y = 0;
    for (i64 p : primes_up_to(exact_to)) {
        double lp = std::log(static_cast<double>(p));
        if (eps * lp >= log2)
            break;
        acc += log2 - eps * lp;
        pi_y += 1;
        theta_y += lp;
    }
    if (cutoff > static_cast<double>(genus_c8_exact_limit)) {
        double lx = std::log(cutoff);
        double pi_x = cutoff / lx * (1 + 1.2762 / lx);
        double theta_x = cutoff * (1 - 1 / lx);
        acc += log2 * (pi_x - pi_y) - eps * (theta_x - theta_y);
    }
    return { "c8", eps, acc, 3, false };
}

} // namespace cmbound
