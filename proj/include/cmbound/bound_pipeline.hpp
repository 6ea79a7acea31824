#pragma once

/*
 * Discriminant thresholds from the class number squeeze
 *
 *   c4(eps2) |D|^(1/2 - eps2) < #Pic(O) <= odd_cap * c8(eps1)^e * |D|^(eps1 e),
 *
 * where e bounds the exponent of the 2-primary part. Both sides are
 * monomials in |D|, so the inequality fails beyond a unique crossing point.
 * Everything is carried in natural logarithms; the constants involved are
 * far outside double range for small epsilon.
 */

#include <mpfr.h>

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dirichlet.hpp"
#include "error.hpp"
#include "galois_models.hpp"

namespace cmbound {

struct AuditEntry
{
    std::string name;
    double value = 0;
    std::string formula;
};

struct BoundReport
{
    double log_threshold = 0;
    /* ceil(exp(log_threshold)); left empty when it would be too long to write out */
    std::optional<mpz_class> threshold;
    double epsilon1 = 0, epsilon2 = 0;
    std::vector<AuditEntry> audit;
    bool exceptional_field_caveat = true;

    /* threshold > n, decided in log space when the integer is not materialized */
    bool threshold_exceeds(mpz_class const & n) const
    {
        if (threshold)
            return *threshold > n;
        return true;
    }

    std::string threshold_string() const
    {
        return threshold ? threshold->get_str() : "exp(" + std::to_string(log_threshold) + ")";
    }

    double audit_value(std::string const & name) const
    {
        for (auto const & e : audit)
            if (e.name == name)
                return e.value;
        throw invalid_argument("audit has no entry " + name);
    }
};

struct HeegnerParams
{
    int r = 2;
    double c5 = 1;
    long c6 = 1;
};

struct AndreOortParams
{
    int n = 2;
    double c9 = 1;
};

using EpsGrid = std::vector<std::pair<double, double>>;

inline std::vector<double> default_eps_values()
{
    return { 0.30, 0.20, 0.12, 0.07, 0.04, 0.02 };
}

/* Full product grid of the given values for (eps1, eps2). */
inline EpsGrid product_grid(std::vector<double> const & values)
{
    EpsGrid g;
    for (double e1 : values)
        for (double e2 : values)
            g.push_back({ e1, e2 });
    return g;
}

inline EpsGrid default_eps_grid()
{
    return product_grid(default_eps_values());
}

/* c7 = (r + 1) + floor(log2(c5 c6)) */
inline int c7(int r, double c5c6)
{
    if (r < 1)
        throw invalid_argument("c7: r must be >= 1");
    if (!(c5c6 >= 1))
        throw invalid_argument("c7: c5*c6 must be >= 1");
    return (r + 1) + std::ilogb(c5c6);
}

/* c10 = n + 1 + floor(log2(c9)) */
inline int c10(int n, double c9)
{
    if (n < 2)
        throw invalid_argument("c10: n must be >= 2");
    if (!(c9 >= 1))
        throw invalid_argument("c10: c9 must be >= 1");
    return n + 1 + std::ilogb(c9);
}

/*
 * Root of  log_c4 + gap * L - rhs_log = 0  in L = log|D| by bisection.
 * Deterministic in its inputs, so replaying the audit reproduces it exactly.
 */
inline double crossing_log_bisect(double log_c4, double rhs_log, double gap)
{
    auto g = [&](double l) { return log_c4 + gap * l - rhs_log; };
    double lo = 0, hi = 1;
    while (g(lo) > 0)
        lo = lo * 2 - 1;
    while (g(hi) <= 0)
        hi *= 2;
    for (int it = 0; it < 2000; ++it) {
        double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi)
            break;
        if (g(mid) > 0)
            hi = mid;
        else
            lo = mid;
    }
    return lo + (hi - lo) / 2;
}

/* Closed-form crossing (the independent route to the bisection). */
inline double crossing_log_closed_form(double log_c4, double rhs_log, double gap)
{
    return (rhs_log - log_c4) / gap;
}

/*
 * Largest log-threshold written out as a decimal integer (about 10^5
 * digits). Beyond it every comparison with a machine integer is decided by
 * the logarithm alone.
 */
inline constexpr double max_materialized_log = 2.3e5;

inline std::optional<mpz_class> materialize_threshold(double log_threshold)
{
    if (!(log_threshold <= max_materialized_log))
        return std::nullopt;
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(log_threshold / std::log(2.0)) + 128;
    mpfr_t x;
    mpfr_init2(x, prec);
    mpfr_set_d(x, log_threshold, MPFR_RNDN);
    mpfr_exp(x, x, MPFR_RNDU);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), x, MPFR_RNDU);
    mpfr_clear(x);
    if (z < 3)
        z = 3;
    return z;
}

namespace detail {

inline std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace detail

/*
 * For each admissible (eps1, eps2) (gap = 1/2 - eps2 - eps1 e > 0) finds the
 * crossing B of c4(eps2) B^(1/2-eps2) = odd_cap c8(eps1)^e B^(eps1 e), raises
 * it to the validity threshold of c4(eps2), and keeps the smallest result.
 */
inline BoundReport solve_disc_threshold(double odd_cap, int even_exponent, EpsGrid const & grid)
{
    if (!(odd_cap >= 1))
        throw invalid_argument("odd_cap must be >= 1");
    if (even_exponent < 0)
        throw invalid_argument("even_exponent must be >= 0");

    std::map<double, EffectiveConstant> c8_cache;
    bool found = false;
    double best = std::numeric_limits<double>::infinity();
    BoundReport rep;
    for (auto const & [eps1, eps2] : grid) {
        if (!(eps1 > 0 && eps1 <= 1) || !(eps2 > 0 && eps2 < 0.5))
            throw invalid_argument("grid point out of range: (" + detail::fmt(eps1) + ", " + detail::fmt(eps2) + ")");
        double gap = 0.5 - eps2 - eps1 * even_exponent;
        if (!(gap > 0))
            continue;
        auto it = c8_cache.find(eps1);
        if (it == c8_cache.end())
            it = c8_cache.emplace(eps1, genus_c8(eps1)).first;
        EffectiveConstant const & c8 = it->second;
        EffectiveConstant c4 = tatuzawa_c4(eps2);
        double rhs_log = std::log(odd_cap) + even_exponent * c8.log_value;
        double crossing = crossing_log_bisect(c4.log_value, rhs_log, gap);
        double log_valid = tatuzawa_log_threshold(eps2);
        double lt = std::max(crossing, log_valid);
        if (!found || lt < best) {
            found = true;
            best = lt;
            rep = BoundReport{};
            rep.log_threshold = lt;
            rep.epsilon1 = eps1;
            rep.epsilon2 = eps2;
            rep.audit = {
                { "odd_cap", odd_cap, "odd part bound on #Pic" },
                { "even_exponent", static_cast<double>(even_exponent), "e: every cyclic 2-factor has order <= 2^e" },
                { "eps1", eps1, "grid" },
                { "eps2", eps2, "grid" },
                { "log_c8", c8.log_value, "log c8(eps1) = log 2 + sum_{p < 2^(1/eps1)} (log 2 - eps1 log p)" },
                { "log_c4", c4.log_value,
                  "log c4(eps2) = min(log(0.655 eps2 / pi), -(1/2 - eps2) log T) - log 3 - log c_phi(eps2)" },
                { "log_validity", log_valid, "log T = max(1/eps2, 11.2)" },
                { "log_crossing", crossing,
                  "log B: log c4 + (1/2 - eps2 - eps1 e) log B = log odd_cap + e log c8 (bisection)" },
                { "log_threshold", lt, "max(log B, log T)" },
            };
        }
    }
    if (!found)
        throw infeasible_error("no grid point with 1/2 - eps2 - eps1 * " + std::to_string(even_exponent) + " > 0");
    rep.threshold = materialize_threshold(rep.log_threshold);
    rep.exceptional_field_caveat = true;
    return rep;
}

/* Recomputes the log-threshold from the audit values alone. */
inline double replay_log_threshold(BoundReport const & rep)
{
    double e = rep.audit_value("even_exponent");
    double gap = 0.5 - rep.audit_value("eps2") - rep.audit_value("eps1") * e;
    double rhs = std::log(rep.audit_value("odd_cap")) + e * rep.audit_value("log_c8");
    double crossing = crossing_log_bisect(rep.audit_value("log_c4"), rhs, gap);
    return std::max(crossing, rep.audit_value("log_validity"));
}

/* Heegner-point discriminant bound: odd_cap = c5 c6, e = c7(r, c5 c6). */
inline BoundReport heegner_c1(HeegnerParams const & p, EpsGrid const & grid = default_eps_grid())
{
    if (p.r < 2)
        throw invalid_argument("heegner: r must be >= 2");
    if (!(p.c5 >= 1) || p.c6 < 1)
        throw invalid_argument("heegner: c5 and c6 must be >= 1");
    double cap = p.c5 * static_cast<double>(p.c6);
    int e = c7(p.r, cap);
    BoundReport rep = solve_disc_threshold(cap, e, grid);
    std::vector<AuditEntry> head = {
        { "r", static_cast<double>(p.r), "number of CM points" },
        { "c5", p.c5, "effective Serre constant (input)" },
        { "c6", static_cast<double>(p.c6), "deg(pi)" },
        { "annihilator", static_cast<double>(corollary2_annihilator(p.r)), "2^(r+1)" },
        { "c7", static_cast<double>(e), "(r+1) + floor(log2(c5*c6))" },
    };
    rep.audit.insert(rep.audit.begin(), head.begin(), head.end());
    return rep;
}

/* Special-point discriminant bound: odd_cap = c9, e = c10(n, c9). */
inline BoundReport andre_oort_c11(AndreOortParams const & p, EpsGrid const & grid = default_eps_grid())
{
    if (p.n < 2)
        throw invalid_argument("andre_oort: n must be >= 2");
    if (!(p.c9 >= 1))
        throw invalid_argument("andre_oort: c9 must be >= 1");
    int e = c10(p.n, p.c9);
    BoundReport rep = solve_disc_threshold(p.c9, e, grid);
    std::vector<AuditEntry> head = {
        { "n", static_cast<double>(p.n), "ambient dimension" },
        { "c9", p.c9, "max(deg_x, deg_y) * [field of definition : Q]" },
        { "annihilator", static_cast<double>(corollary2_annihilator(p.n)), "2^(n+1)" },
        { "c10", static_cast<double>(e), "n + 1 + floor(log2(c9))" },
    };
    rep.audit.insert(rep.audit.begin(), head.begin(), head.end());
    return rep;
}

} // namespace cmbound
