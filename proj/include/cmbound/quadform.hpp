#pragma once

/*
 * Positive-definite binary quadratic forms a x^2 + b x y + c y^2 and the
 * class group Pic(O) of the imaginary quadratic order of discriminant
 * D = b^2 - 4ac.
 *
 * A reduced form satisfies |b| <= a <= c, with b >= 0 whenever |b| = a or
 * a = c. Every primitive positive-definite form is properly equivalent to
 * exactly one reduced form.
 */

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "arith.hpp"
#include "discriminant.hpp"
#include "error.hpp"
#include "kronecker.hpp"

namespace cmbound {

struct QuadForm
{
    i64 a = 1, b = 0, c = 1;

    i64 discriminant() const { return b * b - 4 * a * c; }
    bool is_primitive() const { return std::gcd(std::gcd(a, b), c) == 1; }
    bool is_positive_definite() const { return a > 0 && discriminant() < 0; }
    bool is_reduced() const
    {
        i64 ab = b < 0 ? -b : b;
        if (!(ab <= a && a <= c))
            return false;
        if ((ab == a || a == c) && b < 0)
            return false;
        return true;
    }

    auto operator<=>(QuadForm const &) const = default;

    friend std::ostream & operator<<(std::ostream & os, QuadForm const & f)
    {
        return os << "(" << f.a << "," << f.b << "," << f.c << ")";
    }
};

/* The principal form (1, D mod 2, (D mod 2 - D)/4). */
inline QuadForm principal_form(i64 d)
{
    i64 b0 = mod_floor(d, 2);
    return { 1, b0, (b0 - d) / 4 };
}

inline QuadForm reduce_form(QuadForm f)
{
    if (!f.is_positive_definite())
        throw invalid_argument("form is not positive definite");
    if (!f.is_primitive())
        throw invalid_argument("form is not primitive");

    /* normalize b into (-a, a] via x -> x + k y */
    auto normalize = [](QuadForm & g) {
        i64 two_a = 2 * g.a;
        i64 r = mod_floor(g.b, two_a); /* in [0, 2a) */
        if (r > g.a)
            r -= two_a;
        i64 k = (r - g.b) / two_a; /* b' = b + 2 a k */
        g.c = g.c + k * g.b + k * k * g.a;
        g.b = r;
    };
    normalize(f);
    while (f.a > f.c) {
        std::swap(f.a, f.c);
        f.b = -f.b;
        normalize(f);
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return f;
}

inline QuadForm inverse(QuadForm const & f)
{
    return reduce_form({ f.a, -f.b, f.c });
}

/*
 * Dirichlet composition through a united pair. With e = gcd(a1, a2, (b1+b2)/2)
 * and mu a1 + nu a2 + lambda (b1+b2)/2 = e, the composed form is
 * (A, B, C) with A = a1 a2 / e^2 and
 *   B = (mu a1 b2 + nu a2 b1 + lambda (b1 b2 + D)/2) / e  (mod 2A).
 */
inline QuadForm compose(QuadForm const & f, QuadForm const & g)
{
    i64 d = f.discriminant();
    if (g.discriminant() != d)
        throw invalid_argument("compose: discriminants differ");
    if (!f.is_positive_definite() || !g.is_positive_definite())
        throw invalid_argument("compose: forms must be positive definite");
    if (!f.is_primitive() || !g.is_primitive())
        throw invalid_argument("compose: forms must be primitive");

    i64 beta = (f.b + g.b) / 2;
    auto g1 = ext_gcd(f.a, g.a);
    auto g2 = ext_gcd(g1.g, beta);
    i64 e = g2.g;
    i128 mu = static_cast<i128>(g1.x) * g2.x;
    i128 nu = static_cast<i128>(g1.y) * g2.x;
    i128 lambda = g2.y;

    i64 a3 = (f.a / e) * (g.a / e);
    i128 two_a3 = 2 * static_cast<i128>(a3);
    i128 num = mu * f.a * g.b + nu * g.a * f.b
               + lambda * ((static_cast<i128>(f.b) * g.b + d) / 2);
    i128 b3 = (num / e) % two_a3;
    if (b3 < 0)
        b3 += two_a3;
    i128 c3 = (b3 * b3 - d) / (4 * static_cast<i128>(a3));
    return reduce_form({ a3, static_cast<i64>(b3), static_cast<i64>(c3) });
}

inline QuadForm power(QuadForm const & f, i64 n)
{
    QuadForm result = principal_form(f.discriminant());
    QuadForm base = reduce_form(f);
    if (n < 0) {
        base = inverse(base);
        n = -n;
    }
    while (n > 0) {
        if (n & 1)
            result = compose(result, base);
        n >>= 1;
        if (n > 0)
            base = compose(base, base);
    }
    return result;
}

/* Default ceiling on |D| for class group enumeration. */
inline constexpr i64 default_enumeration_limit = 100'000'000;

/* All reduced primitive forms of discriminant d, principal form first. */
inline std::vector<QuadForm> reduced_forms(Discriminant const & disc,
                                           i64 limit = default_enumeration_limit)
{
    i64 d = disc.value();
    if (-d > limit)
        throw resource_error("|D| = " + std::to_string(-d) + " exceeds enumeration limit "
                             + std::to_string(limit));
    std::vector<QuadForm> out;
    i64 amax = isqrt(-d / 3);
    for (i64 a = 1; a <= amax; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            if (mod_floor(b - d, 2) != 0)
                continue;
            i64 num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            i64 c = num / (4 * a);
            if (c < a)
                continue;
            if (c == a && b < 0)
                continue;
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            out.push_back({ a, b, c });
        }
    }
    return out;
}

struct ClassGroupStructure
{
    explicit ClassGroupStructure(Discriminant d)
        : discriminant(d)
    {
    }

    Discriminant discriminant;
    std::vector<QuadForm> reduced_forms;
    i64 order = 1;
    /* invariant factors d1 | d2 | ... , all > 1; empty for the trivial group */
    std::vector<i64> elementary_divisors;
    i64 two_torsion_size = 1;

    i64 index_of(QuadForm const & f) const
    {
        auto it = std::lower_bound(sorted_.begin(), sorted_.end(), std::pair{ f, i64{ 0 } },
                                   [](auto const & x, auto const & y) { return x.first < y.first; });
        if (it == sorted_.end() || it->first != f)
            throw invalid_argument("form is not a reduced form of this discriminant");
        return it->second;
    }

    i64 exponent() const { return elementary_divisors.empty() ? 1 : elementary_divisors.back(); }

  private:
    std::vector<std::pair<QuadForm, i64>> sorted_;
    friend ClassGroupStructure class_group(Discriminant const &, i64);
};

/* Order of f in Pic(O), given that it divides n. */
inline i64 element_order(QuadForm const & f, i64 n, std::vector<prime_power> const & n_factors)
{
    QuadForm const one = principal_form(f.discriminant());
    i64 ord = n;
    for (auto const & pp : n_factors) {
        for (int i = 0; i < pp.e; ++i) {
            if (power(f, ord / pp.p) != one)
                break;
            ord /= pp.p;
        }
    }
    return ord;
}

/*
 * Invariant factors of a finite abelian group from the multiset of element
 * orders: for each p, #{g : g^(p^k) = 1} = p^(s_k) determines how many
 * cyclic p-factors have order >= p^k.
 */
inline std::vector<i64> invariant_factors_from_orders(std::vector<i64> const & orders)
{
    i64 n = static_cast<i64>(orders.size());
    std::vector<std::vector<i64>> ppowers_by_prime; /* descending powers per prime */
    for (auto const & pp : factor(n)) {
        std::vector<int> count_le(static_cast<std::size_t>(pp.e) + 1, 0); /* count_le[k] = #ord | p^k */
        for (i64 o : orders) {
            i64 x = o;
            int k = 0;
            while (x % pp.p == 0) {
                x /= pp.p;
                ++k;
            }
            if (x == 1)
                ++count_le[static_cast<std::size_t>(k)];
        }
        for (std::size_t k = 1; k < count_le.size(); ++k)
            count_le[k] += count_le[k - 1];
        std::vector<int> s(count_le.size());
        for (std::size_t k = 0; k < count_le.size(); ++k) {
            int v = 0;
            for (i64 c = count_le[k]; c > 1; c /= pp.p)
                ++v;
            s[k] = v;
        }
        /* t_k = #factors with order >= p^k */
        std::vector<i64> powers;
        for (std::size_t k = count_le.size() - 1; k >= 1; --k) {
            int t_k = s[k] - s[k - 1];
            int t_next = (k + 1 < count_le.size()) ? s[k + 1] - s[k] : 0;
            i64 pk = 1;
            for (std::size_t i = 0; i < k; ++i)
                pk *= pp.p;
            for (int i = 0; i < t_k - t_next; ++i)
                powers.push_back(pk);
        }
        ppowers_by_prime.push_back(powers);
    }
    std::size_t rank = 0;
    for (auto const & v : ppowers_by_prime)
        rank = std::max(rank, v.size());
    std::vector<i64> out(rank, 1);
    /* largest factor takes the largest power of each prime, etc. */
    for (auto const & v : ppowers_by_prime)
        for (std::size_t i = 0; i < v.size(); ++i)
            out[rank - 1 - i] *= v[i];
    return out;
}

inline ClassGroupStructure class_group(Discriminant const & disc,
                                       i64 limit = default_enumeration_limit)
{
    ClassGroupStructure cg(disc);
    cg.reduced_forms = reduced_forms(disc, limit);
    cg.order = static_cast<i64>(cg.reduced_forms.size());
    cg.sorted_.reserve(cg.reduced_forms.size());
    for (std::size_t i = 0; i < cg.reduced_forms.size(); ++i)
        cg.sorted_.push_back({ cg.reduced_forms[i], static_cast<i64>(i) });
    std::sort(cg.sorted_.begin(), cg.sorted_.end());

    auto h_factors = factor(cg.order);
    std::vector<i64> orders;
    orders.reserve(cg.reduced_forms.size());
    for (auto const & f : cg.reduced_forms)
        orders.push_back(cg.order == 1 ? 1 : element_order(f, cg.order, h_factors));
    cg.elementary_divisors = invariant_factors_from_orders(orders);
    cg.two_torsion_size = 1;
    for (i64 dd : cg.elementary_divisors)
        if (dd % 2 == 0)
            cg.two_torsion_size *= 2;
    return cg;
}

/* Composition table indexed by position in cg.reduced_forms. */
inline std::vector<std::vector<i64>> composition_table(ClassGroupStructure const & cg)
{
    std::size_t h = cg.reduced_forms.size();
    std::vector<std::vector<i64>> table(h, std::vector<i64>(h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
            table[i][j] = cg.index_of(compose(cg.reduced_forms[i], cg.reduced_forms[j]));
    return table;
}

/*
 * Genus count mu(D): r = number of odd primes dividing D, then
 *   D = 1 mod 4:               mu = r
 *   D = -4n, n = 3 mod 4:      mu = r
 *   n = 1, 2 mod 4:            mu = r + 1
 *   n = 4 mod 8:               mu = r + 1
 *   n = 0 mod 8:               mu = r + 2
 * and #Pic(O)[2] = 2^(mu - 1).
 */
inline int genus_mu(Discriminant const & disc)
{
    i64 d = disc.value();
    int r = 0;
    for (auto const & pp : factor(d))
        if (pp.p != 2)
            ++r;
    if (mod_floor(d, 4) == 1)
        return r;
    i64 n = -d / 4;
    if (n % 4 == 3)
        return r;
    if (n % 4 == 1 || n % 4 == 2)
        return r + 1;
    if (n % 8 == 4)
        return r + 1;
    return r + 2;
}

inline i64 two_torsion_size(Discriminant const & disc)
{
    return i64{ 1 } << (genus_mu(disc) - 1);
}

/* Index [O_K^x : O^x] of the unit groups. */
inline i64 unit_index(i64 fundamental, i64 conductor)
{
    if (conductor == 1)
        return 1;
    if (fundamental == -3)
        return 3;
    if (fundamental == -4)
        return 2;
    return 1;
}

/* h(f^2 d_K) = h(d_K) f prod_{p | f} (1 - (d_K/p)/p) / [O_K^x : O^x] */
inline i64 order_class_number(Discriminant const & fundamental, i64 conductor)
{
    if (!fundamental.is_fundamental())
        throw invalid_argument("order_class_number: d_K must be fundamental");
    if (conductor < 1)
        throw invalid_argument("order_class_number: conductor must be positive");
    i64 dk = fundamental.value();
    i64 h = static_cast<i64>(reduced_forms(fundamental).size());
    /* f prod (1 - chi(p)/p) = prod over p^e || f of p^(e-1) (p - chi(p)) */
    i64 num = h;
    for (auto const & pp : factor(conductor)) {
        for (int i = 1; i < pp.e; ++i)
            num *= pp.p;
        num *= pp.p - kronecker(dk, pp.p);
    }
    return num / unit_index(dk, conductor);
}

} // namespace cmbound
