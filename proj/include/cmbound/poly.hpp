#pragma once

/*
 * Exact polynomial arithmetic: dense univariate polynomials over Z, Q and
 * a word-size prime field, sparse bivariate polynomials over Z, resultants
 * through fraction-free (Bareiss) determinants of Sylvester matrices, and
 * Newton interpolation.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace cmbound {

/* Element of Z/pZ for p = 2^61 - 1. */
struct ModP
{
    static constexpr std::uint64_t modulus = (std::uint64_t{ 1 } << 61) - 1;
    std::uint64_t v = 0;

    ModP() = default;
    ModP(long long x)
    {
        long long r = x % static_cast<long long>(modulus);
        v = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(modulus) : r);
    }
    explicit ModP(mpz_class const & x)
    {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), modulus);
        v = r.get_ui();
    }

    static ModP raw(std::uint64_t x)
    {
        ModP m;
        m.v = x;
        return m;
    }

    friend ModP operator+(ModP a, ModP b)
    {
        std::uint64_t s = a.v + b.v;
        return raw(s >= modulus ? s - modulus : s);
    }
    friend ModP operator-(ModP a, ModP b) { return raw(a.v >= b.v ? a.v - b.v : a.v + modulus - b.v); }
    ModP operator-() const { return raw(v == 0 ? 0 : modulus - v); }
    friend ModP operator*(ModP a, ModP b)
    {
        unsigned __int128 p = static_cast<unsigned __int128>(a.v) * b.v;
        std::uint64_t lo = static_cast<std::uint64_t>(p & modulus);
        std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
        std::uint64_t s = lo + hi;
        return raw(s >= modulus ? s - modulus : s);
    }
    ModP pow(std::uint64_t e) const
    {
        ModP r = 1, b = *this;
        while (e) {
            if (e & 1)
                r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    ModP inverse() const
    {
        if (v == 0)
            throw invalid_argument("inverse of zero mod p");
        return pow(modulus - 2);
    }
    friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
    ModP & operator+=(ModP b) { return *this = *this + b; }
    ModP & operator-=(ModP b) { return *this = *this - b; }
    ModP & operator*=(ModP b) { return *this = *this * b; }
    friend bool operator==(ModP a, ModP b) { return a.v == b.v; }
    friend bool operator!=(ModP a, ModP b) { return a.v != b.v; }
};

inline bool is_zero(mpz_class const & x) { return sgn(x) == 0; }
inline bool is_zero(mpq_class const & x) { return sgn(x) == 0; }
inline bool is_zero(ModP x) { return x.v == 0; }

/* exact division in an integral domain (fields: ordinary division) */
inline mpz_class exact_div(mpz_class const & a, mpz_class const & b)
{
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}
inline mpq_class exact_div(mpq_class const & a, mpq_class const & b) { return a / b; }
inline ModP exact_div(ModP a, ModP b) { return a / b; }

/* Dense univariate polynomial, coefficient i multiplies x^i; no trailing zeros. */
template <class T>
class Poly
{
    std::vector<T> c_;

    void trim()
    {
        while (!c_.empty() && cmbound::is_zero(c_.back()))
            c_.pop_back();
    }

  public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs)
        : c_(std::move(coeffs))
    {
        trim();
    }
    static Poly constant(T const & x) { return Poly(std::vector<T>{ x }); }
    static Poly monomial(T const & x, std::size_t deg)
    {
        std::vector<T> v(deg + 1, T(0));
        v[deg] = x;
        return Poly(std::move(v));
    }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::vector<T> const & coeffs() const noexcept { return c_; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    T const & leading() const { return c_.back(); }

    T operator()(T const & x) const
    {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    friend Poly operator+(Poly const & a, Poly const & b)
    {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }

    Poly operator-() const
    {
        std::vector<T> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[i] = -c_[i];
        return Poly(std::move(r));
    }

    friend Poly operator-(Poly const & a, Poly const & b) { return a + (-b); }

    friend Poly operator*(Poly const & a, Poly const & b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (cmbound::is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }

    friend Poly operator*(Poly const & a, T const & s)
    {
        std::vector<T> r(a.c_);
        for (auto & x : r)
            x = x * s;
        return Poly(std::move(r));
    }

    friend bool operator==(Poly const & a, Poly const & b) { return a.c_ == b.c_; }
    friend bool operator!=(Poly const & a, Poly const & b) { return !(a == b); }

    /* Euclidean division over a field, or by a divisor with unit leading coefficient */
    std::pair<Poly, Poly> divmod(Poly const & d) const
    {
        if (d.is_zero())
            throw invalid_argument("polynomial division by zero");
        std::vector<T> rem(c_);
        int dd = d.degree();
        if (degree() < dd)
            return { Poly{}, *this };
        std::vector<T> q(static_cast<std::size_t>(degree() - dd + 1), T(0));
        for (int i = degree(); i >= dd; --i) {
            if (cmbound::is_zero(rem[static_cast<std::size_t>(i)]))
                continue;
            T f = exact_div(rem[static_cast<std::size_t>(i)], d.leading());
            q[static_cast<std::size_t>(i - dd)] = f;
            for (int j = 0; j <= dd; ++j)
                rem[static_cast<std::size_t>(i - dd + j)] = rem[static_cast<std::size_t>(i - dd + j)] - f * d.c_[static_cast<std::size_t>(j)];
        }
        return { Poly(std::move(q)), Poly(std::move(rem)) };
    }

    Poly derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<T> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(r));
    }
};

using ZPoly = Poly<mpz_class>;
using QPoly = Poly<mpq_class>;
using FpPoly = Poly<ModP>;

/* Monic gcd over a field. */
template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b)
{
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    T lc = a.leading();
    std::vector<T> v = a.coeffs();
    for (auto & x : v)
        x = exact_div(x, lc);
    return Poly<T>(std::move(v));
}

inline QPoly to_q(ZPoly const & p)
{
    std::vector<mpq_class> v;
    for (auto const & x : p.coeffs())
        v.emplace_back(x);
    return QPoly(std::move(v));
}

inline FpPoly to_fp(ZPoly const & p)
{
    std::vector<ModP> v;
    for (auto const & x : p.coeffs())
        v.emplace_back(x);
    return FpPoly(std::move(v));
}

inline mpz_class content(ZPoly const & p)
{
    mpz_class g = 0;
    for (auto const & x : p.coeffs())
        g = gcd(g, x);
    return g;
}

/* Scales a rational polynomial to a primitive integer one with positive leading coefficient. */
inline ZPoly primitive_part(QPoly const & p)
{
    if (p.is_zero())
        return {};
    mpz_class den = 1;
    for (auto const & x : p.coeffs())
        den = lcm(den, mpz_class(x.get_den()));
    std::vector<mpz_class> v;
    for (auto const & x : p.coeffs()) {
        mpq_class y = x * den;
        v.push_back(y.get_num());
    }
    ZPoly z(std::move(v));
    mpz_class g = content(z);
    if (sgn(z.leading()) < 0)
        g = -g;
    std::vector<mpz_class> w;
    for (auto const & x : z.coeffs())
        w.push_back(exact_div(x, g));
    return ZPoly(std::move(w));
}

/* Integer polynomial as coefficient list if all coefficients are integral. */
inline ZPoly to_z_exact(QPoly const & p)
{
    std::vector<mpz_class> v;
    for (auto const & x : p.coeffs()) {
        if (x.get_den() != 1)
            throw invalid_argument("polynomial has non-integral coefficient");
        v.push_back(x.get_num());
    }
    return ZPoly(std::move(v));
}

inline std::string poly_to_string(ZPoly const & p, char var = 'x')
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        mpz_class c = p.coeff(static_cast<std::size_t>(i));
        if (sgn(c) == 0)
            continue;
        mpz_class a = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        bool unit = (a == 1);
        if (i == 0 || !unit)
            os << a.get_str();
        if (i > 0) {
            if (!unit)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

/* Determinant of a square matrix over an integral domain by Bareiss elimination. */
template <class T>
T bareiss_determinant(std::vector<std::vector<T>> m)
{
    std::size_t n = m.size();
    if (n == 0)
        return T(1);
    T sign(1);
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t r = k + 1;
            while (r < n && is_zero(m[r][k]))
                ++r;
            if (r == n)
                return T(0);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/*
 * Resultant of f and g with respect to formal degrees df >= deg f and
 * dg >= deg g (Sylvester determinant). With f monic and df = deg f this
 * equals prod_{f(b)=0} g(b), independently of whether g's leading
 * coefficient vanishes.
 */
template <class T>
T resultant(Poly<T> const & f, int df, Poly<T> const & g, int dg)
{
    if (f.degree() > df || g.degree() > dg)
        throw invalid_argument("formal degree below actual degree");
    std::size_t n = static_cast<std::size_t>(df + dg);
    if (n == 0)
        return T(1);
    std::vector<std::vector<T>> s(n, std::vector<T>(n, T(0)));
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j <= df; ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + df - j)] = f.coeff(static_cast<std::size_t>(j));
    for (int i = 0; i < df; ++i)
        for (int j = 0; j <= dg; ++j)
            s[static_cast<std::size_t>(dg + i)][static_cast<std::size_t>(i + dg - j)] = g.coeff(static_cast<std::size_t>(j));
    return bareiss_determinant(std::move(s));
}

/* Newton interpolation through (xs[i], ys[i]) over a field. */
template <class T>
Poly<T> interpolate(std::vector<T> const & xs, std::vector<T> ys)
{
    std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j)
                break;
        }
    Poly<T> acc;
    for (std::size_t i = n; i-- > 0;) {
        /* acc = acc * (x - xs[i]) + ys[i] */
        acc = acc * Poly<T>(std::vector<T>{ -xs[i], T(1) }) + Poly<T>::constant(ys[i]);
    }
    return acc;
}

/* Sparse bivariate integer polynomial; key = (deg_x, deg_y). */
class BiPoly
{
    std::map<std::pair<int, int>, mpz_class> terms_;

    void clean()
    {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (sgn(it->second) == 0) ? terms_.erase(it) : std::next(it);
    }

  public:
    BiPoly() = default;

    static BiPoly constant(mpz_class const & c)
    {
        BiPoly p;
        p.terms_[{ 0, 0 }] = c;
        p.clean();
        return p;
    }
    static BiPoly x() { return term(1, 1, 0); }
    static BiPoly y() { return term(1, 0, 1); }
    static BiPoly term(mpz_class const & c, int dx, int dy)
    {
        BiPoly p;
        p.terms_[{ dx, dy }] = c;
        p.clean();
        return p;
    }
    /* g(x) or g(y) as a bivariate polynomial */
    static BiPoly from_x(ZPoly const & g)
    {
        BiPoly p;
        for (int i = 0; i <= g.degree(); ++i)
            p.terms_[{ i, 0 }] = g.coeff(static_cast<std::size_t>(i));
        p.clean();
        return p;
    }
    static BiPoly from_y(ZPoly const & g) { return from_x(g).swapped(); }

    std::map<std::pair<int, int>, mpz_class> const & terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    int deg_x() const
    {
        int d = is_zero() ? -1 : 0;
        for (auto const & [k, v] : terms_)
            d = std::max(d, k.first);
        return d;
    }
    int deg_y() const
    {
        int d = is_zero() ? -1 : 0;
        for (auto const & [k, v] : terms_)
            d = std::max(d, k.second);
        return d;
    }

    friend BiPoly operator+(BiPoly a, BiPoly const & b)
    {
        for (auto const & [k, v] : b.terms_)
            a.terms_[k] += v;
        a.clean();
        return a;
    }
    BiPoly operator-() const
    {
        BiPoly r = *this;
        for (auto & [k, v] : r.terms_)
            v = -v;
        return r;
    }
    friend BiPoly operator-(BiPoly const & a, BiPoly const & b) { return a + (-b); }
    friend BiPoly operator*(BiPoly const & a, BiPoly const & b)
    {
        BiPoly r;
        for (auto const & [ka, va] : a.terms_)
            for (auto const & [kb, vb] : b.terms_)
                r.terms_[{ ka.first + kb.first, ka.second + kb.second }] += va * vb;
        r.clean();
        return r;
    }
    BiPoly pow(unsigned e) const
    {
        BiPoly r = constant(1), b = *this;
        while (e) {
            if (e & 1)
                r = r * b;
            e >>= 1;
            if (e)
                b = b * b;
        }
        return r;
    }
    friend bool operator==(BiPoly const & a, BiPoly const & b) { return a.terms_ == b.terms_; }

    BiPoly swapped() const
    {
        BiPoly r;
        for (auto const & [k, v] : terms_)
            r.terms_[{ k.second, k.first }] = v;
        return r;
    }

    /* coefficients of y^j, each a polynomial in x */
    std::vector<ZPoly> coeffs_in_y() const
    {
        int dy = deg_y();
        std::vector<std::vector<mpz_class>> c(static_cast<std::size_t>(dy + 1),
                                              std::vector<mpz_class>(static_cast<std::size_t>(deg_x() + 1), 0));
        for (auto const & [k, v] : terms_)
            c[static_cast<std::size_t>(k.second)][static_cast<std::size_t>(k.first)] = v;
        std::vector<ZPoly> out;
        for (auto & row : c)
            out.emplace_back(std::move(row));
        return out;
    }

    /* coefficients of x^i, each a polynomial in y */
    std::vector<ZPoly> coeffs_in_x() const { return swapped().coeffs_in_y(); }

    /* F(x0, y) as a polynomial in y */
    ZPoly eval_x(mpz_class const & x0) const
    {
        std::vector<mpz_class> c(static_cast<std::size_t>(std::max(deg_y(), 0) + 1), 0);
        for (auto const & [k, v] : terms_) {
            mpz_class xp;
            mpz_pow_ui(xp.get_mpz_t(), x0.get_mpz_t(), static_cast<unsigned long>(k.first));
            c[static_cast<std::size_t>(k.second)] += v * xp;
        }
        return ZPoly(std::move(c));
    }

    FpPoly eval_x(ModP x0) const
    {
        std::vector<ModP> c(static_cast<std::size_t>(std::max(deg_y(), 0) + 1), ModP(0));
        for (auto const & [k, v] : terms_)
            c[static_cast<std::size_t>(k.second)] += ModP(v) * x0.pow(static_cast<std::uint64_t>(k.first));
        return FpPoly(std::move(c));
    }

    mpz_class content() const
    {
        mpz_class g = 0;
        for (auto const & [k, v] : terms_)
            g = gcd(g, v);
        return g;
    }

    BiPoly divided_by(mpz_class const & c) const
    {
        BiPoly r = *this;
        for (auto & [k, v] : r.terms_)
            v = exact_div(v, c);
        return r;
    }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        /* descending total degree, then descending x degree */
        std::vector<std::pair<std::pair<int, int>, mpz_class>> items(terms_.begin(), terms_.end());
        std::sort(items.begin(), items.end(), [](auto const & a, auto const & b) {
            int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
            if (ta != tb)
                return ta > tb;
            return a.first.first > b.first.first;
        });
        for (auto const & [k, c] : items) {
            mpz_class a = abs(c);
            if (first)
                os << (sgn(c) < 0 ? "-" : "");
            else
                os << (sgn(c) < 0 ? " - " : " + ");
            first = false;
            bool unit = (a == 1);
            bool has_var = k.first > 0 || k.second > 0;
            std::string mono;
            auto add = [&](char v, int e) {
                if (e == 0)
                    return;
                if (!mono.empty())
                    mono += "*";
                mono += v;
                if (e > 1)
                    mono += "^" + std::to_string(e);
            };
            add('x', k.first);
            add('y', k.second);
            if (!has_var)
                os << a.get_str();
            else if (unit)
                os << mono;
            else
                os << a.get_str() << "*" << mono;
        }
        return os.str();
    }
};

} // namespace cmbound
