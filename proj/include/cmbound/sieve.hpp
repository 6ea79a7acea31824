#pragma once

/*
 * Special points on plane curves F(x, y) = 0 in the (j1, j2) plane.
 *
 * A curve is parsed from text, stripped of coordinate fibers x = const and
 * y = const, and scanned: for discriminants D1, D2 the pair is a hit when
 * gcd(Res_y(H_D2(y), F(x, y)), H_D1(x)) is nonconstant. A modular image of
 * the resultant filters pairs first; survivors are confirmed over Q.
 */

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bound_pipeline.hpp"
#include "discriminant.hpp"
#include "error.hpp"
#include "hilbert.hpp"
#include "poly.hpp"

namespace cmbound {

struct CurveSpec
{
    BiPoly poly;
    int deg_x = 0, deg_y = 0;
    int defining_field_degree = 1;
    std::vector<std::string> warnings;
};

inline constexpr unsigned max_parse_exponent = 256;

namespace detail {

/*
 * expr    := term (('+' | '-') term)*
 * term    := unary ('*' unary)*
 * unary   := ('+' | '-') unary | power
 * power   := primary ('^' integer)?
 * primary := integer | 'x' | 'y' | '(' expr ')'
 */
class CurveParser
{
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    [[noreturn]] void fail(std::string const & what) const { throw parse_error(what, pos_); }

    std::string digits()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return std::string(s_.substr(start, pos_ - start));
    }

    BiPoly primary()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (c == 'x') {
            ++pos_;
            return BiPoly::x();
        }
        if (c == 'y') {
            ++pos_;
            return BiPoly::y();
        }
        if (c == '(') {
            ++pos_;
            BiPoly e = expr();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return BiPoly::constant(mpz_class(digits()));
        fail(std::string("unexpected character '") + c + "'");
    }

    BiPoly power()
    {
        BiPoly b = primary();
        if (peek('^')) {
            ++pos_;
            std::size_t at = pos_;
            std::string d = digits();
            if (d.size() > 4 || std::stoul(d) > max_parse_exponent) {
                pos_ = at;
                fail("exponent too large");
            }
            b = b.pow(static_cast<unsigned>(std::stoul(d)));
        }
        return b;
    }

    BiPoly unary()
    {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    BiPoly term()
    {
        BiPoly t = unary();
        while (peek('*')) {
            ++pos_;
            t = t * unary();
        }
        return t;
    }

    BiPoly expr()
    {
        BiPoly e = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                e = e + term();
            } else if (peek('-')) {
                ++pos_;
                e = e - term();
            } else {
                return e;
            }
        }
    }

  public:
    explicit CurveParser(std::string_view s)
        : s_(s)
    {
    }

    BiPoly parse()
    {
        BiPoly e = expr();
        skip();
        if (pos_ != s_.size())
            fail(std::string("unexpected character '") + s_[pos_] + "'");
        return e;
    }
};

} // namespace detail

/* Makes F primitive with a positive leading term and fills in the degrees. */
inline CurveSpec make_curve(BiPoly f, int field_degree = 1)
{
    if (f.is_zero())
        throw parse_error("zero polynomial", 0);
    if (field_degree < 1)
        throw invalid_argument("field degree must be >= 1");
    CurveSpec c;
    mpz_class g = f.content();
    if (sgn(f.terms().rbegin()->second) < 0)
        g = -g;
    if (abs(g) != 1)
        c.warnings.push_back("removed content " + mpz_class(abs(g)).get_str());
    c.poly = f.divided_by(g);
    c.deg_x = c.poly.deg_x();
    c.deg_y = c.poly.deg_y();
    c.defining_field_degree = field_degree;
    return c;
}

inline CurveSpec parse_curve(std::string_view text, int field_degree = 1)
{
    return make_curve(detail::CurveParser(text).parse(), field_degree);
}

/* A coordinate fiber component: variable = a root of poly. */
struct FiberComponent
{
    char variable = 'x';
    ZPoly poly;

    std::string to_string() const { return poly_to_string(poly, variable) + " = 0"; }
};

struct StripResult
{
    CurveSpec curve;
    std::vector<FiberComponent> z_prime;
};

namespace detail {

/* Primitive gcd over Q of a list of integer polynomials. */
inline ZPoly gcd_of(std::vector<ZPoly> const & ps)
{
    QPoly g;
    for (auto const & p : ps)
        g = poly_gcd(g, to_q(p));
    return primitive_part(g);
}

/* F / g(x) for a primitive g dividing every coefficient of y^j. */
inline BiPoly divide_by_x_factor(BiPoly const & f, ZPoly const & g)
{
    auto rows = f.coeffs_in_y();
    BiPoly out;
    QPoly gq = to_q(g);
    for (std::size_t j = 0; j < rows.size(); ++j) {
        auto [q, r] = to_q(rows[j]).divmod(gq);
        if (!r.is_zero())
            throw error("internal: fiber factor does not divide");
        ZPoly qz = to_z_exact(q);
        for (int i = 0; i <= qz.degree(); ++i)
            out = out + BiPoly::term(qz.coeff(static_cast<std::size_t>(i)), i, static_cast<int>(j));
    }
    return out;
}

} // namespace detail

/*
 * Removes every factor of F depending on one variable only. The x-fibers
 * come from the gcd of the y^j coefficients, the y-fibers from the gcd of
 * the x^i coefficients.
 */
inline StripResult strip_degenerate(CurveSpec const & c)
{
    BiPoly f = c.poly;
    StripResult res;
    ZPoly gx = detail::gcd_of(f.coeffs_in_y());
    if (gx.degree() > 0) {
        f = detail::divide_by_x_factor(f, gx);
        res.z_prime.push_back({ 'x', gx });
    }
    ZPoly gy = detail::gcd_of(f.coeffs_in_x());
    if (gy.degree() > 0) {
        f = detail::divide_by_x_factor(f.swapped(), gy).swapped();
        res.z_prime.push_back({ 'y', gy });
    }
    if (f.deg_x() < 1 || f.deg_y() < 1)
        throw hypothesis_violation("curve " + c.poly.to_string() + " is a union of coordinate fibers");
    res.curve = make_curve(f, c.defining_field_degree);
    res.curve.warnings = c.warnings;
    return res;
}

/* c9 = max(deg_x, deg_y) * [field of definition : Q] */
inline double derive_c9(CurveSpec const & c)
{
    return static_cast<double>(std::max(c.deg_x, c.deg_y)) * c.defining_field_degree;
}

struct SpecialPointHit
{
    Discriminant d1, d2;
    bool same_cm_field = false;
    ZPoly witness; /* primitive gcd of the resultant and H_D1, in x */
};

/* Res_y(h(y), F(x, y)) as a polynomial in x, exact, by interpolation. */
inline ZPoly resultant_in_x(BiPoly const & f, ZPoly const & h)
{
    int dh = h.degree(), dy = f.deg_y();
    int n = dh * f.deg_x();
    std::vector<mpq_class> xs, ys;
    for (int i = 0; i <= n; ++i) {
        mpz_class x0 = i;
        xs.emplace_back(x0);
        ys.emplace_back(resultant(h, dh, f.eval_x(x0), dy));
    }
    return to_z_exact(interpolate(xs, ys));
}

inline FpPoly resultant_in_x_mod_p(BiPoly const & f, FpPoly const & h)
{
    int dh = h.degree(), dy = f.deg_y();
    int n = dh * f.deg_x();
    std::vector<ModP> xs, ys;
    for (int i = 0; i <= n; ++i) {
        ModP x0(i);
        xs.push_back(x0);
        ys.push_back(resultant(h, dh, f.eval_x(x0), dy));
    }
    return interpolate(xs, ys);
}

/* Exact confirmation of a candidate pair; empty witness when not a hit. */
inline ZPoly exact_witness(ZPoly const & r, ZPoly const & h1)
{
    if (r.is_zero())
        return primitive_part(to_q(h1));
    QPoly g = poly_gcd(to_q(r), to_q(h1));
    if (g.degree() < 1)
        return {};
    return primitive_part(g);
}

/* Re-derives a hit: the witness must divide both H_D1 and the resultant. */
inline bool verify_hit(BiPoly const & f, SpecialPointHit const & hit, ZPoly const & h1, ZPoly const & h2)
{
    if (hit.witness.degree() < 1)
        return false;
    ZPoly r = resultant_in_x(f, h2);
    QPoly w = to_q(hit.witness);
    bool divides_r = r.is_zero() || to_q(r).divmod(w).second.is_zero();
    bool divides_h = to_q(h1).divmod(w).second.is_zero();
    bool field_flag = hit.same_cm_field == (hit.d1.fundamental_part() == hit.d2.fundamental_part());
    return divides_r && divides_h && field_flag;
}

inline constexpr i64 default_sieve_cap = 10'000;
inline constexpr i64 default_max_scan_cap = 2'000;

struct ScanOptions
{
    i64 max_cap = default_max_scan_cap;
};

/* All hits (D1, D2) with 3 <= |Di| <= cap, ordered by (|D1|, |D2|). */
inline std::vector<SpecialPointHit> special_point_scan(CurveSpec const & c, i64 cap, ScanOptions const & opt = {})
{
    if (cap < 3)
        throw invalid_argument("scan cap must be >= 3");
    if (cap > opt.max_cap)
        throw resource_error("scan cap " + std::to_string(cap) + " exceeds limit " + std::to_string(opt.max_cap));
    if (c.poly.deg_x() < 1 || c.poly.deg_y() < 1)
        throw hypothesis_violation("scan needs a curve depending on both coordinates");

    auto hs = singular_moduli_up_to(cap, std::max(cap, default_hilbert_limit));
    std::vector<FpPoly> hp;
    for (auto const & h : hs)
        hp.push_back(to_fp(h.poly));

    std::vector<SpecialPointHit> hits;
    for (std::size_t j = 0; j < hs.size(); ++j) {
        FpPoly rp = resultant_in_x_mod_p(c.poly, hp[j]);
        std::optional<ZPoly> exact;
        for (std::size_t i = 0; i < hs.size(); ++i) {
            if (!rp.is_zero() && poly_gcd(rp, hp[i]).degree() < 1)
                continue;
            if (!exact)
                exact = resultant_in_x(c.poly, hs[j].poly);
            ZPoly w = exact_witness(*exact, hs[i].poly);
            if (w.degree() < 1)
                continue;
            Discriminant const & d1 = hs[i].discriminant;
            Discriminant const & d2 = hs[j].discriminant;
            hits.push_back({ d1, d2, d1.fundamental_part() == d2.fundamental_part(), std::move(w) });
        }
    }
    std::sort(hits.begin(), hits.end(), [](auto const & a, auto const & b) {
        return std::pair(a.d1.abs(), a.d2.abs()) < std::pair(b.d1.abs(), b.d2.abs());
    });
    return hits;
}

enum class CapVsBound
{
    cap_reached_bound,
    cap_below_bound,
};

inline char const * to_string(CapVsBound v)
{
    return v == CapVsBound::cap_reached_bound ? "cap_reached_bound" : "cap_below_bound";
}

struct SieveReport
{
    CurveSpec curve;    /* as given */
    CurveSpec stripped;
    std::vector<FiberComponent> z_prime;
    double c9 = 1;
    BoundReport c11;
    i64 enumeration_cap = 0;
    CapVsBound cap_vs_bound = CapVsBound::cap_below_bound;
    std::vector<SpecialPointHit> hits;
};

struct SieveOptions
{
    i64 max_cap = default_max_scan_cap;
    EpsGrid grid = default_eps_grid();
};

inline SieveReport sieve(CurveSpec const & c, std::optional<i64> cap_override = std::nullopt, SieveOptions const & opt = {})
{
    SieveReport rep;
    rep.curve = c;
    StripResult s = strip_degenerate(c);
    rep.stripped = s.curve;
    rep.z_prime = std::move(s.z_prime);
    rep.c9 = derive_c9(rep.stripped);
    rep.c11 = andre_oort_c11({ 2, rep.c9 }, opt.grid);

    i64 cap = cap_override.value_or(default_sieve_cap);
    if (!rep.c11.threshold_exceeds(cap))
        cap = rep.c11.threshold->get_si();
    rep.enumeration_cap = cap;
    rep.cap_vs_bound = rep.c11.threshold_exceeds(cap) ? CapVsBound::cap_below_bound : CapVsBound::cap_reached_bound;
    rep.hits = special_point_scan(rep.stripped, rep.enumeration_cap, { opt.max_cap });
    return rep;
}

} // namespace cmbound
