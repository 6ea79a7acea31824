#include <gtest/gtest.h>

#include <cmbound/poly.hpp>

#include <random>

using namespace cmbound;

namespace {

ZPoly zp(std::vector<long> c)
{
    std::vector<mpz_class> v(c.begin(), c.end());
    return ZPoly(std::move(v));
}

} // namespace

TEST(Poly, ArithmeticAndDivision)
{
    ZPoly a = zp({ -1, 0, 1 }); /* x^2 - 1 */
    ZPoly b = zp({ 1, 1 });     /* x + 1 */
    EXPECT_EQ(a * b, zp({ -1, -1, 1, 1 }));
    auto [q, r] = to_q(a).divmod(to_q(b));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(to_z_exact(q), zp({ -1, 1 }));
    EXPECT_EQ(a.derivative(), zp({ 0, 2 }));
    EXPECT_EQ(poly_to_string(zp({ -1728, 1 })), "x - 1728");
}

TEST(Poly, GcdOverQ)
{
    ZPoly f = zp({ -1, 1 }) * zp({ 2, 0, 1 });
    ZPoly g = zp({ -1, 1 }) * zp({ 3, 1 });
    EXPECT_EQ(primitive_part(poly_gcd(to_q(f), to_q(g))), zp({ -1, 1 }));
    EXPECT_EQ(poly_gcd(to_q(zp({ 1, 1 })), to_q(zp({ 2, 1 }))).degree(), 0);
}

TEST(Poly, ResultantIsProductOverRoots)
{
    /* f = (x - 2)(x - 3), Res(f, g) = g(2) g(3) */
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> c(-9, 9);
    ZPoly f = zp({ 6, -5, 1 });
    for (int it = 0; it < 200; ++it) {
        ZPoly g = zp({ c(rng), c(rng), c(rng), c(rng) });
        mpz_class expect = g(mpz_class(2)) * g(mpz_class(3));
        EXPECT_EQ(resultant(f, 2, g, 3), expect);
    }
}

TEST(Poly, ResultantModPAgreesWithExact)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> c(-1000, 1000);
    for (int it = 0; it < 100; ++it) {
        ZPoly f = zp({ c(rng), c(rng), c(rng), 1 });
        ZPoly g = zp({ c(rng), c(rng), c(rng), c(rng), c(rng) });
        EXPECT_EQ(resultant(to_fp(f), 3, to_fp(g), 4), ModP(resultant(f, 3, g, 4)));
    }
}

TEST(Poly, InterpolationRecovers)
{
    QPoly p = to_q(zp({ 5, -3, 0, 7, 1 }));
    std::vector<mpq_class> xs, ys;
    for (int i = 0; i < 5; ++i) {
        xs.emplace_back(i);
        ys.push_back(p(mpq_class(i)));
    }
    EXPECT_EQ(interpolate(xs, ys), p);
}

TEST(Poly, BareissMatchesCofactorExpansion)
{
    std::vector<std::vector<mpz_class>> m = { { 2, -1, 0 }, { 4, 3, 5 }, { -2, 7, 1 } };
    mpz_class det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    EXPECT_EQ(bareiss_determinant(m), det);
    std::vector<std::vector<mpz_class>> z = { { 0, 1 }, { 1, 0 } };
    EXPECT_EQ(bareiss_determinant(z), -1);
}

TEST(BiPoly, Basics)
{
    BiPoly f = BiPoly::x() * BiPoly::y() - BiPoly::constant(1);
    EXPECT_EQ(f.deg_x(), 1);
    EXPECT_EQ(f.deg_y(), 1);
    EXPECT_EQ(f.to_string(), "x*y - 1");
    EXPECT_EQ(f.swapped(), f);
    EXPECT_EQ(f.eval_x(mpz_class(3)), zp({ -1, 3 }));
    BiPoly g = (BiPoly::x() + BiPoly::y()).pow(3);
    EXPECT_EQ(g.terms().size(), 4u);
    EXPECT_EQ(g.content(), 1);
}
