#include <gtest/gtest.h>

#include <cmbound/arith.hpp>
#include <cmbound/discriminant.hpp>
#include <cmbound/error.hpp>
#include <cmbound/kronecker.hpp>

#include "oracles.hpp"

using namespace cmbound;

TEST(Arith, ExtGcdBezout)
{
    for (i64 a = -40; a <= 40; ++a)
        for (i64 b = -40; b <= 40; ++b) {
            auto r = ext_gcd(a, b);
            EXPECT_EQ(r.g, std::gcd(a, b));
            EXPECT_EQ(a * r.x + b * r.y, r.g);
        }
}

TEST(Arith, FactorReassembles)
{
    for (i64 n = 1; n <= 5000; ++n) {
        i64 m = 1;
        for (auto const & pp : factor(n)) {
            EXPECT_TRUE(oracle::powmod(2, pp.p - 1, pp.p) == 1 || pp.p == 2);
            for (int i = 0; i < pp.e; ++i)
                m *= pp.p;
        }
        EXPECT_EQ(m, n);
    }
}

TEST(Arith, PhiAndPrimes)
{
    for (i64 n = 1; n <= 500; ++n) {
        i64 cnt = 0;
        for (i64 k = 1; k <= n; ++k)
            cnt += std::gcd(k, n) == 1;
        EXPECT_EQ(euler_phi(n), cnt) << n;
    }
    auto ps = primes_up_to(1000);
    EXPECT_EQ(ps.size(), 168u);
    for (i64 p : ps)
        EXPECT_TRUE(is_prime(p));
}

TEST(Kronecker, MatchesDefinition)
{
    for (i64 a = -60; a <= 60; ++a)
        for (i64 n = -60; n <= 60; ++n)
            EXPECT_EQ(kronecker(a, n), oracle::kronecker(a, n)) << a << " " << n;
}

TEST(Kronecker, Conventions)
{
    EXPECT_EQ(kronecker(1, 0), 1);
    EXPECT_EQ(kronecker(2, 0), 0);
    EXPECT_EQ(kronecker(-1, -1), -1);
    EXPECT_EQ(kronecker(3, 2), -1);
    EXPECT_EQ(kronecker(7, 2), 1);
}

TEST(Discriminant, Decomposition)
{
    Discriminant d(-300);
    EXPECT_EQ(d.fundamental_part(), -3);
    EXPECT_EQ(d.conductor(), 10);
    EXPECT_FALSE(d.is_fundamental());
    EXPECT_TRUE(Discriminant(-84).is_fundamental());
    EXPECT_EQ(Discriminant(-16).fundamental_part(), -4);
    EXPECT_EQ(Discriminant(-16).conductor(), 2);
    EXPECT_EQ(Discriminant::from_parts(-7, 3).value(), -63);
}

TEST(Discriminant, FundamentalAgreesWithOracle)
{
    for (i64 d = -3; d >= -5000; --d) {
        if (!Discriminant::is_valid(d))
            continue;
        Discriminant disc(d);
        EXPECT_EQ(disc.is_fundamental(), oracle::is_fundamental(d)) << d;
        EXPECT_EQ(disc.conductor() * disc.conductor() * disc.fundamental_part(), d);
        EXPECT_TRUE(oracle::is_fundamental(disc.fundamental_part()));
    }
}

TEST(Discriminant, RejectsInvalid)
{
    EXPECT_THROW(Discriminant(-5), invalid_argument);
    EXPECT_THROW(Discriminant(5), invalid_argument);
    EXPECT_THROW(Discriminant(0), invalid_argument);
    EXPECT_THROW(Discriminant::from_parts(-12, 1), invalid_argument);
}
