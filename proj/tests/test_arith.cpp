#include <frobenius/arith.hpp>

#include "support/brute.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <numeric>
#include <random>

namespace {

using frobenius::BezoutCertificate;
using frobenius::Int;

constexpr Int kMax = std::numeric_limits<Int>::max();
constexpr Int kMin = std::numeric_limits<Int>::min();

TEST(Gcd, Examples)
{
    EXPECT_EQ(frobenius::gcd<Int>(3, 7), 1);
    EXPECT_EQ(frobenius::gcd<Int>(12, 25), 1);
    EXPECT_EQ(frobenius::gcd<Int>(0, 5), 5);
    EXPECT_EQ(frobenius::gcd<Int>(0, 0), 0);
    EXPECT_EQ(frobenius::gcd<Int>(-12, 18), 6);
    EXPECT_EQ(frobenius::gcd<Int>(kMax, kMax), kMax);
}

TEST(Gcd, RejectsMinimumValue)
{
    EXPECT_THROW(frobenius::gcd<Int>(kMin, 3), frobenius::OverflowError);
}

TEST(Gcd, RecursionInvariantAndCommutativity)
{
    std::mt19937_64 rng(0x9cd);
    std::uniform_int_distribution<Int> dist(-1'000'000, 1'000'000);
    for (int i = 0; i < 2000; ++i) {
        const Int u = dist(rng);
        const Int v = dist(rng);
        const Int g = frobenius::gcd(u, v);
        EXPECT_EQ(g, std::gcd(u, v));
        EXPECT_EQ(g, frobenius::gcd(v, u));
        if (v != 0) {
            EXPECT_EQ(g, frobenius::gcd(v, u % v));
        }
    }
}

TEST(ExtendedGcd, Examples)
{
    // Values cross-checked against a scan over x in [-|b|-1, |b|+1].
    EXPECT_EQ(frobenius::extended_gcd<Int>(3, 7), (BezoutCertificate<Int>{1, -2, 1}));
    EXPECT_EQ(frobenius::extended_gcd<Int>(5, 8), (BezoutCertificate<Int>{1, -3, 2}));
    EXPECT_EQ(frobenius::extended_gcd<Int>(7, 7), (BezoutCertificate<Int>{7, 0, 1}));
    EXPECT_EQ(frobenius::extended_gcd<Int>(12, 25), (BezoutCertificate<Int>{1, -2, 1}));
    EXPECT_EQ(frobenius::extended_gcd<Int>(4, 6), (BezoutCertificate<Int>{2, -1, 1}));
    EXPECT_EQ(frobenius::extended_gcd<Int>(-3, 7), (BezoutCertificate<Int>{1, 2, 1}));
}

TEST(ExtendedGcd, ZeroArguments)
{
    EXPECT_THROW(frobenius::extended_gcd<Int>(0, 0), frobenius::BothZero);
    EXPECT_EQ(frobenius::extended_gcd<Int>(0, 5), (BezoutCertificate<Int>{5, 0, 1}));
    EXPECT_EQ(frobenius::extended_gcd<Int>(-4, 0), (BezoutCertificate<Int>{4, -1, 0}));
}

TEST(ExtendedGcd, TieBreaksTowardPositive)
{
    // b/g = 2: both x' = 1 and x' = -1 have |x'| = 1.
    const auto cert = frobenius::extended_gcd<Int>(3, 2);
    EXPECT_EQ(cert, (BezoutCertificate<Int>{1, 1, -1}));
}

TEST(ExtendedGcd, RejectsOutOfWidth)
{
    EXPECT_THROW(frobenius::extended_gcd<Int>(kMin, 3), frobenius::OverflowError);
    EXPECT_THROW(frobenius::extended_gcd<Int>(3, kMin), frobenius::OverflowError);
}

TEST(ExtendedGcd, LargeMagnitudesStayExact)
{
    const Int a = kMax;
    const Int b = kMax - 1;
    const auto cert = frobenius::extended_gcd(a, b);
    EXPECT_EQ(cert.g, 1);
    const __int128 lhs = static_cast<__int128>(a) * cert.x_prime + static_cast<__int128>(b) * cert.y_prime;
    EXPECT_TRUE(lhs == 1);
}

TEST(ExtendedGcd, CertificateIdentityAndCanonicalForm)
{
    std::mt19937_64 rng(0xbe2);
    std::uniform_int_distribution<Int> dist(-5000, 5000);
    for (int i = 0; i < 3000; ++i) {
        const Int a = dist(rng);
        const Int b = dist(rng);
        if (a == 0 && b == 0) {
            continue;
        }
        const auto cert = frobenius::extended_gcd(a, b);
        ASSERT_EQ(cert.g, std::gcd(a, b));
        ASSERT_EQ(a * cert.x_prime + b * cert.y_prime, cert.g) << a << " " << b;
        if (b != 0) {
            const auto [x, y] = brute::bezout_by_scan(a, b);
            ASSERT_EQ(cert.x_prime, x) << a << " " << b;
            ASSERT_EQ(cert.y_prime, y) << a << " " << b;
        }
    }
}

TEST(ModInverse, Examples)
{
    EXPECT_EQ(frobenius::mod_inverse<Int>(5, 8), 5);
    EXPECT_EQ(frobenius::mod_inverse<Int>(3, 7), 5);
    EXPECT_EQ(frobenius::mod_inverse<Int>(1, 1), 0);
    EXPECT_EQ(frobenius::mod_inverse<Int>(-2, 7), 3);
}

TEST(ModInverse, Errors)
{
    EXPECT_THROW(frobenius::mod_inverse<Int>(4, 6), frobenius::NotInvertible);
    EXPECT_THROW(frobenius::mod_inverse<Int>(0, 5), frobenius::NotInvertible);
    EXPECT_THROW(frobenius::mod_inverse<Int>(3, 0), frobenius::InvalidArgument);
    EXPECT_THROW(frobenius::mod_inverse<Int>(3, -7), frobenius::InvalidArgument);
}

TEST(ModInverse, MatchesScanOnSmallModuli)
{
    for (Int m = 1; m <= 60; ++m) {
        for (Int a = -70; a <= 70; ++a) {
            if (std::gcd(a, m) != 1) {
                continue;
            }
            const Int t = frobenius::mod_inverse(a, m);
            ASSERT_GE(t, 0);
            ASSERT_LT(t, m);
            ASSERT_EQ(t, brute::inverse_by_scan(a, m)) << a << " mod " << m;
            ASSERT_EQ(((a % m + m) % m * t) % m, 1 % m);
        }
    }
}

TEST(Checked, OverflowSurfacesAsError)
{
    EXPECT_THROW(frobenius::checked_add<Int>(kMax, 1), frobenius::OverflowError);
    EXPECT_THROW(frobenius::checked_sub<Int>(kMin, 1), frobenius::OverflowError);
    EXPECT_THROW(frobenius::checked_mul<Int>(Int{1} << 32, Int{1} << 31), frobenius::OverflowError);
    EXPECT_THROW(frobenius::checked_neg<Int>(kMin), frobenius::OverflowError);
    EXPECT_EQ(frobenius::checked_mul<Int>(-3, 4), -12);
}

TEST(Checked, FloorAndCeilDivision)
{
    EXPECT_EQ(frobenius::floor_div<Int>(7, 2), 3);
    EXPECT_EQ(frobenius::floor_div<Int>(-7, 2), -4);
    EXPECT_EQ(frobenius::floor_div<Int>(7, -2), -4);
    EXPECT_EQ(frobenius::ceil_div<Int>(7, 2), 4);
    EXPECT_EQ(frobenius::ceil_div<Int>(-7, 2), -3);
    EXPECT_EQ(frobenius::ceil_div<Int>(6, 3), 2);
    EXPECT_EQ(frobenius::floor_mod<Int>(-1, 7), 6);
}

TEST(Arith, WorksForNarrowTypes)
{
    static_assert(frobenius::gcd<int>(12, 18) == 6);
    static_assert(frobenius::extended_gcd<int>(3, 7) == BezoutCertificate<int>{1, -2, 1});
    static_assert(frobenius::mod_inverse<int>(5, 8) == 5);
    EXPECT_THROW(frobenius::checked_mul<std::int32_t>(1 << 20, 1 << 12), frobenius::OverflowError);
}

}  // namespace
