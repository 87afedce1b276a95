#include <gtest/gtest.h>

#include <random>

#include "ea/exactnum.hpp"
#include "ea/linalg.hpp"

using namespace ea;

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_EQ(Rational::parse("-7").to_string(), "-7");
    EXPECT_EQ(Rational(0, 5).to_string(), "0");
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
}

TEST(Rational, SerializationRoundTrips) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int i = 0; i < 200; ++i) {
        long den = d(rng);
        if (den == 0) continue;
        Rational r(d(rng), den);
        EXPECT_EQ(Rational::parse(r.to_string()), r);
    }
}

TEST(Rational, FieldLaws) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-50, 50);
    auto draw = [&] {
        long den = 0;
        while (den == 0) den = d(rng);
        return Rational(d(rng), den);
    };
    for (int i = 0; i < 100; ++i) {
        Rational a = draw(), b = draw(), c = draw();
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Rational(1));
        EXPECT_EQ(a < b, a.raw() < b.raw());
    }
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, LargeValuesStayExact) {
    Rational x(1);
    for (int i = 1; i <= 40; ++i) x *= Rational(i, i + 1);
    EXPECT_EQ(x, Rational(1, 41));
    Rational big = Rational::parse("123456789012345678901234567890/7");
    EXPECT_EQ(big * Rational(7), Rational::parse("123456789012345678901234567890"));
}

TEST(QuadExt, GoldenRatio) {
    QuadExt phi = QuadExt::phi();
    EXPECT_EQ(phi * phi, phi + QuadExt(1));
    EXPECT_EQ(phi * phi.inverse(), QuadExt(1));
    EXPECT_EQ(phi.norm(), Rational(-1));
    EXPECT_EQ(phi.conjugate(), QuadExt(1) - phi);
}

TEST(QuadExt, ExactSign) {
    EXPECT_EQ(quad_sign(QuadExt(Rational(2), Rational(-1))), -1);  // 2 - sqrt5
    EXPECT_EQ(quad_sign(QuadExt(Rational(3), Rational(-1))), 1);   // 3 - sqrt5
    EXPECT_EQ(quad_sign(QuadExt(Rational(-9, 4), Rational(1))), -1);  // sqrt5 < 9/4
    EXPECT_EQ(quad_sign(QuadExt(Rational(-11, 5), Rational(1))), 1);  // sqrt5 > 11/5
    EXPECT_EQ(quad_sign(QuadExt()), 0);
    EXPECT_LT(QuadExt(2), QuadExt::phi() + QuadExt(1));
    EXPECT_GT(QuadExt::phi(), QuadExt(Rational(8, 5)));
    EXPECT_LT(QuadExt::phi(), QuadExt(Rational(13, 8)));
}

TEST(QuadExt, Printing) {
    EXPECT_EQ(QuadExt(Rational(1, 2), Rational(-3)).to_string(), "1/2 - 3*sqrt5");
    EXPECT_EQ(QuadExt(Rational(0), Rational(2)).to_string(), "2*sqrt5");
    EXPECT_EQ(QuadExt(Rational(4)).to_string(), "4");
    EXPECT_THROW(QuadExt().inverse(), std::domain_error);
}

TEST(Poly, Arithmetic) {
    Poly t = Poly::t();
    Poly p = (t - Poly(1)) * (t - Poly(2));
    EXPECT_EQ(p.to_string(), "t^2 - 3*t + 2");
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.evaluate(Rational(2)), Rational(0));
    EXPECT_EQ(p.coefficient(5), Rational(0));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((p / Rational(2)).coefficient(0), Rational(1));
    EXPECT_EQ(Poly().degree(), Poly::kZeroDegree);
}

TEST(Poly, RisingFactorialAndBinomial) {
    Poly t = Poly::t();
    EXPECT_EQ(rising_factorial(t, 0), Poly(1));
    EXPECT_EQ(rising_factorial(t, 3), t * (t + Poly(1)) * (t + Poly(2)));
    EXPECT_EQ(rising_factorial(Poly(Rational(1, 2)), 2).coefficient(0), Rational(3, 4));
    EXPECT_EQ(binomial(6, 2), Rational(15));
    EXPECT_EQ(binomial(6, 7), Rational(0));
    EXPECT_EQ(binomial(6, -1), Rational(0));
    // Pascal's rule.
    for (long n = 1; n < 12; ++n)
        for (long k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST(Matrix, RankDeterminantSolve) {
    Matrix<Rational> m(3, 3);
    long vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = Rational(vals[i][j]);
    EXPECT_EQ(m.rank(), 2);
    EXPECT_EQ(m.determinant(), Rational(0));
    EXPECT_EQ(m.nullspace().size(), 1u);
    m(2, 2) = Rational(10);
    EXPECT_EQ(m.determinant(), Rational(-3));
    Matrix<Rational> b(3, 1);
    b(0, 0) = Rational(1);
    b(1, 0) = Rational(2);
    b(2, 0) = Rational(3);
    EXPECT_EQ(m * m.solve(b), b);
    Matrix<Rational> singular(2, 2);
    EXPECT_THROW(singular.solve(Matrix<Rational>(2, 1)), std::domain_error);
}
