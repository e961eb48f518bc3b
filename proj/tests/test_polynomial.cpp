#include "cospectra/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cospectra;

namespace {

Polynomial poly(std::initializer_list<long> ascending)
{
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return Polynomial(c);
}

} // namespace

TEST(Polynomial, ArithmeticAndEvaluation)
{
    const Polynomial f = poly({-2, 0, 1}); // x^2 - 2
    EXPECT_EQ(f.degree(), 2);
    EXPECT_EQ(f(Rational(3)), Rational(7));
    EXPECT_EQ(f.derivative(), poly({0, 2}));
    EXPECT_EQ(f * poly({1, 1}), poly({-2, -2, 1, 1}));
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(Polynomial().degree(), -1);
}

TEST(Polynomial, DivisionIdentityOnRandomInputs)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> c(-6, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> a(6), b(3);
        for (auto& x : a) x = c(rng);
        for (auto& x : b) x = c(rng);
        b.back() = 1 + (trial % 3);
        const Polynomial pa(a), pb(b);
        auto [q, r] = divmod(pa, pb);
        EXPECT_EQ(q * pb + r, pa);
        EXPECT_LT(r.degree(), pb.degree());
    }
}

TEST(Polynomial, GcdIsMonic)
{
    // (x-1)(x+2) and (x-1)(x-3)
    const Polynomial g = gcd(poly({-1, 1}) * poly({2, 1}), poly({-1, 1}) * poly({-3, 1}));
    EXPECT_EQ(g, poly({-1, 1}));
}

TEST(Polynomial, SquarefreeDecompositionOfKThreeCharPoly)
{
    // x^3 - 3x - 2 = (x + 1)^2 (x - 2)
    const auto parts = squarefree_decomposition(poly({-2, -3, 0, 1}));
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].first, poly({-2, 1}));
    EXPECT_EQ(parts[0].second, 1);
    EXPECT_EQ(parts[1].first, poly({1, 1}));
    EXPECT_EQ(parts[1].second, 2);
}

TEST(Polynomial, SturmCountsDistinctRealRoots)
{
    EXPECT_EQ(count_real_roots(poly({0, -2, 0, 1})), 3); // x^3 - 2x
    EXPECT_EQ(count_real_roots(poly({1, 0, 1})), 0);     // x^2 + 1
    EXPECT_EQ(count_real_roots(poly({-1, 0, 0, 1})), 1); // x^3 - 1
}

TEST(Polynomial, IsolationBracketsEachRootTightly)
{
    const Rational width(1, 1000000);
    const auto roots = isolate_real_roots(poly({0, -2, 0, 1}), width);
    ASSERT_EQ(roots.size(), 3u);
    // ascending: -sqrt2, 0, sqrt2
    EXPECT_EQ(roots[1].lo, 0);
    EXPECT_EQ(roots[1].hi, 0);
    const Polynomial f = poly({0, -2, 0, 1});
    for (const auto& r : {roots[0], roots[2]}) {
        EXPECT_LE(r.hi - r.lo, width);
        EXPECT_LE(f(r.lo) * f(r.hi), 0);
    }
    EXPECT_LT(roots[0].hi, 0);
    EXPECT_GT(roots[2].lo, 0);
    EXPECT_LT(roots[0].hi, roots[1].lo);
    EXPECT_LT(roots[1].hi, roots[2].lo);
}

TEST(Polynomial, IsolationSeparatesCloseRoots)
{
    // (x - 1/1000)(x - 1/1001)(x + 5)
    const Polynomial f = Polynomial({Rational(-1, 1000), 1}) * Polynomial({Rational(-1, 1001), 1}) * poly({5, 1});
    const auto roots = isolate_real_roots(f, Rational(1, 100000000));
    ASSERT_EQ(roots.size(), 3u);
    EXPECT_LT(roots[1].hi, roots[2].lo);
    EXPECT_TRUE(roots[2].lo <= Rational(1, 1000) && Rational(1, 1000) <= roots[2].hi);
    EXPECT_TRUE(roots[1].lo <= Rational(1, 1001) && Rational(1, 1001) <= roots[1].hi);
}

TEST(Polynomial, PrimitiveIntegerForm)
{
    const Polynomial f({Rational(1, 2), Rational(-3, 4), Rational(1, 4)});
    EXPECT_EQ(f.primitive_integer(), (std::vector<Integer>{2, -3, 1}));
}
