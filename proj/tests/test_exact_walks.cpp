#include "cospectra/error.hpp"
#include "cospectra/exact_walks.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cospectra;
namespace ts = testing_support;

namespace {

std::vector<Rational> q(std::initializer_list<Rational> v) { return v; }

} // namespace

TEST(WalkCounts, PathOfThree)
{
    const WalkTable t = walk_counts(adjacency_matrix(ts::path(3)), 3);
    EXPECT_EQ(t.row(0), q({0, 1, 0}));
    EXPECT_EQ(t.row(1), q({0, 2, 0}));
    EXPECT_EQ(t.row(2), q({0, 1, 0}));
}

TEST(WalkCounts, TriangleAndWeightedEdge)
{
    const WalkTable t = walk_counts(adjacency_matrix(ts::complete(3)), 3);
    for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(t.row(v), q({0, 2, 2}));

    const WalkTable w = walk_counts(adjacency_matrix(parse_edge_list("0 1 3/2")), 2);
    EXPECT_EQ(w.row(0), q({0, Rational(9, 4)}));
    EXPECT_EQ(w.row(1), q({0, Rational(9, 4)}));
}

TEST(WalkCounts, UnweightedInvariants)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = ts::random_graph(7, 0.4, rng, false);
        const WalkTable t = walk_counts(adjacency_matrix(g), 6);
        const auto deg = g.degrees();
        for (std::size_t v = 0; v < 7; ++v) {
            EXPECT_EQ(t.at(v, 1), 0);
            EXPECT_EQ(t.at(v, 2), deg[v]);
            for (std::size_t r = 1; r <= 6; ++r) EXPECT_GE(t.at(v, r), 0);
        }
    }
    EXPECT_THROW(walk_counts(adjacency_matrix(ts::path(3)), 0), InvalidArgument);
}

TEST(WalkCounts, TraceIdentityOnRandomRationalMatrices)
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const ExactMatrix a = ts::random_matrix(5, rng, trial % 2 == 0);
        const WalkTable t = walk_counts(a, 8);
        for (int r = 1; r <= 8; ++r) EXPECT_EQ(t.column_sum(static_cast<std::size_t>(r)), ts::power(a, r).trace());
    }
}

TEST(CharPoly, SmallGraphs)
{
    EXPECT_EQ(char_poly(adjacency_matrix(ts::complete(2))).coefficients(), q({-1, 0, 1}));
    EXPECT_EQ(char_poly(adjacency_matrix(ts::path(3))).coefficients(), q({0, -2, 0, 1}));
    EXPECT_EQ(char_poly(adjacency_matrix(ts::complete(3))).coefficients(), q({-2, -3, 0, 1}));
}

TEST(CharPoly, MatchesDeterminantOracle)
{
    std::mt19937 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 6;
        const ExactMatrix a = ts::random_matrix(n, rng, trial % 3 == 0);
        EXPECT_EQ(char_poly(a).coefficients(), ts::char_poly_interpolated(a));
    }
    // Hessenberg reduction needs pivoting on this one.
    const ExactMatrix tricky{{0, 0, 1}, {0, 0, 0}, {1, 1, 0}};
    EXPECT_EQ(char_poly(tricky).coefficients(), ts::char_poly_interpolated(tricky));
}

TEST(CharPoly, IntegerCoefficientsForZeroOneMatrices)
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const CharPoly cp = char_poly(adjacency_matrix(ts::random_graph(8, 0.5, rng, false)));
        EXPECT_EQ(cp.degree(), 8u);
        EXPECT_EQ(cp.coefficients().back(), 1);
        for (const auto& c : cp.coefficients()) EXPECT_TRUE(is_integer(c));
    }
}

TEST(CharPoly, NewtonPowerSumsEqualTraces)
{
    std::mt19937 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        const ExactMatrix a = ts::random_matrix(5, rng);
        const auto p = power_sums(char_poly(a), 7);
        for (int r = 1; r <= 7; ++r) EXPECT_EQ(p[static_cast<std::size_t>(r - 1)], ts::power(a, r).trace());
    }
}

TEST(Cospectral, Examples)
{
    const ExactMatrix p3 = adjacency_matrix(ts::path(3));
    EXPECT_TRUE(cospectral(p3, {0, 2}));
    EXPECT_FALSE(cospectral(p3, {0, 1}));
    const ExactMatrix star = adjacency_matrix(ts::star(3));
    EXPECT_TRUE(cospectral(star, {1, 2}));
    EXPECT_TRUE(cospectral(star, {2, 3}));
    EXPECT_FALSE(cospectral(star, {0, 1}));
    EXPECT_THROW(cospectral(p3, {1, 1}), InvalidArgument);
}

TEST(Cospectral, WalkTableMustReachNMinusOne)
{
    const ExactMatrix a = adjacency_matrix(ts::path(4));
    EXPECT_THROW(cospectral(walk_counts(a, 2), {0, 3}), InvalidArgument);
    EXPECT_TRUE(cospectral(walk_counts(a, 3), {0, 3}));
}

TEST(Cospectral, AgreesWithVertexDeletedCharPolys)
{
    // i and j are cospectral iff G - i and G - j have the same
    // characteristic polynomial.
    for (const Graph& g : ts::corpus(6)) {
        const ExactMatrix a = adjacency_matrix(g);
        std::vector<std::vector<Rational>> deleted;
        for (int v = 0; v < g.order(); ++v) deleted.push_back(ts::char_poly_interpolated(ts::delete_vertex(a, v)));
        for (int i = 0; i < g.order(); ++i)
            for (int j = i + 1; j < g.order(); ++j)
                ASSERT_EQ(cospectral(a, {i, j}), deleted[static_cast<std::size_t>(i)] == deleted[static_cast<std::size_t>(j)])
                    << to_graph6(g) << " " << i << "," << j;
    }
}

TEST(Cospectral, NonAutomorphicFixtureIsCospectral)
{
    const ExactMatrix a = adjacency_matrix(parse_graph6("G??XEs"));
    EXPECT_TRUE(cospectral(a, {5, 6}));
    EXPECT_TRUE(ts::cospectral_bruteforce(a, 5, 6));
}

TEST(WalkRegular, Examples)
{
    for (int n = 1; n <= 8; ++n) EXPECT_TRUE(walk_regular(adjacency_matrix(ts::complete(n)))) << n;
    EXPECT_TRUE(walk_regular(adjacency_matrix(ts::cycle(4))));
    EXPECT_FALSE(walk_regular(adjacency_matrix(ts::path(3))));
}

TEST(WalkRegular, ImpliesEveryPairCospectral)
{
    std::mt19937 rng(41);
    int seen = 0;
    for (const Graph& g : ts::corpus(7)) {
        const ExactMatrix a = adjacency_matrix(g);
        if (!walk_regular(a)) continue;
        ++seen;
        for (int i = 0; i < g.order(); ++i)
            for (int j = i + 1; j < g.order(); ++j) ASSERT_TRUE(cospectral(a, {i, j}));
    }
    EXPECT_GT(seen, 10);
}

TEST(CospectralClasses, NumberedByFirstOccurrence)
{
    EXPECT_EQ(cospectral_classes(adjacency_matrix(ts::path(3))), (std::vector<int>{0, 1, 0}));
    EXPECT_EQ(cospectral_classes(adjacency_matrix(ts::star(3))), (std::vector<int>{0, 1, 1, 1}));
}

TEST(Nullspace, Examples)
{
    const auto zero = rational_nullspace(ExactMatrix(2));
    ASSERT_EQ(zero.size(), 2u);
    EXPECT_EQ(zero[0], q({1, 0}));
    EXPECT_EQ(zero[1], q({0, 1}));

    EXPECT_TRUE(rational_nullspace(ExactMatrix::identity(3)).empty());

    const auto ker = rational_nullspace(adjacency_matrix(ts::path(3)));
    ASSERT_EQ(ker.size(), 1u);
    // proportional to (1, 0, -1)
    EXPECT_EQ(ker[0][1], 0);
    EXPECT_NE(ker[0][0], 0);
    EXPECT_EQ(ker[0][0], -ker[0][2]);
}

TEST(Nullspace, VectorsAreKernelElementsOfLowRankMatrices)
{
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 5, k = 1 + trial % 4;
        // B = L * R with L n x k and R k x n has rank <= k
        ExactMatrix b(n);
        std::vector<std::vector<int>> l(n, std::vector<int>(k)), r(k, std::vector<int>(n));
        for (auto& row : l)
            for (auto& x : row) x = c(rng);
        for (auto& row : r)
            for (auto& x : row) x = c(rng);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t t = 0; t < k; ++t) b(i, j) += l[i][t] * r[t][j];
        const auto basis = rational_nullspace(b);
        EXPECT_GE(basis.size(), n - k);
        for (const auto& v : basis)
            for (const auto& x : b * v) EXPECT_EQ(x, 0);
        if (basis.empty()) EXPECT_NE(ts::det_cofactor(b), 0);
        else EXPECT_EQ(ts::det_cofactor(b), 0);
    }
}

TEST(Inverse, Examples)
{
    EXPECT_EQ(rational_inverse(ExactMatrix::identity(3)), ExactMatrix::identity(3));
    const ExactMatrix swap{{0, 1}, {1, 0}};
    EXPECT_EQ(rational_inverse(swap), swap);
    const ExactMatrix diag{{2, 0}, {0, Rational(1, 2)}};
    EXPECT_EQ(rational_inverse(diag), (ExactMatrix{{Rational(1, 2), 0}, {0, 2}}));
    EXPECT_THROW(rational_inverse(adjacency_matrix(ts::path(3))), SingularMatrix);
}

TEST(Inverse, ProductIsIdentity)
{
    std::mt19937 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const ExactMatrix b = ts::random_matrix(1 + trial % 6, rng);
        if (ts::det_cofactor(b) == 0) {
            EXPECT_THROW(rational_inverse(b), SingularMatrix);
            continue;
        }
        EXPECT_EQ(b * rational_inverse(b), ExactMatrix::identity(b.dim()));
    }
}
