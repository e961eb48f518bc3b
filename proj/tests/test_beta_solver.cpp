#include "cospectra/beta_solver.hpp"
#include "cospectra/centrality.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cospectra;
namespace ts = testing_support;

namespace {

const Precision kP{50};
const Precision kP60{60};

// g(beta) = scale * (e^beta - target) with target = e^root
DiffFunction exponential_minus(const Real& scale_literal_source, std::function<Real(mpfr_prec_t)> target)
{
    const std::string scale_text = scale_literal_source.to_decimal(30);
    return synthetic_diff(
        [scale_text, target](const Precision& p) {
            const mpfr_prec_t bits = p.bits();
            const Real k = Real::parse(scale_text, bits);
            return std::make_pair(std::vector<Real>{Real(1L, bits), Real(bits)},
                                  std::vector<Real>{k, -(k * target(bits))});
        },
        kP60);
}

Real two(mpfr_prec_t bits) { return Real(2L, bits); }
Real e(mpfr_prec_t bits) { return ts::exp_ref(Real(1L, bits)); }

} // namespace

TEST(BuildDiff, PathOfThree)
{
    const SpectralData sd = decompose(adjacency_matrix(ts::path(3)), kP);
    EXPECT_TRUE(build_diff(sd, {0, 2}).identically_zero);

    const DiffFunction df = build_diff(sd, {0, 1});
    EXPECT_FALSE(df.identically_zero);
    ASSERT_EQ(df.delta.size(), 3u);
    const mpfr_prec_t bits = kP.bits();
    EXPECT_TRUE(ts::close(df.delta[0], Real(Rational(-1, 4), bits), -45));
    EXPECT_TRUE(ts::close(df.delta[1], Real(Rational(1, 2), bits), -45));
    EXPECT_TRUE(ts::close(df.delta[2], Real(Rational(-1, 4), bits), -45));
}

TEST(BuildDiff, DeltasSumToZero)
{
    for (const Graph& g : ts::corpus(6)) {
        if (g.order() < 2) continue;
        const SpectralData sd = decompose(adjacency_matrix(g), kP);
        const DiffFunction df = build_diff(sd, {0, 1});
        if (df.identically_zero) continue;
        Real s(kP.bits());
        for (const auto& d : df.delta) s += d;
        EXPECT_TRUE(abs(s) < kP.eps_w()) << to_graph6(g);
    }
}

TEST(BuildDiff, AgreesWithTaylorCentralities)
{
    std::mt19937 rng(61);
    std::uniform_int_distribution<long> num(1, 400);
    for (int trial = 0; trial < 20; ++trial) {
        const ExactMatrix a = adjacency_matrix(ts::random_graph(6, 0.5, rng));
        const SpectralData sd = decompose(a, kP);
        const Rational b(num(rng), 100);
        const auto rep = subgraph_centrality_taylor(a, Beta::rational(b), kP);
        Real scale(1L, kP.bits());
        for (const auto& v : rep.values) scale = std::max(scale, abs(v));
        for (int j = 1; j < 6; ++j) {
            const DiffFunction df = build_diff(sd, {0, j});
            const Real expected = rep.values[0] - rep.values[static_cast<std::size_t>(j)];
            const Real got = df.identically_zero ? Real(kP.bits()) : df(Real(b, kP.bits()));
            EXPECT_TRUE(abs(got - expected) < kP.eps_w() * scale) << "trial " << trial << " j " << j;
        }
    }
}

TEST(Scan, NoRootsForPathEndAndCenter)
{
    const SpectralData sd = decompose(adjacency_matrix(ts::path(3)), kP);
    const ScanResult s = scan_roots(build_diff(sd, {0, 1}));
    EXPECT_TRUE(s.brackets.empty());
    EXPECT_TRUE(s.near_zero.empty());
    EXPECT_THROW(scan_roots(build_diff(sd, {0, 2})), InvalidArgument);
    EXPECT_THROW(scan_roots(build_diff(sd, {0, 1}), ScanOptions{Rational(20), Rational(0)}), InvalidArgument);
}

TEST(Calibration, LogTwo)
{
    const DiffFunction df = exponential_minus(Real(1L, 64), two);
    const ScanResult s = scan_roots(df);
    ASSERT_EQ(s.brackets.size(), 1u);
    EXPECT_EQ(s.brackets[0], (Bracket{Rational(69, 100), Rational(7, 10)}));
    const BetaRoot root = refine_root(df, s.brackets[0], kP60);
    const Real ln2 = ts::log_ref(Real(2L, root.lo.bits()));
    EXPECT_TRUE(ts::close(root.midpoint(), ln2, -50));
    EXPECT_TRUE(root.hi - root.lo < kP60.pow10(-50));
    EXPECT_TRUE(root.residual < kP60.pow10(-40));
    EXPECT_EQ(root.escalations, 0);
}

TEST(Calibration, RootAtOne)
{
    const DiffFunction df = exponential_minus(Real(1L, 64), e);
    const ScanResult s = scan_roots(df);
    ASSERT_EQ(s.brackets.size(), 1u);
    const BetaRoot root = refine_root(df, s.brackets[0], kP60);
    EXPECT_TRUE(ts::close(root.midpoint(), Real(1L, root.lo.bits()), -50));
    EXPECT_TRUE(root.residual < kP60.pow10(-40));
}

TEST(Calibration, WideBracketWhereNewtonOvershoots)
{
    // e^-beta - 1/2 is nearly flat at the middle of [0, 20], so the first
    // Newton step leaves the bracket and bisection has to carry the search.
    const DiffFunction df = synthetic_diff(
        [](const Precision& p) {
            const mpfr_prec_t bits = p.bits();
            return std::make_pair(std::vector<Real>{Real(-1L, bits), Real(bits)},
                                  std::vector<Real>{Real(1L, bits), Real(Rational(-1, 2), bits)});
        },
        kP60);
    const BetaRoot root = refine_root(df, {Rational(0), Rational(20)}, kP60);
    EXPECT_TRUE(ts::close(root.midpoint(), ts::log_ref(Real(2L, root.lo.bits())), -50));
    EXPECT_TRUE(root.hi - root.lo < kP60.pow10(-50));
    EXPECT_TRUE(root.residual < kP60.pow10(-40));
}

TEST(Calibration, IllConditionedRootEscalates)
{
    const DiffFunction df = exponential_minus(Real::parse("1e45", 256), two);
    const BetaRoot root = refine_root(df, {Rational(69, 100), Rational(7, 10)}, kP60);
    EXPECT_GT(root.escalations, 0);
    EXPECT_GT(root.working_digits, 60);
    EXPECT_TRUE(root.residual < kP60.pow10(-40));
    EXPECT_TRUE(ts::close(root.midpoint(), ts::log_ref(Real(2L, root.lo.bits())), -50));
}

TEST(Calibration, EscalationBudgetIsEnforced)
{
    const DiffFunction df = exponential_minus(Real::parse("1e300", 256), two);
    EXPECT_THROW(refine_root(df, {Rational(69, 100), Rational(7, 10)}, kP60, RefineOptions{1}), PrecisionError);
}

TEST(Calibration, SignlessBracketIsSpurious)
{
    const DiffFunction df = exponential_minus(Real(1L, 64), two);
    EXPECT_THROW(refine_root(df, {Rational(1), Rational(2)}, kP60), SpuriousBracket);
    EXPECT_THROW(refine_root(df, {Rational(2), Rational(1)}, kP60), InvalidArgument);
}

TEST(Calibration, BracketThatVanishesAtHigherPrecision)
{
    // At 50 digits the function has a root near ln 2; rebuilt at 60 digits it
    // has none.
    const DiffFunction df = synthetic_diff(
        [](const Precision& p) {
            const mpfr_prec_t bits = p.bits();
            const long sign = p.digits() <= 50 ? -2 : 2;
            return std::make_pair(std::vector<Real>{Real(1L, bits), Real(bits)},
                                  std::vector<Real>{Real(1L, bits), Real(sign, bits)});
        },
        kP);
    const ScanResult s = scan_roots(df);
    ASSERT_EQ(s.brackets.size(), 1u);
    EXPECT_THROW(refine_root(df, s.brackets[0], kP60), SpuriousBracket);
}

TEST(Probe, RationalAndIrrationalBeta)
{
    const mpfr_prec_t bits = kP60.bits();
    const RationalProbe third = small_height_probe(Real(Rational(1, 3), bits), kP60);
    EXPECT_FALSE(third.passed);
    EXPECT_EQ(third.nearest, Rational(1, 3));

    const RationalProbe ln2 = small_height_probe(ts::log_ref(Real(2L, bits)), kP60);
    EXPECT_TRUE(ln2.passed);
    EXPECT_EQ(ln2.max_denominator, 10000u);
    EXPECT_TRUE(ln2.distance > kP60.pow10(-40));
}

TEST(CrossingFixture, RootIsCertified)
{
    const ExactMatrix a = adjacency_matrix(parse_graph6("E@NG"));
    const SpectralData sd = decompose(a, kP60);
    const DiffFunction df = build_diff(sd, {2, 5});
    const ScanResult s = scan_roots(df);
    ASSERT_EQ(s.brackets.size(), 1u);
    const BetaRoot root = refine_root(df, s.brackets[0], kP60);
    EXPECT_TRUE(root.residual < kP60.pow10(-40));
    EXPECT_TRUE(root.hi - root.lo < kP60.pow10(-50));
    EXPECT_NEAR(root.midpoint().to_double(), 1.7788917, 1e-6);
    EXPECT_FALSE(cospectral(a, {2, 5}));

    // The centralities of 2 and 5 do swap order across the root.
    const auto before = subgraph_centrality_taylor(a, Beta::rational(s.brackets[0].lo), kP60);
    const auto after = subgraph_centrality_taylor(a, Beta::rational(s.brackets[0].hi), kP60);
    EXPECT_NE((before.values[2] < before.values[5]), (after.values[2] < after.values[5]));
}

TEST(CrossingFixture, BracketsStableUnderPrecision)
{
    const ExactMatrix a = adjacency_matrix(parse_graph6("E@NG"));
    const SpectralData lo = decompose(a, kP);
    const SpectralData hi = decompose(a, Precision(100));
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            const DiffFunction dl = build_diff(lo, {i, j});
            if (dl.identically_zero) continue;
            EXPECT_EQ(scan_roots(dl).brackets, scan_roots(build_diff(hi, {i, j})).brackets) << i << "," << j;
        }
}

TEST(RegularitySearch, PathHasNoCandidate)
{
    const RegularityReport rep = regularity_beta_search(ts::path(3), kP);
    EXPECT_TRUE(rep.candidates.empty());
    EXPECT_EQ(rep.cospectral_class, (std::vector<int>{0, 1, 0}));
    ASSERT_EQ(rep.pairs.size(), 1u);
    EXPECT_TRUE(rep.pairs[0].roots.empty());
}

TEST(RegularitySearch, RejectsWalkRegularAndDirectedInput)
{
    EXPECT_THROW(regularity_beta_search(ts::cycle(4), kP), InvalidArgument);
    EXPECT_THROW(regularity_beta_search(parse_edge_list("n=2 directed=true\n0 1\n"), kP), InvalidArgument);
}

TEST(RegularitySearch, CandidatesZeroEveryPairDifference)
{
    // Over the small corpus every reported candidate must make all
    // representative differences vanish; none are expected.
    for (const Graph& g : ts::corpus(6)) {
        if (g.order() < 2 || walk_regular(adjacency_matrix(g))) continue;
        const RegularityReport rep = regularity_beta_search(g, kP);
        for (const auto& c : rep.candidates) EXPECT_TRUE(c.max_residual < kP.pow10(-30));
        EXPECT_TRUE(rep.candidates.empty()) << to_graph6(g);
    }
}
