#include "cospectra/error.hpp"
#include "cospectra/miner.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace cospectra;
namespace ts = testing_support;

namespace {

struct MineRun {
    MineSummary summary;
    std::vector<Finding> findings;
    std::string ndjson;
};

MineRun run(const std::string& input, const MineTask& task)
{
    MineRun r;
    std::istringstream in(input);
    r.summary = mine(in, task, [&](const Finding& f) {
        r.findings.push_back(f);
        r.ndjson += to_json(f).dump() + "\n";
    });
    return r;
}

std::string corpus_text(int max_n)
{
    std::string text;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& line : ts::corpus_lines(n)) text += line + "\n";
    return text;
}

MineTask task_for(std::vector<Predicate> preds)
{
    MineTask t;
    t.predicates = std::move(preds);
    return t;
}

const std::vector<Predicate> kAll{Predicate::CospectralNonAutomorphic, Predicate::WalkRegular,
                                  Predicate::CrossingPair, Predicate::RegularityCandidate};

} // namespace

TEST(Predicates, NamesRoundTrip)
{
    for (auto p : kAll) EXPECT_EQ(parse_predicate(to_string(p)), p);
    EXPECT_THROW(parse_predicate("vertex-transitive"), InvalidArgument);
}

TEST(Mine, EmptyStream)
{
    const MineRun r = run("", task_for({Predicate::WalkRegular}));
    EXPECT_EQ(r.summary.lines, 0u);
    EXPECT_EQ(r.summary.graphs, 0u);
    EXPECT_TRUE(r.findings.empty());
    EXPECT_EQ(r.summary.counts.at(Predicate::WalkRegular), 0u);
}

TEST(Mine, MalformedLinesAreReportedAndSkipped)
{
    const MineRun r = run("A_\n!!\n\nBw\r\n", task_for({Predicate::WalkRegular}));
    EXPECT_EQ(r.summary.lines, 3u);
    EXPECT_EQ(r.summary.graphs, 2u);
    EXPECT_EQ(r.summary.malformed, 1u);
    ASSERT_EQ(r.summary.diagnostics.size(), 1u);
    EXPECT_EQ(r.summary.diagnostics[0].line, 2u);
    EXPECT_NE(r.summary.diagnostics[0].message.find("malformed graph6"), std::string::npos);
    // K2 on line 1 and K3 on line 4
    ASSERT_EQ(r.findings.size(), 2u);
    EXPECT_EQ(r.findings[0].line, 1u);
    EXPECT_EQ(r.findings[1].line, 4u);
    EXPECT_EQ(r.findings[1].graph6, "Bw");
}

TEST(Mine, OrderRangeIsCounted)
{
    MineTask t = task_for({Predicate::WalkRegular});
    t.min_order = 3;
    t.max_order = 4;
    const MineRun r = run(corpus_text(5), t);
    EXPECT_EQ(r.summary.lines, 1u + 1 + 2 + 6 + 21);
    EXPECT_EQ(r.summary.graphs, 8u);
    EXPECT_EQ(r.summary.out_of_range, 23u);
    for (const auto& f : r.findings) {
        const int n = parse_graph6(f.graph6).order();
        EXPECT_TRUE(n >= 3 && n <= 4);
    }
}

TEST(Mine, TaskValidation)
{
    std::istringstream in("A_\n");
    auto sink = [](const Finding&) {};
    EXPECT_THROW(mine(in, task_for({}), sink), InvalidArgument);
    MineTask t = task_for({Predicate::WalkRegular});
    t.workers = 0;
    EXPECT_THROW(mine(in, t, sink), InvalidArgument);
    t.workers = 1;
    t.min_order = 5;
    t.max_order = 4;
    EXPECT_THROW(mine(in, t, sink), InvalidArgument);
    t.min_order = 1;
    t.max_order = 63;
    EXPECT_THROW(mine(in, t, sink), InvalidArgument);
}

TEST(Mine, WalkRegularMatchesVertexTransitiveUpToSix)
{
    // Below 7 vertices every connected walk-regular graph is vertex-transitive.
    const MineRun r = run(corpus_text(6), task_for({Predicate::WalkRegular}));
    std::set<std::string> found;
    for (const auto& f : r.findings) found.insert(f.graph6);
    std::set<std::string> expected;
    for (int n = 1; n <= 6; ++n)
        for (const auto& line : ts::corpus_lines(n))
            if (ts::vertex_transitive_bruteforce(parse_graph6(line))) expected.insert(line);
    EXPECT_EQ(found, expected);
    EXPECT_EQ(found.size(), 12u);
}

TEST(Mine, NoCospectralNonAutomorphicPairsBelowEight)
{
    const MineRun r = run(corpus_text(7), task_for({Predicate::CospectralNonAutomorphic}));
    EXPECT_TRUE(r.findings.empty());
    EXPECT_EQ(r.summary.graphs, 1u + 1 + 2 + 6 + 21 + 112 + 853);
}

TEST(Mine, CospectralNonAutomorphicOnEightVertices)
{
    std::string text;
    for (const auto& line : ts::corpus_lines(8)) text += line + "\n";
    const MineRun r = run(text, task_for({Predicate::CospectralNonAutomorphic}));
    EXPECT_EQ(r.findings.size(), 163u);
    bool fixture = false;
    for (const auto& f : r.findings) {
        ASSERT_TRUE(verify_finding(f)) << f.graph6;
        const ExactMatrix a = adjacency_matrix(parse_graph6(f.graph6));
        ASSERT_TRUE(ts::cospectral_bruteforce(a, f.pair->i, f.pair->j));
        ASSERT_FALSE(ts::automorphic_bruteforce(parse_graph6(f.graph6), f.pair->i, f.pair->j));
        if (f.graph6 == "G??XEs" && *f.pair == VertexPair{5, 6}) fixture = true;
    }
    EXPECT_TRUE(fixture);
}

TEST(Mine, WorkerCountDoesNotChangeOutput)
{
    const std::string text = corpus_text(6);
    MineTask t = task_for(kAll);
    t.chunk_lines = 5;
    const MineRun one = run(text, t);
    t.workers = 3;
    const MineRun three = run(text, t);
    EXPECT_EQ(one.ndjson, three.ndjson);
    EXPECT_EQ(to_json(one.summary), to_json(three.summary));
    EXPECT_FALSE(one.findings.empty());
}

TEST(Mine, FiltersDoNotChangeFindings)
{
    const std::string text = corpus_text(6);
    MineTask t = task_for(kAll);
    const MineRun filtered = run(text, t);
    t.cheap_filters = false;
    const MineRun full = run(text, t);
    EXPECT_EQ(filtered.ndjson, full.ndjson);
    EXPECT_EQ(to_json(filtered.summary), to_json(full.summary));
}

TEST(Mine, CrossingFixtureOnSixVertices)
{
    std::string text;
    for (const auto& line : ts::corpus_lines(6)) text += line + "\n";
    MineTask t = task_for({Predicate::CrossingPair});
    t.precision = Precision(60);
    const MineRun r = run(text, t);
    ASSERT_EQ(r.findings.size(), 1u);
    const Finding& f = r.findings[0];
    EXPECT_EQ(f.graph6, "E@NG");
    EXPECT_EQ(*f.pair, (VertexPair{2, 5}));
    EXPECT_TRUE(f.root->residual < Precision(60).pow10(-40));
    EXPECT_TRUE(verify_finding(f));
}

class Verify : public ::testing::Test {
protected:
    static Finding crossing()
    {
        MineTask t = task_for({Predicate::CrossingPair});
        t.precision = Precision(60);
        const MineRun r = run("E@NG\n", t);
        return r.findings.at(0);
    }
    static Finding roundtrip(const Finding& f) { return finding_from_json(Json::parse(to_json(f).dump())); }
};

TEST_F(Verify, CrossingSurvivesSerialization)
{
    const Finding f = roundtrip(crossing());
    EXPECT_EQ(f.precision.digits(), 60);
    EXPECT_TRUE(verify_finding(f));
}

TEST_F(Verify, TamperedCrossingIsRejected)
{
    Finding f = roundtrip(crossing());
    Finding wrong_pair = f;
    wrong_pair.pair = VertexPair{1, 5};
    wrong_pair.root->pair = VertexPair{1, 5};
    EXPECT_FALSE(verify_finding(wrong_pair));

    Finding shifted = f;
    const Real d = Precision(60).pow10(-5);
    shifted.root->lo += d;
    shifted.root->hi += d;
    EXPECT_FALSE(verify_finding(shifted));

    Finding widened = f;
    widened.root->lo -= d;
    EXPECT_FALSE(verify_finding(widened));

    Finding garbage = f;
    garbage.graph6 = "E@N";
    EXPECT_FALSE(verify_finding(garbage));
}

TEST_F(Verify, TamperedWalksAreRejected)
{
    const MineRun r = run("G??XEs\n", task_for({Predicate::CospectralNonAutomorphic, Predicate::WalkRegular}));
    ASSERT_EQ(r.findings.size(), 1u);
    Finding f = roundtrip(r.findings[0]);
    EXPECT_TRUE(verify_finding(f));
    f.walk_prefix[1] += 1;
    EXPECT_FALSE(verify_finding(f));

    Finding not_regular = r.findings[0];
    not_regular.predicate = Predicate::WalkRegular;
    EXPECT_FALSE(verify_finding(not_regular));

    Finding automorphic = r.findings[0];
    automorphic.graph6 = "Bg"; // path a-b-c
    automorphic.pair = VertexPair{0, 2};
    automorphic.walk_prefix = {0, 1};
    EXPECT_FALSE(verify_finding(automorphic));
}
