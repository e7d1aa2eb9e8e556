#include "helpers.hpp"
#include "oracles.hpp"

#include "locc/enumeration.hpp"
#include "locc/report.hpp"
#include "locc/verdict.hpp"

using namespace locc;
using testing_support::hg;

namespace {

const auto ghz = Hypergraph::cat(3);
const auto two_epr = hg(3, {{1, 3}, {2, 3}});

// No coloring blocks, and the move calculus cannot get there.
const auto undecided_source = hg(4, {{1, 2, 4}, {2, 3, 4}});
const auto undecided_target = hg(4, {{1, 2, 3}, {2, 4}});

} // namespace

TEST(Classify, Table)
{
    using D = Direction;
    using C = Classification;
    EXPECT_EQ(classify(D::Possible, D::Possible), C::Equivalent);
    EXPECT_EQ(classify(D::Possible, D::Impossible), C::StrictlyAbove);
    EXPECT_EQ(classify(D::Impossible, D::Possible), C::StrictlyBelow);
    EXPECT_EQ(classify(D::Impossible, D::Impossible), C::Incomparable);
    for (auto other : {D::Possible, D::Impossible, D::Unknown}) {
        EXPECT_EQ(classify(D::Unknown, other), C::Unknown);
        EXPECT_EQ(classify(other, D::Unknown), C::Unknown);
    }
    EXPECT_EQ(classification_name(C::StrictlyBelow), "StrictlyBelow");
    EXPECT_EQ(direction_name(D::Impossible), "Impossible");
}

TEST(Compare, GhzBelowTwoEpr)
{
    const auto v = compare(ghz, two_epr);
    EXPECT_EQ(v.classification, Classification::StrictlyBelow);
    ASSERT_EQ(v.forward.status(), Direction::Impossible);
    EXPECT_FALSE(v.forward.trace());
    EXPECT_EQ(v.forward.witness()->source_cut, 1u);
    EXPECT_EQ(v.forward.witness()->target_cut, 2u);
    ASSERT_EQ(v.backward.status(), Direction::Possible);
    EXPECT_FALSE(v.backward.witness());
    EXPECT_EQ(v.backward.trace()->moves.size(), 1u);
}

TEST(Compare, DistinctTreesIncomparableAndEqualStatesEquivalent)
{
    const auto t1 = hg(4, {{1, 2}, {2, 3}, {3, 4}}), t2 = hg(4, {{1, 2}, {1, 3}, {1, 4}});
    EXPECT_EQ(compare(t1, t2).classification, Classification::Incomparable);
    const auto same = compare(t1, t1);
    EXPECT_EQ(same.classification, Classification::Equivalent);
    EXPECT_TRUE(same.forward.trace()->moves.empty());
    EXPECT_TRUE(same.backward.trace()->moves.empty());
}

TEST(Compare, TreeAboveCat)
{
    const auto v = compare(hg(4, {{1, 2}, {2, 3}, {3, 4}}), Hypergraph::cat(4));
    EXPECT_EQ(v.classification, Classification::StrictlyAbove);
}

TEST(Compare, UnknownWhenNeitherSideSettles)
{
    const auto d = decide_direction(undecided_source, undecided_target);
    EXPECT_EQ(d.status(), Direction::Unknown);
    EXPECT_FALSE(d.trace());
    EXPECT_FALSE(d.witness());
    EXPECT_FALSE(d.reason().empty());
    EXPECT_FALSE(oracle::some_coloring_blocks(undecided_source, undecided_target));
    EXPECT_EQ(compare(undecided_source, undecided_target).classification, Classification::Unknown);

    // a budget too small to finish the search is also Unknown, not Impossible
    CompareOptions tight;
    tight.search_budget = 1;
    const auto b = decide_direction(hg(4, {{1, 2}, {2, 3}, {3, 4}}), Hypergraph::cat(4), tight);
    EXPECT_EQ(b.status(), Direction::Unknown);
    EXPECT_NE(b.reason().find("BudgetExceeded"), std::string::npos) << b.reason();
}

TEST(Compare, ColorBoundOverflowIsUnknown)
{
    CompareOptions small;
    small.color_bound = 3;
    const auto d = decide_direction(undecided_source, undecided_target, small);
    EXPECT_EQ(d.status(), Direction::Unknown);
    EXPECT_NE(d.reason().find("SearchBoundExceeded"), std::string::npos) << d.reason();
    // a singleton still settles pairs beyond the bound
    EXPECT_EQ(decide_direction(Hypergraph::cat(5), Hypergraph::cat(5).copies(2), small).status(), Direction::Impossible);
    EXPECT_LOCC_ERROR(compare(ghz, Hypergraph::cat(4)), MismatchedAgents);
}

TEST(Compare, NeverBothOnRandomPairs)
{
    Rng rng(97);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 2 + rng() % 3;
        const auto a = testing_support::random_hypergraph(n, 3, rng), b = testing_support::random_hypergraph(n, 3, rng);
        const auto v = compare(a, b);
        for (const auto* d : {&v.forward, &v.backward}) {
            ASSERT_FALSE(d->trace() && d->witness());
            ASSERT_EQ(d->status() == Direction::Possible, d->trace().has_value());
            ASSERT_EQ(d->status() == Direction::Impossible, d->witness().has_value());
        }
        ASSERT_EQ(v.classification, classify(v.forward.status(), v.backward.status()));
        ASSERT_EQ(v.forward.status() == Direction::Impossible, oracle::some_coloring_blocks(a, b));
    }
}

TEST(Json, HypergraphAndMoveRoundTrip)
{
    const auto h = hg(5, {{1, 2, 3}, {3, 4}, {3, 4}});
    const auto j = to_json(h);
    EXPECT_EQ(j.dump(), R"({"agents":5,"hyperedges":[[1,2,3],[3,4],[3,4]]})");
    EXPECT_EQ(hypergraph_from_json(j), h);

    for (const auto& m : {LoccMove::discard(Hyperedge{1, 2}), LoccMove::measure_out(Hyperedge{1, 2, 3}, 2),
             LoccMove::swap(Hyperedge{1, 2}, Hyperedge{2, 3}), LoccMove::cat_expand(Hyperedge{1, 2}, Hyperedge{2, 3})})
        EXPECT_EQ(move_from_json(to_json(m)), m);

    const auto trace = tree_to_cat(hg(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}));
    const auto back = trace_from_json(to_json(trace));
    EXPECT_EQ(back.start, trace.start);
    EXPECT_EQ(back.moves, trace.moves);
    EXPECT_EQ(back.end, trace.end);

    const auto w = *find_blocking_witness(ghz, two_epr);
    const auto wj = to_json(w);
    EXPECT_EQ(wj.at("coloring"), "001");
    EXPECT_EQ(wj.at("a_side"), Json::array({3}));
    const auto w2 = witness_from_json(wj);
    EXPECT_EQ(w2.coloring, w.coloring);
    EXPECT_EQ(w2.source_cut, 1u);
    EXPECT_EQ(w2.target_cut, 2u);
}

TEST(Json, ReadersRejectMalformedInput)
{
    EXPECT_LOCC_ERROR(hypergraph_from_json(Json::parse(R"({"agents":2})")), BadReport);
    EXPECT_LOCC_ERROR(hypergraph_from_json(Json::parse(R"({"agents":2,"hyperedges":[[1,3]]})")), BadReport);
    EXPECT_LOCC_ERROR(hyperedge_from_json(Json::parse(R"([1])")), BadReport);
    EXPECT_LOCC_ERROR(move_from_json(Json::parse(R"({"kind":"Teleport","first":[1,2]})")), BadReport);
    EXPECT_LOCC_ERROR(move_from_json(Json::parse(R"({"kind":"Swap","first":[1,2]})")), BadReport);
    EXPECT_LOCC_ERROR(witness_from_json(Json::parse(R"({"coloring":"01x","source_cut":0,"target_cut":1})")), BadReport);
}

TEST(Report, RoundTripVerifies)
{
    const std::vector<std::pair<Hypergraph, Hypergraph>> pairs{{ghz, two_epr},
        {hg(4, {{1, 2}, {2, 3}, {3, 4}}), hg(4, {{1, 2}, {1, 3}, {1, 4}})}, {ghz, ghz},
        {undecided_source, undecided_target}};
    for (const auto& [a, b] : pairs) {
        const auto report = check_report(compare(a, b), a, b, {{"a.txt", "00"}, {"b.txt", "11"}});
        EXPECT_EQ(report.at("tool"), "locc");
        EXPECT_EQ(report.at("version"), std::string(tool_version));
        EXPECT_EQ(report.at("inputs").size(), 2u);
        const auto reparsed = Json::parse(report.dump(2));
        EXPECT_TRUE(verify_report(reparsed, a, b).empty());
        EXPECT_EQ(reparsed.dump(), report.dump());
    }
}

TEST(Report, TamperingIsDetected)
{
    const auto report = check_report(compare(ghz, two_epr), ghz, two_epr, {});

    auto cuts = report;
    cuts["forward"]["witness"]["target_cut"] = 1;
    EXPECT_FALSE(verify_report(cuts, ghz, two_epr).empty());

    auto coloring = report;
    coloring["forward"]["witness"]["coloring"] = "100";
    EXPECT_FALSE(verify_report(coloring, ghz, two_epr).empty());

    auto trace = report;
    trace["backward"]["trace"]["moves"] = Json::array();
    EXPECT_FALSE(verify_report(trace, ghz, two_epr).empty());

    auto label = report;
    label["classification"] = "Incomparable";
    EXPECT_FALSE(verify_report(label, ghz, two_epr).empty());

    auto both = report;
    both["forward"]["trace"] = report["backward"]["trace"];
    EXPECT_FALSE(verify_report(both, ghz, two_epr).empty());

    EXPECT_FALSE(verify_report(report, ghz, hg(3, {{1, 2}, {2, 3}})).empty());
    EXPECT_FALSE(verify_report(Json::object(), ghz, two_epr).empty());
}

TEST(Report, ProofObjectsSerialize)
{
    const auto h1 = hg(7, {{1, 2, 3}, {3, 4, 5}, {5, 6, 7}}), h2 = hg(7, {{1, 2, 3}, {3, 4, 5}, {4, 6, 7}});
    const auto w = witness_r_uniform_hypertrees(h1, h2).forward;
    const auto j = to_json(w);
    EXPECT_EQ(j.at("case"), w.case_label);
    EXPECT_TRUE(j.contains("separating_pair"));
    EXPECT_TRUE(witness_holds(witness_from_json(j.at("witness")), h1, h2));

    const auto split = witness_distinct_spanning_trees(hg(3, {{1, 2}, {1, 3}}), hg(3, {{1, 3}, {2, 3}})).split;
    EXPECT_EQ(to_json(split).at("colored_a"), Json::array({3}));

    const auto d = distance_report(hg(3, {{1, 2}, {1, 3}}), hg(3, {{1, 3}, {2, 3}}));
    const auto dj = to_json(d);
    EXPECT_EQ(dj.at("qd"), 1);
    EXPECT_EQ(dj.at("copies_upper"), 2);
    EXPECT_TRUE(trace_replays(trace_from_json(dj.at("upper_trace"))));
}
