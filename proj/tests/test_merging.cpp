#include "helpers.hpp"
#include "oracles.hpp"

#include "locc/enumeration.hpp"
#include "locc/merging.hpp"

using namespace locc;
using testing_support::hg;
using testing_support::random_hypergraph;

namespace {

std::set<Agent> as_set(const std::vector<Agent>& v)
{
    return {v.begin(), v.end()};
}

} // namespace

TEST(Bicoloring, BitsAndSides)
{
    const auto c = Bicoloring::from_a_side(4, {2, 4});
    EXPECT_EQ(c.bits(), "0101");
    EXPECT_EQ(Bicoloring::from_bits("0101"), c);
    EXPECT_EQ(c.a_side(), (std::vector<Agent>{2, 4}));
    EXPECT_EQ(c.b_side(), (std::vector<Agent>{1, 3}));
    EXPECT_EQ(c.flipped().a_side(), (std::vector<Agent>{1, 3}));
    EXPECT_TRUE(c.nontrivial());
    EXPECT_FALSE(Bicoloring(3, 0).nontrivial());
    EXPECT_FALSE(Bicoloring(3, 0b111).nontrivial());
    EXPECT_EQ(Bicoloring::from_scan_index(4, 0b011).a_side(), (std::vector<Agent>{2, 3}));
    EXPECT_LOCC_ERROR(Bicoloring::from_bits("01x"), BadReport);
    EXPECT_LOCC_ERROR(Bicoloring::from_a_side(3, {4}), BadAgents);
    EXPECT_LOCC_ERROR(Bicoloring(2, 0b100), BadAgents);
}

TEST(BcmCut, Examples)
{
    const auto c3 = Bicoloring::from_a_side(3, {3});
    EXPECT_EQ(bcm_cut(Hypergraph::cat(3), c3), 1u);
    EXPECT_EQ(bcm_cut(hg(3, {{1, 3}, {2, 3}}), c3), 2u);
    EXPECT_EQ(bcm_cut(hg(3, {{1, 3}, {2, 3}}), Bicoloring(3, 0)), 0u);
    EXPECT_EQ(bcm_cut(hg(3, {{1, 3}, {2, 3}}), Bicoloring(3, 0b111)), 0u);
    EXPECT_LOCC_ERROR(bcm_cut(Hypergraph::cat(4), c3), MismatchedAgents);
}

TEST(BcmReduce, CollapsesEachHyperedge)
{
    const auto g = bcm_reduce(hg(4, {{1, 2, 3, 4}, {1, 2}}), Bicoloring::from_a_side(4, {1, 2}));
    ASSERT_EQ(g.collapsed.size(), 2u);
    EXPECT_EQ(g.cross_edge_count, 1u);
    // canonical order: {1,2} before {1,2,3,4}
    EXPECT_EQ(g.collapsed[0].to, Collapse::Vertex);
    EXPECT_EQ(g.collapsed[0].vertex_color, Color::A);
    EXPECT_EQ(g.collapsed[1].to, Collapse::Edge);
}

TEST(BcmReduce, CountMatchesCutOnMergedFigureScenario)
{
    // two 3-uniform hypertrees; the scan's witness collapses h2 to more A-B edges than h1
    const auto h1 = hg(5, {{1, 2, 3}, {3, 4, 5}});
    const auto h2 = hg(5, {{1, 2, 4}, {3, 4, 5}});
    const auto w = find_blocking_witness(h1, h2);
    ASSERT_TRUE(w);
    EXPECT_EQ(bcm_reduce(h1, w->coloring).cross_edge_count, w->source_cut);
    EXPECT_EQ(bcm_reduce(h2, w->coloring).cross_edge_count, w->target_cut);
    EXPECT_LT(w->source_cut, w->target_cut);
}

TEST(FindBlockingWitness, Examples)
{
    const auto w = find_blocking_witness(Hypergraph::cat(3), hg(3, {{1, 3}, {2, 3}}));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->coloring.a_side(), (std::vector<Agent>{3}));
    EXPECT_EQ(w->source_cut, 1u);
    EXPECT_EQ(w->target_cut, 2u);
    EXPECT_TRUE(witness_holds(*w, Hypergraph::cat(3), hg(3, {{1, 3}, {2, 3}})));

    EXPECT_FALSE(find_blocking_witness(Hypergraph::cat(4), Hypergraph::cat(4)));
    EXPECT_FALSE(find_blocking_witness(hg(3, {{1, 2}, {1, 3}}), Hypergraph::cat(3)));
    EXPECT_LOCC_ERROR(find_blocking_witness(Hypergraph::cat(3), Hypergraph::cat(4)), MismatchedAgents);
}

TEST(FindBlockingWitness, ReturnsFirstColoringInScanOrder)
{
    Rng rng(3);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 2 + rng() % 5;
        const auto a = random_hypergraph(n, 4, rng), b = random_hypergraph(n, 4, rng);
        const auto w = find_blocking_witness(a, b);
        std::optional<Bicoloring> first;
        for (const auto& c : all_bicolorings(n))
            if (bcm_cut(b, c) > bcm_cut(a, c)) {
                first = c;
                break;
            }
        ASSERT_EQ(w.has_value(), first.has_value());
        if (w)
            EXPECT_EQ(w->coloring, *first);
    }
}

TEST(FindBlockingWitness, AgreesWithUnpinnedOracle)
{
    Rng rng(5);
    for (int k = 0; k < 2000; ++k) {
        const std::size_t n = 2 + rng() % 6;
        const auto a = random_hypergraph(n, 4, rng), b = random_hypergraph(n, 4, rng);
        const auto w = find_blocking_witness(a, b);
        ASSERT_EQ(w.has_value(), oracle::some_coloring_blocks(a, b)) << format_hypergraph(a) << format_hypergraph(b);
        if (w) {
            const auto side = as_set(w->coloring.a_side());
            EXPECT_EQ(oracle::cut(a, side), w->source_cut);
            EXPECT_EQ(oracle::cut(b, side), w->target_cut);
        }
    }
}

TEST(FindBlockingWitness, ColorBound)
{
    // over the bound: a singleton witness is still found
    const std::size_t n = 24;
    std::vector<std::pair<Agent, Agent>> star, path;
    for (Agent a = 2; a <= n; ++a)
        star.emplace_back(1, a);
    for (Agent a = 1; a < n; ++a)
        path.emplace_back(a, a + 1);
    const auto w = find_blocking_witness(Hypergraph::epr_graph(n, path), Hypergraph::epr_graph(n, star));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->coloring.a_side(), (std::vector<Agent>{1}));
    // no singleton obstruction: CAT against itself
    EXPECT_LOCC_ERROR(find_blocking_witness(Hypergraph::cat(n), Hypergraph::cat(n)), SearchBoundExceeded);
    EXPECT_FALSE(find_blocking_witness(Hypergraph::cat(n), Hypergraph::cat(n), 24));
}

TEST(MinCopies, Examples)
{
    for (const auto& t : all_spanning_trees(5))
        EXPECT_EQ(min_copies_lower_bound(Hypergraph::cat(5), t), (CopyBound{false, 4}));
    EXPECT_EQ(min_copies_lower_bound(hg(2, {{1, 2}}), hg(2, {{1, 2}})), (CopyBound{false, 1}));
    EXPECT_TRUE(min_copies_lower_bound(hg(4, {{1, 2}}), hg(4, {{3, 4}})).infinite);
    EXPECT_EQ(min_copies_lower_bound(Hypergraph::cat(3), Hypergraph::empty(3)), (CopyBound{false, 0}));
    EXPECT_LOCC_ERROR(min_copies_lower_bound(Hypergraph::cat(3), Hypergraph::cat(2)), MismatchedAgents);
}

TEST(MinCopies, AgreesWithOracle)
{
    Rng rng(9);
    for (int k = 0; k < 1000; ++k) {
        const std::size_t n = 2 + rng() % 5;
        const auto a = random_hypergraph(n, 3, rng), b = random_hypergraph(n, 4, rng);
        const auto bound = min_copies_lower_bound(a, b);
        const auto expected = oracle::copies_bound(a, b);
        if (expected == SIZE_MAX)
            EXPECT_TRUE(bound.infinite);
        else
            EXPECT_EQ(bound, (CopyBound{false, expected}));
    }
}

TEST(CutProperties, SwapSymmetryAndCopyLinearity)
{
    Rng rng(13);
    for (int k = 0; k < 1000; ++k) {
        const std::size_t n = 2 + rng() % 7;
        const auto h = random_hypergraph(n, 5, rng);
        const Bicoloring c(n, rng() & ((std::uint64_t{1} << n) - 1));
        const auto cut = bcm_cut(h, c);
        EXPECT_EQ(cut, bcm_cut(h, c.flipped()));
        const std::size_t copies = 1 + rng() % 4;
        EXPECT_EQ(bcm_cut(h.copies(copies), c), copies * cut);
    }
}

TEST(CutProperties, TreesAndCats)
{
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto cat = Hypergraph::cat(n);
        for (const auto& c : all_bicolorings(n))
            if (c.nontrivial())
                EXPECT_EQ(bcm_cut(cat, c), 1u);
        for (const auto& t : all_spanning_trees(n)) {
            std::size_t best = 0;
            for (const auto& c : all_bicolorings(n))
                if (c.nontrivial()) {
                    const auto cut = bcm_cut(t, c);
                    EXPECT_GE(cut, 1u);
                    best = std::max(best, cut);
                }
            EXPECT_EQ(best, n - 1);
        }
    }
}

TEST(Witness, MakeWitnessRejectsNonBlockingColorings)
{
    EXPECT_LOCC_ERROR(make_witness(Bicoloring::from_a_side(3, {1}), hg(3, {{1, 3}, {2, 3}}), Hypergraph::cat(3)),
        InternalInconsistency);
    BlockingWitness forged{Bicoloring::from_a_side(3, {3}), 0, 2};
    EXPECT_FALSE(witness_holds(forged, Hypergraph::cat(3), hg(3, {{1, 3}, {2, 3}})));
}
