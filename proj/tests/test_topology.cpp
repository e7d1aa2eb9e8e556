#include "helpers.hpp"
#include "oracles.hpp"

#include "locc/enumeration.hpp"
#include "locc/topology.hpp"

#include <functional>

using namespace locc;
using testing_support::hg;

TEST(Hyperedge, SortsMembersAndRejectsBadInput)
{
    Hyperedge e{3, 1, 2};
    EXPECT_EQ(e.to_string(), "{1,2,3}");
    EXPECT_EQ(e.front(), 1u);
    EXPECT_TRUE(e.contains(2));
    EXPECT_FALSE(e.contains(4));
    EXPECT_EQ(e.mask(), 0b111u);
    EXPECT_LOCC_ERROR(Hyperedge({1}), MalformedHypergraph);
    EXPECT_LOCC_ERROR(Hyperedge({0, 1}), MalformedHypergraph);
    EXPECT_LOCC_ERROR(Hyperedge({2, 2}), MalformedHypergraph);
    EXPECT_LOCC_ERROR(Hyperedge({1, 65}).mask(), BoundExceeded);
}

TEST(Hypergraph, CanonicalOrderAndMultiplicity)
{
    const auto h = hg(4, {{3, 4}, {1, 2}, {1, 2}});
    EXPECT_EQ(h.edges().front(), (Hyperedge{1, 2}));
    EXPECT_EQ(h.multiplicity(Hyperedge{1, 2}), 2u);
    EXPECT_TRUE(h.has_repeated_edges());
    EXPECT_EQ(h, hg(4, {{1, 2}, {3, 4}, {2, 1}}));
    EXPECT_EQ(h.size_potential(), 6u);
    EXPECT_EQ(Hypergraph::cat(3).copies(2).edge_count(), 2u);
    EXPECT_LOCC_ERROR(hg(2, {{1, 3}}), MalformedHypergraph);
    EXPECT_LOCC_ERROR(Hypergraph::empty(0), MalformedHypergraph);
    EXPECT_LOCC_ERROR(h.merged_with(Hypergraph::cat(3)), MismatchedAgents);
}

TEST(Connectivity, Examples)
{
    EXPECT_TRUE(is_connected(hg(3, {{1, 2}, {2, 3}})));
    EXPECT_FALSE(is_connected(hg(4, {{1, 2}, {3, 4}})));
    EXPECT_FALSE(is_connected(hg(3, {{1, 2}})));
    EXPECT_TRUE(is_connected(Hypergraph::empty(1)));
    // a 7-agent spanning tree
    EXPECT_TRUE(is_connected(hg(7, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {5, 6}, {5, 7}})));
    EXPECT_EQ(connected_components(hg(5, {{4, 5}, {1, 3}})),
        (std::vector<std::vector<Agent>>{{1, 3}, {2}, {4, 5}}));
}

TEST(SpanningTree, Examples)
{
    EXPECT_TRUE(is_spanning_epr_tree(hg(3, {{1, 2}, {1, 3}})));
    EXPECT_FALSE(is_spanning_epr_tree(hg(3, {{1, 2}, {2, 3}, {1, 3}})));
    EXPECT_FALSE(is_spanning_epr_tree(Hypergraph::cat(3)));
    EXPECT_FALSE(is_spanning_epr_tree(hg(3, {{1, 2}, {1, 2}})));
}

TEST(Hypertree, Examples)
{
    EXPECT_TRUE(is_entangled_hypertree(hg(5, {{1, 2, 3}, {3, 4, 5}})));
    EXPECT_FALSE(is_entangled_hypertree(hg(4, {{1, 2, 3}, {2, 3, 4}})));
    EXPECT_FALSE(is_entangled_hypertree(hg(3, {{1, 2, 3}, {1, 2, 3}})));
    EXPECT_FALSE(is_entangled_hypertree(hg(6, {{1, 2, 3}, {4, 5, 6}})));
    EXPECT_TRUE(is_entangled_hypertree(hg(4, {{1, 2}, {2, 3}, {2, 4}})));
}

TEST(Uniformity, Examples)
{
    EXPECT_EQ(uniformity(hg(5, {{1, 2, 3}, {3, 4, 5}})), 3u);
    EXPECT_EQ(uniformity(hg(4, {{1, 2}, {2, 3, 4}})), std::nullopt);
    EXPECT_EQ(uniformity(hg(3, {{1, 2}, {1, 3}})), 2u);
    EXPECT_LOCC_ERROR(uniformity(Hypergraph::empty(3)), EmptyStructure);
}

TEST(Pendant, Examples)
{
    EXPECT_EQ(pendant_vertices(hg(5, {{1, 2, 3}, {3, 4, 5}})), (std::vector<Agent>{1, 2, 4, 5}));
    EXPECT_EQ(pendant_vertices(hg(3, {{1, 2}, {2, 3}})), (std::vector<Agent>{1, 3}));
    EXPECT_EQ(pendant_vertices(Hypergraph::cat(3)), (std::vector<Agent>{1, 2, 3}));
    EXPECT_EQ(pendant_vertices(hg(4, {{1, 2}})), (std::vector<Agent>{1, 2}));
    EXPECT_EQ(isolated_agents(hg(4, {{1, 2}})), (std::vector<Agent>{3, 4}));
}

TEST(StructureReport, Examples)
{
    const auto r = structure_report(hg(7, {{1, 2, 3}, {3, 4, 5}, {5, 6, 7}}));
    EXPECT_TRUE(r.connected);
    EXPECT_TRUE(r.is_hypertree);
    EXPECT_EQ(r.uniform_r, 3u);
    EXPECT_EQ(r.edge_count, 3u);

    const auto d = structure_report(hg(4, {{1, 2}, {3, 4}}));
    EXPECT_FALSE(d.connected);
    EXPECT_FALSE(d.is_hypertree);

    const auto ghz = structure_report(Hypergraph::cat(3));
    EXPECT_EQ(ghz.uniform_r, 3u);
    EXPECT_EQ(ghz.pendant_vertices, (std::vector<Agent>{1, 2, 3}));

    const auto empty = structure_report(Hypergraph::empty(2));
    EXPECT_FALSE(empty.uniform_r.has_value());
    EXPECT_EQ(empty.isolated_agents, (std::vector<Agent>{1, 2}));
}

TEST(HypertreeGeometry, SidesAndPaths)
{
    const auto h = hg(7, {{1, 2, 3}, {3, 4, 5}, {5, 6, 7}});
    // edge 1 is {3,4,5}
    EXPECT_EQ(side_of_edge(h, 1, 3), (std::vector<Agent>{1, 2, 3}));
    EXPECT_EQ(side_of_edge(h, 1, 4), (std::vector<Agent>{4}));
    EXPECT_EQ(side_of_edge(h, 1, 5), (std::vector<Agent>{5, 6, 7}));
    EXPECT_EQ(hypertree_path(h, 1, 7), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(hypertree_path(h, 4, 4), std::vector<std::size_t>{});
    EXPECT_EQ(hypertree_path(h, 3, 5), (std::vector<std::size_t>{1}));
    EXPECT_LOCC_ERROR(hypertree_path(h, 1, 8), BadAgents);
    EXPECT_LOCC_ERROR(hypertree_path(hg(4, {{1, 2}}), 1, 3), MalformedHypergraph);
}

TEST(TextFormat, RoundTripAndCanonicalEmission)
{
    const auto h = parse_hypergraph("# two pairs\nagents: 4\n\ncat: 4 3\ncat: 2 1   # first\ncat: 1 2\n");
    EXPECT_EQ(format_hypergraph(h), "agents: 4\ncat: 1 2\ncat: 1 2\ncat: 3 4\n");
    EXPECT_EQ(parse_hypergraph(format_hypergraph(h)), h);
    EXPECT_EQ(parse_hypergraph("agents: 3\n"), Hypergraph::empty(3));
}

TEST(TextFormat, ErrorsCarryLineNumbers)
{
    auto message = [](std::string_view text) {
        try {
            parse_hypergraph(text);
        }
        catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError);
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message("agents: 3\ncat: 1 4\n").find("line 2"), std::string::npos);
    EXPECT_NE(message("agents: 3\n\ncat: 1 x\n").find("line 3"), std::string::npos);
    EXPECT_NE(message("agents: 3\ncat: 1\n").find("line 2"), std::string::npos);
    EXPECT_NE(message("agents: 3\ncat: 2 2\n").find("line 2"), std::string::npos);
    EXPECT_NE(message("agents: 3\nagents: 3\n").find("line 2"), std::string::npos);
    EXPECT_NE(message("pairs: 1 2\n").find("line 1"), std::string::npos);
    EXPECT_NE(message("cat: 1 2\n").find("header"), std::string::npos);
}

namespace {

std::vector<Hyperedge> every_hyperedge(std::size_t n)
{
    std::vector<Hyperedge> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        std::vector<Agent> members;
        for (Agent a = 1; a <= n; ++a)
            if (bits >> (a - 1) & 1)
                members.push_back(a);
        if (members.size() >= 2)
            out.emplace_back(std::move(members));
    }
    return out;
}

// Calls f on every multiset of at most `max_edges` hyperedges over n agents.
void for_each_small_hypergraph(std::size_t n, std::size_t max_edges, const std::function<void(const Hypergraph&)>& f)
{
    const auto all = every_hyperedge(n);
    std::vector<Hyperedge> chosen;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        f(Hypergraph(n, chosen));
        if (chosen.size() == max_edges)
            return;
        for (std::size_t i = from; i < all.size(); ++i) {
            chosen.push_back(all[i]);
            grow(i);
            chosen.pop_back();
        }
    };
    grow(0);
}

} // namespace

TEST(HypertreeProperty, IncidenceTreeMatchesTwoPathsDefinitionExhaustively)
{
    for (std::size_t n = 1; n <= 7; ++n) {
        std::size_t checked = 0, trees = 0;
        for_each_small_hypergraph(n, 4, [&](const Hypergraph& h) {
            const bool fast = is_entangled_hypertree(h);
            ASSERT_EQ(fast, oracle::hypertree_by_paths(h)) << format_hypergraph(h);
            ASSERT_EQ(fast, oracle::hypertree(h)) << format_hypergraph(h);
            if (fast) {
                ASSERT_TRUE(is_connected(h));
                if (!h.edges().empty() && uniformity(h) == 2u)
                    ASSERT_TRUE(is_spanning_epr_tree(h));
            }
            ++checked;
            trees += fast;
        });
        EXPECT_GT(checked, 0u);
        if (n >= 2)
            EXPECT_GT(trees, 0u);
    }
}

TEST(HypertreeProperty, GeneratedHypertreesPassTheTwoPathsDefinition)
{
    Rng rng(11);
    for (std::size_t n = 6; n <= 9; ++n)
        for (int k = 0; k < 500; ++k) {
            const auto h = random_hypertree(n, 4, rng);
            ASSERT_TRUE(oracle::hypertree_by_paths(h)) << format_hypergraph(h);
            ASSERT_TRUE(is_entangled_hypertree(h));
        }
}

TEST(ConnectivityProperty, MatchesOracleOnSmallHypergraphs)
{
    for (std::size_t n = 1; n <= 4; ++n)
        for_each_small_hypergraph(n, 3, [&](const Hypergraph& h) {
            ASSERT_EQ(is_connected(h), oracle::connected(h)) << format_hypergraph(h);
            ASSERT_EQ(is_spanning_epr_tree(h), oracle::spanning_tree(h) && !h.has_repeated_edges());
            for (Agent a = 1; a <= n; ++a)
                for (Agent b = 1; b <= n; ++b)
                    if (a != b)
                        ASSERT_EQ(co_occur(h, a, b), oracle::together(h, a, b));
        });
}
