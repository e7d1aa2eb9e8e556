#include "locc/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace locc {

namespace {

Hypergraph relabeled(std::size_t n, const std::vector<std::vector<Agent>>& edges, Rng& rng)
{
    // internal labels are 0..n-1
    std::vector<Agent> perm(n);
    std::iota(perm.begin(), perm.end(), Agent{1});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Hyperedge> out;
    out.reserve(edges.size());
    for (const auto& e : edges) {
        std::vector<Agent> members;
        for (Agent x : e)
            members.push_back(perm[x]);
        out.emplace_back(std::move(members));
    }
    return Hypergraph(n, std::move(out));
}

std::size_t uniform_index(Rng& rng, std::size_t bound)
{
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

} // namespace

Hypergraph prufer_decode(const PruferSequence& p)
{
    const std::size_t n = p.agent_count;
    if (n < 2)
        throw Error(ErrorCode::InvalidSequence, "a tree needs at least 2 agents");
    if (p.symbols.size() != n - 2)
        throw Error(ErrorCode::InvalidSequence,
            "sequence for " + std::to_string(n) + " agents must have " + std::to_string(n - 2) + " symbols");
    std::vector<std::size_t> degree(n + 1, 1);
    degree[0] = 0;
    for (Agent s : p.symbols) {
        if (s == 0 || s > n)
            throw Error(ErrorCode::InvalidSequence, "symbol " + std::to_string(s) + " outside 1.." + std::to_string(n));
        ++degree[s];
    }
    std::set<Agent> leaves;
    for (Agent a = 1; a <= n; ++a)
        if (degree[a] == 1)
            leaves.insert(a);

    std::vector<std::pair<Agent, Agent>> pairs;
    for (Agent s : p.symbols) {
        const Agent leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        pairs.emplace_back(leaf, s);
        if (--degree[s] == 1)
            leaves.insert(s);
    }
    const Agent a = *leaves.begin();
    const Agent b = *std::next(leaves.begin());
    pairs.emplace_back(a, b);
    return Hypergraph::epr_graph(n, pairs);
}

PruferSequence prufer_encode(const Hypergraph& tree)
{
    if (!is_spanning_epr_tree(tree))
        throw Error(ErrorCode::NotSpanningTree, "input is not a spanning EPR tree");
    const std::size_t n = tree.agent_count();
    std::vector<std::set<Agent>> adj(n + 1);
    for (const auto& e : tree.edges()) {
        adj[e.front()].insert(e.back());
        adj[e.back()].insert(e.front());
    }
    std::set<Agent> leaves;
    for (Agent a = 1; a <= n; ++a)
        if (adj[a].size() == 1)
            leaves.insert(a);

    PruferSequence p{n, {}};
    while (p.symbols.size() + 2 < n) {
        const Agent leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        const Agent parent = *adj[leaf].begin();
        p.symbols.push_back(parent);
        adj[parent].erase(leaf);
        adj[leaf].clear();
        if (adj[parent].size() == 1)
            leaves.insert(parent);
    }
    return p;
}

std::vector<Hypergraph> all_spanning_trees(std::size_t n)
{
    if (n < 2 || n > max_enumerated_tree_agents)
        throw Error(ErrorCode::BoundExceeded,
            "tree enumeration supports 2.." + std::to_string(max_enumerated_tree_agents) + " agents");
    std::vector<Hypergraph> trees;
    PruferSequence p{n, std::vector<Agent>(n - 2, 1)};
    while (true) {
        trees.push_back(prufer_decode(p));
        std::size_t i = p.symbols.size();
        while (i > 0 && p.symbols[i - 1] == n)
            p.symbols[--i] = 1;
        if (i == 0)
            break;
        ++p.symbols[i - 1];
    }
    return trees;
}

Hypergraph random_spanning_tree(std::size_t n, Rng& rng)
{
    if (n < 2)
        throw Error(ErrorCode::IncompatibleParameters, "a tree needs at least 2 agents");
    PruferSequence p{n, {}};
    std::uniform_int_distribution<Agent> symbol(1, static_cast<Agent>(n));
    for (std::size_t i = 0; i + 2 < n; ++i)
        p.symbols.push_back(symbol(rng));
    return prufer_decode(p);
}

Hypergraph random_r_uniform_hypertree(std::size_t n, std::size_t r, std::uint64_t seed)
{
    Rng rng(seed);
    return random_r_uniform_hypertree(n, r, rng);
}

Hypergraph random_r_uniform_hypertree(std::size_t n, std::size_t r, Rng& rng)
{
    if (r < 2 || n < r || (n - 1) % (r - 1) != 0)
        throw Error(ErrorCode::IncompatibleParameters,
            "no " + std::to_string(r) + "-uniform hypertree on " + std::to_string(n) + " agents");
    const std::size_t m = (n - 1) / (r - 1);
    std::vector<std::vector<Agent>> edges;
    std::vector<Agent> first(r);
    std::iota(first.begin(), first.end(), Agent{0});
    edges.push_back(first);
    Agent next = static_cast<Agent>(r);
    for (std::size_t k = 1; k < m; ++k) {
        std::vector<Agent> e{static_cast<Agent>(uniform_index(rng, next))};
        for (std::size_t j = 1; j < r; ++j)
            e.push_back(next++);
        edges.push_back(std::move(e));
    }
    return relabeled(n, edges, rng);
}

Hypergraph random_hypertree(std::size_t n, std::size_t max_edge_size, Rng& rng)
{
    if (max_edge_size < 2 || n < 2)
        throw Error(ErrorCode::IncompatibleParameters, "hypertrees need 2 agents and edges of size >= 2");
    std::vector<std::vector<Agent>> edges;
    Agent next = 0;
    while (next < n) {
        // a new edge reuses one existing agent unless it is the first
        const std::size_t fresh_room = n - next + (next == 0 ? 0 : 1);
        const std::size_t hi = std::min(max_edge_size, fresh_room);
        if (hi < 2)
            break;
        const std::size_t size = 2 + uniform_index(rng, hi - 1);
        std::vector<Agent> e;
        if (next != 0)
            e.push_back(static_cast<Agent>(uniform_index(rng, next)));
        while (e.size() < size)
            e.push_back(next++);
        edges.push_back(std::move(e));
    }
    return relabeled(n, edges, rng);
}

Hypergraph random_disconnected_epr_graph(std::size_t n, Rng& rng)
{
    if (n < 4)
        throw Error(ErrorCode::IncompatibleParameters, "disconnected graphs with two edges need 4 agents");
    while (true) {
        const std::size_t k = 2 + uniform_index(rng, n - 2);
        std::vector<std::vector<Agent>> groups(k);
        for (Agent a = 1; a <= n; ++a)
            groups[uniform_index(rng, k)].push_back(a);
        std::vector<std::pair<Agent, Agent>> pairs;
        for (const auto& g : groups) {
            if (g.size() < 2)
                continue;
            const auto t = random_spanning_tree(g.size(), rng);
            for (const auto& e : t.edges())
                pairs.emplace_back(g[e.front() - 1], g[e.back() - 1]);
            if (g.size() >= 3 && uniform_index(rng, 3) == 0) {
                const auto x = uniform_index(rng, g.size());
                auto y = uniform_index(rng, g.size() - 1);
                y += y >= x;
                pairs.emplace_back(g[x], g[y]);
            }
        }
        auto h = Hypergraph::epr_graph(n, pairs);
        if (h.edge_count() >= 2 && !is_connected(h))
            return h;
    }
}

} // namespace locc
