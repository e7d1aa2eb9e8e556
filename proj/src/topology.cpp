#include "locc/topology.hpp"

#include "locc/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace locc {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // false when already joined
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

DisjointSets agent_components(const Hypergraph& h)
{
    DisjointSets sets(h.agent_count() + 1);
    for (const auto& e : h.edges())
        for (Agent a : e.members())
            sets.unite(e.front(), a);
    return sets;
}

} // namespace

Hyperedge::Hyperedge(std::vector<Agent> members) : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    if (members_.size() < 2)
        throw Error(ErrorCode::MalformedHypergraph, "hyperedge needs at least two agents");
    if (members_.front() == 0)
        throw Error(ErrorCode::MalformedHypergraph, "agents are numbered from 1");
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw Error(ErrorCode::MalformedHypergraph, "repeated agent in hyperedge " + to_string());
}

bool Hyperedge::contains(Agent a) const noexcept
{
    return std::binary_search(members_.begin(), members_.end(), a);
}

std::uint64_t Hyperedge::mask() const
{
    if (members_.back() > 64)
        throw Error(ErrorCode::BoundExceeded, "bit masks support at most 64 agents");
    std::uint64_t m = 0;
    for (Agent a : members_)
        m |= std::uint64_t{1} << (a - 1);
    return m;
}

std::string Hyperedge::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(members_[i]);
    }
    return s + "}";
}

Hypergraph::Hypergraph(std::size_t agent_count, std::vector<Hyperedge> edges)
    : agent_count_(agent_count), edges_(std::move(edges))
{
    if (agent_count_ == 0)
        throw Error(ErrorCode::MalformedHypergraph, "agent set must be nonempty");
    for (const auto& e : edges_)
        if (e.back() > agent_count_)
            throw Error(ErrorCode::MalformedHypergraph,
                "hyperedge " + e.to_string() + " mentions an agent outside 1.." + std::to_string(agent_count_));
    std::sort(edges_.begin(), edges_.end());
}

Hypergraph Hypergraph::cat(std::size_t n)
{
    std::vector<Agent> all(n);
    std::iota(all.begin(), all.end(), Agent{1});
    return Hypergraph(n, {Hyperedge(std::move(all))});
}

Hypergraph Hypergraph::epr_graph(std::size_t n, const std::vector<std::pair<Agent, Agent>>& pairs)
{
    std::vector<Hyperedge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs)
        edges.push_back(Hyperedge{a, b});
    return Hypergraph(n, std::move(edges));
}

std::size_t Hypergraph::multiplicity(const Hyperedge& e) const
{
    auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
    return static_cast<std::size_t>(hi - lo);
}

bool Hypergraph::has_repeated_edges() const
{
    return std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end();
}

std::vector<std::size_t> Hypergraph::incidence_counts() const
{
    std::vector<std::size_t> counts(agent_count_ + 1, 0);
    for (const auto& e : edges_)
        for (Agent a : e.members())
            ++counts[a];
    return counts;
}

std::size_t Hypergraph::size_potential() const
{
    std::size_t total = 0;
    for (const auto& e : edges_)
        total += e.size();
    return total;
}

Hypergraph Hypergraph::copies(std::size_t k) const
{
    std::vector<Hyperedge> edges;
    edges.reserve(edges_.size() * k);
    for (std::size_t i = 0; i < k; ++i)
        edges.insert(edges.end(), edges_.begin(), edges_.end());
    return Hypergraph(agent_count_, std::move(edges));
}

Hypergraph Hypergraph::merged_with(const Hypergraph& other) const
{
    if (other.agent_count_ != agent_count_)
        throw Error(ErrorCode::MismatchedAgents, "cannot merge hypergraphs over different agent sets");
    std::vector<Hyperedge> edges = edges_;
    edges.insert(edges.end(), other.edges_.begin(), other.edges_.end());
    return Hypergraph(agent_count_, std::move(edges));
}

bool is_connected(const Hypergraph& h)
{
    auto sets = agent_components(h);
    for (Agent a = 2; a <= h.agent_count(); ++a)
        if (sets.find(a) != sets.find(1))
            return false;
    return true;
}

bool is_spanning_epr_tree(const Hypergraph& h)
{
    if (h.edge_count() + 1 != h.agent_count())
        return false;
    for (const auto& e : h.edges())
        if (e.size() != 2)
            return false;
    return !h.has_repeated_edges() && is_connected(h);
}

bool is_entangled_hypertree(const Hypergraph& h)
{
    // Incidence graph: agents 1..n, hyperedge i is node n+1+i.
    const std::size_t n = h.agent_count();
    DisjointSets sets(n + 1 + h.edge_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        for (Agent a : h.edges()[i].members())
            if (!sets.unite(a, n + 1 + i))
                return false;
    for (std::size_t node = 2; node < n + 1 + h.edge_count(); ++node)
        if (sets.find(node) != sets.find(1))
            return false;
    return true;
}

std::optional<std::size_t> uniformity(const Hypergraph& h)
{
    if (h.edges().empty())
        throw Error(ErrorCode::EmptyStructure, "uniformity of a hypergraph without hyperedges");
    const std::size_t r = h.edges().front().size();
    for (const auto& e : h.edges())
        if (e.size() != r)
            return std::nullopt;
    return r;
}

std::vector<Agent> pendant_vertices(const Hypergraph& h)
{
    auto counts = h.incidence_counts();
    std::vector<Agent> out;
    for (Agent a = 1; a <= h.agent_count(); ++a)
        if (counts[a] == 1)
            out.push_back(a);
    return out;
}

std::vector<Agent> isolated_agents(const Hypergraph& h)
{
    auto counts = h.incidence_counts();
    std::vector<Agent> out;
    for (Agent a = 1; a <= h.agent_count(); ++a)
        if (counts[a] == 0)
            out.push_back(a);
    return out;
}

StructureReport structure_report(const Hypergraph& h)
{
    StructureReport report;
    report.connected = is_connected(h);
    report.is_hypertree = is_entangled_hypertree(h);
    if (!h.edges().empty())
        report.uniform_r = uniformity(h);
    report.pendant_vertices = pendant_vertices(h);
    report.isolated_agents = isolated_agents(h);
    report.edge_count = h.edge_count();
    if (report.is_hypertree && report.uniform_r
        && report.edge_count * (*report.uniform_r - 1) + 1 != h.agent_count())
        throw Error(ErrorCode::InternalInconsistency, "hypertree violates n = m(r-1)+1");
    return report;
}

std::vector<std::vector<Agent>> connected_components(const Hypergraph& h)
{
    auto sets = agent_components(h);
    std::vector<std::vector<Agent>> by_root(h.agent_count() + 1);
    for (Agent a = 1; a <= h.agent_count(); ++a)
        by_root[sets.find(a)].push_back(a);
    std::vector<std::vector<Agent>> out;
    for (auto& c : by_root)
        if (!c.empty())
            out.push_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
}

bool co_occur(const Hypergraph& h, Agent a, Agent b)
{
    return std::any_of(h.edges().begin(), h.edges().end(),
        [&](const Hyperedge& e) { return e.contains(a) && e.contains(b); });
}

std::vector<Agent> side_of_edge(const Hypergraph& h, std::size_t excluded_edge, Agent start)
{
    const std::size_t n = h.agent_count();
    std::vector<std::vector<std::size_t>> incident(n + 1);
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        if (i != excluded_edge)
            for (Agent a : h.edges()[i].members())
                incident[a].push_back(i);

    std::vector<bool> seen_agent(n + 1, false), seen_edge(h.edge_count(), false);
    std::vector<Agent> stack{start}, out;
    seen_agent[start] = true;
    while (!stack.empty()) {
        Agent a = stack.back();
        stack.pop_back();
        out.push_back(a);
        for (std::size_t ei : incident[a]) {
            if (seen_edge[ei])
                continue;
            seen_edge[ei] = true;
            for (Agent b : h.edges()[ei].members())
                if (!seen_agent[b]) {
                    seen_agent[b] = true;
                    stack.push_back(b);
                }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> hypertree_path(const Hypergraph& h, Agent from, Agent to)
{
    const std::size_t n = h.agent_count();
    if (!h.contains_agent(from) || !h.contains_agent(to))
        throw Error(ErrorCode::BadAgents, "path endpoints outside the agent set");
    if (from == to)
        return {};

    std::vector<std::vector<std::size_t>> incident(n + 1);
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        for (Agent a : h.edges()[i].members())
            incident[a].push_back(i);

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> via_edge(n + 1, none);
    std::vector<Agent> prev_agent(n + 1, 0);
    std::vector<bool> seen_edge(h.edge_count(), false), seen_agent(n + 1, false);
    std::queue<Agent> queue;
    queue.push(from);
    seen_agent[from] = true;
    while (!queue.empty() && !seen_agent[to]) {
        Agent a = queue.front();
        queue.pop();
        for (std::size_t ei : incident[a]) {
            if (seen_edge[ei])
                continue;
            seen_edge[ei] = true;
            for (Agent b : h.edges()[ei].members())
                if (!seen_agent[b]) {
                    seen_agent[b] = true;
                    via_edge[b] = ei;
                    prev_agent[b] = a;
                    queue.push(b);
                }
        }
    }
    if (!seen_agent[to])
        throw Error(ErrorCode::MalformedHypergraph, "no hyperpath between the agents");

    std::vector<std::size_t> path;
    for (Agent a = to; a != from; a = prev_agent[a])
        path.push_back(via_edge[a]);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace locc
