#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace locc {

/// Agents are numbered 1..n; the numbering is the canonical order used for
/// tie-breaking, coloring bit strings and serialization.
using Agent = std::uint32_t;

/// A set of agents sharing one maximally entangled state: size 2 is an EPR
/// pair, size k >= 3 a k-CAT (GHZ) state. Members are kept sorted.
class Hyperedge {
public:
    explicit Hyperedge(std::vector<Agent> members);
    Hyperedge(std::initializer_list<Agent> members) : Hyperedge(std::vector<Agent>(members)) {}

    std::span<const Agent> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(Agent a) const noexcept;
    Agent front() const noexcept { return members_.front(); }
    Agent back() const noexcept { return members_.back(); }

    /// Bit i set for agent i+1. Requires every member <= 64.
    std::uint64_t mask() const;

    std::string to_string() const;

    friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
    friend auto operator<=>(const Hyperedge& a, const Hyperedge& b) { return a.members_ <=> b.members_; }

private:
    std::vector<Agent> members_;
};

/// Multiset of hyperedges over the agents 1..n. Repeated hyperedges encode
/// copies of the same state. EPR graphs are the 2-uniform case. Edges are
/// stored in canonical (lexicographic) order, so equality is multiset
/// equality.
class Hypergraph {
public:
    Hypergraph(std::size_t agent_count, std::vector<Hyperedge> edges);

    static Hypergraph cat(std::size_t n);
    static Hypergraph epr_graph(std::size_t n, const std::vector<std::pair<Agent, Agent>>& pairs);
    static Hypergraph empty(std::size_t n) { return Hypergraph(n, {}); }

    std::size_t agent_count() const noexcept { return agent_count_; }
    const std::vector<Hyperedge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool contains_agent(Agent a) const noexcept { return a >= 1 && a <= agent_count_; }

    std::size_t multiplicity(const Hyperedge& e) const;
    bool has_repeated_edges() const;
    bool has_edge(const Hyperedge& e) const { return multiplicity(e) > 0; }

    /// Number of hyperedges (with multiplicity) containing each agent;
    /// index 0 is unused.
    std::vector<std::size_t> incidence_counts() const;

    /// Sum of hyperedge sizes; strictly decreases under every protocol move.
    std::size_t size_potential() const;

    /// Every hyperedge repeated k times.
    Hypergraph copies(std::size_t k) const;
    /// Multiset union of the edges of two hypergraphs on the same agents.
    Hypergraph merged_with(const Hypergraph& other) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t agent_count_;
    std::vector<Hyperedge> edges_;
};

struct StructureReport {
    bool connected = false;
    bool is_hypertree = false;
    std::optional<std::size_t> uniform_r;
    std::vector<Agent> pendant_vertices;
    std::vector<Agent> isolated_agents;
    std::size_t edge_count = 0;
};

bool is_connected(const Hypergraph& h);
bool is_spanning_epr_tree(const Hypergraph& h);
/// Connected and cycle-free: the agent/hyperedge incidence graph is a tree.
bool is_entangled_hypertree(const Hypergraph& h);
/// Common hyperedge size, or nullopt when sizes differ. Throws EmptyStructure
/// when there are no hyperedges.
std::optional<std::size_t> uniformity(const Hypergraph& h);
std::vector<Agent> pendant_vertices(const Hypergraph& h);
std::vector<Agent> isolated_agents(const Hypergraph& h);
StructureReport structure_report(const Hypergraph& h);

/// Connected components as sorted agent lists, ordered by lowest member.
std::vector<std::vector<Agent>> connected_components(const Hypergraph& h);

/// True when some hyperedge contains both agents.
bool co_occur(const Hypergraph& h, Agent a, Agent b);

/// Agents reachable from `start` without traversing hyperedge `excluded_edge`
/// (an index into edges()). In a hypertree with start in that edge this is
/// start together with every branch hanging from it away from the edge.
std::vector<Agent> side_of_edge(const Hypergraph& h, std::size_t excluded_edge, Agent start);

/// Edge indices of the unique hyperpath from a to b in a hypertree, where
/// consecutive hyperedges share exactly one agent. Empty when a == b.
std::vector<std::size_t> hypertree_path(const Hypergraph& h, Agent from, Agent to);

/// Canonical text form: "agents: n" then one "cat: i1 ... ik" line per
/// hyperedge, members ascending, hyperedges in lexicographic order.
std::string format_hypergraph(const Hypergraph& h);
/// Order-insensitive parser for the canonical text form. Blank lines and
/// '#' comments are ignored. Errors carry the offending line number.
Hypergraph parse_hypergraph(std::string_view text);

} // namespace locc
