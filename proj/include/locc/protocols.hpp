#pragma once

#include "locc/topology.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace locc {

enum class MoveKind : std::uint8_t { Discard, MeasureOut, Swap, CatExpand };

std::string_view move_kind_name(MoveKind kind);
MoveKind move_kind_from_name(std::string_view name);

/// One deterministic LOCC step on a hypergraph state.
///
///   Discard(E)          drop E
///   MeasureOut(E, v)    v measures in the diagonal basis: E -> E \ {v}, |E| >= 3
///   Swap({a,b},{b,c})   entanglement swapping at b: -> {a,c}
///   CatExpand(E,{a,b})  a in E teleports into b: -> E + {b}
///
/// Every move strictly lowers the sum of hyperedge sizes.
struct LoccMove {
    MoveKind kind;
    Hyperedge first;
    std::optional<Hyperedge> second;
    Agent agent = 0;

    static LoccMove discard(Hyperedge e) { return {MoveKind::Discard, std::move(e), std::nullopt, 0}; }
    static LoccMove measure_out(Hyperedge e, Agent v) { return {MoveKind::MeasureOut, std::move(e), std::nullopt, v}; }
    static LoccMove swap(Hyperedge e1, Hyperedge e2);
    static LoccMove cat_expand(Hyperedge cat, Hyperedge pair) { return {MoveKind::CatExpand, std::move(cat), std::move(pair), 0}; }

    std::string to_string() const;

    friend bool operator==(const LoccMove&, const LoccMove&) = default;
    friend std::strong_ordering operator<=>(const LoccMove& x, const LoccMove& y);
};

struct ProtocolTrace {
    Hypergraph start;
    std::vector<LoccMove> moves;
    Hypergraph end;
};

inline constexpr std::size_t default_search_budget = 1'000'000;

/// Throws IllegalMove naming the violated precondition.
Hypergraph apply_move(const Hypergraph& state, const LoccMove& move);
Hypergraph replay_moves(const Hypergraph& start, const std::vector<LoccMove>& moves);
/// Replays from start, requiring each move to be legal and the final state
/// to equal trace.end.
bool trace_replays(const ProtocolTrace& trace);
/// Joins two traces where first.end == second.start.
ProtocolTrace concatenate(const ProtocolTrace& first, const ProtocolTrace& second);

/// n-2 CatExpand moves along a depth-first order rooted at agent 1.
ProtocolTrace tree_to_cat(const Hypergraph& tree);
/// n-2 MeasureOut moves on the n-CAT keeping agents a and b.
ProtocolTrace cat_to_epr(std::size_t n, Agent a, Agent b);
/// From n-1 copies of the n-CAT, one EPR pair per tree edge.
ProtocolTrace cat_copies_to_tree(const Hypergraph& tree);
/// From QD(t1,t2)+1 copies of t1: one copy keeps the common edges, every
/// other copy swaps along a t1 path to produce one edge of t2 \ t1.
ProtocolTrace trees_copies_to_tree(const Hypergraph& t1, const Hypergraph& t2);

/// Shortest trace (ties broken by the least move sequence) reaching target,
/// by breadth-first search over canonical states. nullopt when the finite
/// move graph is exhausted; BudgetExceeded when more than `budget`
/// distinct states would be visited.
std::optional<ProtocolTrace> reachability_search(const Hypergraph& source, const Hypergraph& target,
    std::size_t budget = default_search_budget);

/// All legal moves on a state, in move order.
std::vector<LoccMove> legal_moves(const Hypergraph& state);

} // namespace locc
