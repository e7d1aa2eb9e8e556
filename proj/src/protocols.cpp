#include "locc/protocols.hpp"

#include "locc/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

namespace locc {

namespace {

[[noreturn]] void illegal(const LoccMove& m, const std::string& why)
{
    throw Error(ErrorCode::IllegalMove, m.to_string() + ": " + why);
}

// Removes one instance of e; false when absent.
bool take(std::vector<Hyperedge>& edges, const Hyperedge& e)
{
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end())
        return false;
    edges.erase(it);
    return true;
}

std::vector<Agent> shared_agents(const Hyperedge& x, const Hyperedge& y)
{
    std::vector<Agent> out;
    std::set_intersection(x.members().begin(), x.members().end(), y.members().begin(), y.members().end(),
        std::back_inserter(out));
    return out;
}

void require_tree(const Hypergraph& t)
{
    if (!is_spanning_epr_tree(t))
        throw Error(ErrorCode::NotSpanningTree, "expected a spanning EPR tree");
}

std::vector<std::vector<Agent>> adjacency(const Hypergraph& t)
{
    std::vector<std::vector<Agent>> adj(t.agent_count() + 1);
    for (const auto& e : t.edges()) {
        adj[e.front()].push_back(e.back());
        adj[e.back()].push_back(e.front());
    }
    for (auto& list : adj)
        std::sort(list.begin(), list.end());
    return adj;
}

// Agent sequence of the tree path from a to b.
std::vector<Agent> tree_path(const Hypergraph& t, Agent a, Agent b)
{
    const auto adj = adjacency(t);
    std::vector<Agent> parent(t.agent_count() + 1, 0);
    std::vector<Agent> stack{a};
    parent[a] = a;
    while (!stack.empty()) {
        Agent x = stack.back();
        stack.pop_back();
        for (Agent y : adj[x])
            if (!parent[y]) {
                parent[y] = x;
                stack.push_back(y);
            }
    }
    std::vector<Agent> path{b};
    while (path.back() != a)
        path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

// ---- mask-based search ---------------------------------------------------

using State = std::vector<std::uint64_t>;

struct StateHash {
    std::size_t operator()(const State& s) const noexcept
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ s.size();
        for (auto m : s) {
            h ^= m + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

// Lexicographic order of the sorted member lists encoded by two masks.
bool lex_less(std::uint64_t a, std::uint64_t b)
{
    while (a && b) {
        const int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb)
            return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

struct MaskMove {
    MoveKind kind;
    std::uint64_t first;
    std::uint64_t second;
    Agent agent;
};

bool move_less(const MaskMove& x, const MaskMove& y)
{
    if (x.kind != y.kind)
        return x.kind < y.kind;
    if (x.first != y.first)
        return lex_less(x.first, y.first);
    if (x.second != y.second)
        return lex_less(x.second, y.second);
    return x.agent < y.agent;
}

Hyperedge edge_of_mask(std::uint64_t m)
{
    std::vector<Agent> members;
    while (m) {
        members.push_back(static_cast<Agent>(std::countr_zero(m) + 1));
        m &= m - 1;
    }
    return Hyperedge(std::move(members));
}

LoccMove to_move(const MaskMove& m)
{
    switch (m.kind) {
    case MoveKind::Discard: return LoccMove::discard(edge_of_mask(m.first));
    case MoveKind::MeasureOut: return LoccMove::measure_out(edge_of_mask(m.first), m.agent);
    case MoveKind::Swap: return LoccMove::swap(edge_of_mask(m.first), edge_of_mask(m.second));
    case MoveKind::CatExpand: return LoccMove::cat_expand(edge_of_mask(m.first), edge_of_mask(m.second));
    }
    throw Error(ErrorCode::InternalInconsistency, "unknown move kind");
}

std::vector<MaskMove> mask_moves(const State& s)
{
    State distinct = s;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<MaskMove> moves;
    for (auto e : distinct) {
        moves.push_back({MoveKind::Discard, e, 0, 0});
        if (std::popcount(e) >= 3)
            for (auto rest = e; rest; rest &= rest - 1)
                moves.push_back({MoveKind::MeasureOut, e, 0, static_cast<Agent>(std::countr_zero(rest) + 1)});
    }
    for (auto x : distinct) {
        for (auto y : distinct) {
            if (x == y || std::popcount(x & y) != 1)
                continue;
            if (std::popcount(x) == 2 && std::popcount(y) == 2 && lex_less(x, y))
                moves.push_back({MoveKind::Swap, x, y, 0});
            if (std::popcount(y) == 2)
                moves.push_back({MoveKind::CatExpand, x, y, 0});
        }
    }
    std::sort(moves.begin(), moves.end(), move_less);
    return moves;
}

State apply_mask_move(const State& s, const MaskMove& m)
{
    State next = s;
    auto remove_one = [&](std::uint64_t e) { next.erase(std::find(next.begin(), next.end(), e)); };
    switch (m.kind) {
    case MoveKind::Discard: remove_one(m.first); break;
    case MoveKind::MeasureOut:
        remove_one(m.first);
        next.push_back(m.first & ~(std::uint64_t{1} << (m.agent - 1)));
        break;
    case MoveKind::Swap:
        remove_one(m.first);
        remove_one(m.second);
        next.push_back(m.first ^ m.second);
        break;
    case MoveKind::CatExpand:
        remove_one(m.first);
        remove_one(m.second);
        next.push_back(m.first | m.second);
        break;
    }
    std::sort(next.begin(), next.end());
    return next;
}

State state_of(const Hypergraph& h)
{
    State s;
    for (const auto& e : h.edges())
        s.push_back(e.mask());
    std::sort(s.begin(), s.end());
    return s;
}

std::size_t potential(const State& s)
{
    std::size_t p = 0;
    for (auto m : s)
        p += static_cast<std::size_t>(std::popcount(m));
    return p;
}

} // namespace

std::string_view move_kind_name(MoveKind kind)
{
    switch (kind) {
    case MoveKind::Discard: return "Discard";
    case MoveKind::MeasureOut: return "MeasureOut";
    case MoveKind::Swap: return "Swap";
    case MoveKind::CatExpand: return "CatExpand";
    }
    return "?";
}

MoveKind move_kind_from_name(std::string_view name)
{
    for (auto k : {MoveKind::Discard, MoveKind::MeasureOut, MoveKind::Swap, MoveKind::CatExpand})
        if (move_kind_name(k) == name)
            return k;
    throw Error(ErrorCode::BadReport, "unknown move kind '" + std::string(name) + "'");
}

LoccMove LoccMove::swap(Hyperedge e1, Hyperedge e2)
{
    if (e2 < e1)
        std::swap(e1, e2);
    return {MoveKind::Swap, std::move(e1), std::move(e2), 0};
}

std::string LoccMove::to_string() const
{
    std::string s(move_kind_name(kind));
    s += '(' + first.to_string();
    if (second)
        s += ", " + second->to_string();
    if (kind == MoveKind::MeasureOut)
        s += ", " + std::to_string(agent);
    return s + ')';
}

std::strong_ordering operator<=>(const LoccMove& x, const LoccMove& y)
{
    if (auto c = x.kind <=> y.kind; c != 0)
        return c;
    if (auto c = x.first <=> y.first; c != 0)
        return c;
    if (auto c = x.second <=> y.second; c != 0)
        return c;
    return x.agent <=> y.agent;
}

Hypergraph apply_move(const Hypergraph& state, const LoccMove& m)
{
    std::vector<Hyperedge> edges = state.edges();
    switch (m.kind) {
    case MoveKind::Discard:
        if (!take(edges, m.first))
            illegal(m, "hyperedge not present");
        break;
    case MoveKind::MeasureOut: {
        if (m.first.size() < 3)
            illegal(m, "measuring out needs a CAT of size at least 3");
        if (!m.first.contains(m.agent))
            illegal(m, "agent not in the hyperedge");
        if (!take(edges, m.first))
            illegal(m, "hyperedge not present");
        std::vector<Agent> rest;
        for (Agent a : m.first.members())
            if (a != m.agent)
                rest.push_back(a);
        edges.emplace_back(std::move(rest));
        break;
    }
    case MoveKind::Swap: {
        if (!m.second || m.first.size() != 2 || m.second->size() != 2)
            illegal(m, "swapping needs two EPR pairs");
        const auto shared = shared_agents(m.first, *m.second);
        if (shared.size() != 1)
            illegal(m, "EPR pairs must share exactly one agent");
        if (!take(edges, m.first) || !take(edges, *m.second))
            illegal(m, "EPR pair not present");
        const Agent a = m.first.front() == shared[0] ? m.first.back() : m.first.front();
        const Agent c = m.second->front() == shared[0] ? m.second->back() : m.second->front();
        edges.push_back(Hyperedge{a, c});
        break;
    }
    case MoveKind::CatExpand: {
        if (!m.second || m.second->size() != 2)
            illegal(m, "expansion needs an EPR pair");
        const auto shared = shared_agents(m.first, *m.second);
        if (shared.size() != 1)
            illegal(m, "EPR pair must have exactly one end inside the CAT");
        if (!take(edges, m.first) || !take(edges, *m.second))
            illegal(m, "hyperedge not present");
        std::vector<Agent> grown(m.first.members().begin(), m.first.members().end());
        grown.push_back(m.second->front() == shared[0] ? m.second->back() : m.second->front());
        edges.emplace_back(std::move(grown));
        break;
    }
    }
    return Hypergraph(state.agent_count(), std::move(edges));
}

Hypergraph replay_moves(const Hypergraph& start, const std::vector<LoccMove>& moves)
{
    Hypergraph state = start;
    for (const auto& m : moves)
        state = apply_move(state, m);
    return state;
}

bool trace_replays(const ProtocolTrace& trace)
{
    try {
        Hypergraph state = trace.start;
        for (const auto& m : trace.moves) {
            Hypergraph next = apply_move(state, m);
            if (next.size_potential() >= state.size_potential())
                return false;
            state = std::move(next);
        }
        return state == trace.end;
    }
    catch (const Error&) {
        return false;
    }
}

ProtocolTrace concatenate(const ProtocolTrace& first, const ProtocolTrace& second)
{
    if (!(first.end == second.start))
        throw Error(ErrorCode::IllegalMove, "traces do not join");
    ProtocolTrace out{first.start, first.moves, second.end};
    out.moves.insert(out.moves.end(), second.moves.begin(), second.moves.end());
    return out;
}

ProtocolTrace tree_to_cat(const Hypergraph& tree)
{
    require_tree(tree);
    const std::size_t n = tree.agent_count();
    if (n < 2)
        throw Error(ErrorCode::NotSpanningTree, "a CAT needs at least two agents");
    if (n == 2)
        return {tree, {}, tree};

    const auto adj = adjacency(tree);
    // Depth-first preorder from agent 1, children ascending.
    std::vector<std::pair<Agent, Agent>> order; // (parent, child)
    std::vector<bool> seen(n + 1, false);
    std::vector<std::pair<Agent, std::size_t>> stack{{1, 0}};
    seen[1] = true;
    while (!stack.empty()) {
        auto& [x, next] = stack.back();
        if (next == adj[x].size()) {
            stack.pop_back();
            continue;
        }
        const Agent y = adj[x][next++];
        if (seen[y])
            continue;
        seen[y] = true;
        order.emplace_back(x, y);
        stack.emplace_back(y, 0);
    }

    Hyperedge cat{order[0].first, order[0].second};
    std::vector<LoccMove> moves;
    Hypergraph state = tree;
    for (std::size_t i = 1; i < order.size(); ++i) {
        auto move = LoccMove::cat_expand(cat, Hyperedge{order[i].first, order[i].second});
        state = apply_move(state, move);
        std::vector<Agent> grown(cat.members().begin(), cat.members().end());
        grown.push_back(order[i].second);
        cat = Hyperedge(std::move(grown));
        moves.push_back(std::move(move));
    }
    return {tree, std::move(moves), state};
}

ProtocolTrace cat_to_epr(std::size_t n, Agent a, Agent b)
{
    if (n < 2 || a == b || a < 1 || b < 1 || a > n || b > n)
        throw Error(ErrorCode::BadAgents, "need two distinct agents among 1.." + std::to_string(n));
    const Hypergraph start = Hypergraph::cat(n);
    Hypergraph state = start;
    std::vector<LoccMove> moves;
    for (Agent v = 1; v <= n; ++v) {
        if (v == a || v == b)
            continue;
        auto move = LoccMove::measure_out(state.edges().front(), v);
        state = apply_move(state, move);
        moves.push_back(std::move(move));
    }
    return {start, std::move(moves), state};
}

ProtocolTrace cat_copies_to_tree(const Hypergraph& tree)
{
    require_tree(tree);
    const std::size_t n = tree.agent_count();
    if (n < 2)
        throw Error(ErrorCode::NotSpanningTree, "a CAT needs at least two agents");
    const Hypergraph start = Hypergraph::cat(n).copies(n - 1);
    Hypergraph state = start;
    std::vector<LoccMove> moves;
    for (const auto& e : tree.edges()) {
        std::vector<Agent> current;
        for (Agent v = 1; v <= n; ++v)
            current.push_back(v);
        for (Agent v = 1; v <= n; ++v) {
            if (e.contains(v))
                continue;
            auto move = LoccMove::measure_out(Hyperedge(current), v);
            state = apply_move(state, move);
            current.erase(std::find(current.begin(), current.end(), v));
            moves.push_back(std::move(move));
        }
    }
    return {start, std::move(moves), state};
}

ProtocolTrace trees_copies_to_tree(const Hypergraph& t1, const Hypergraph& t2)
{
    require_tree(t1);
    require_tree(t2);
    if (t1.agent_count() != t2.agent_count())
        throw Error(ErrorCode::MismatchedAgents, "trees on different agent sets");

    std::vector<Hyperedge> missing; // t2 \ t1
    for (const auto& e : t2.edges())
        if (!t1.has_edge(e))
            missing.push_back(e);

    const Hypergraph start = t1.copies(missing.size() + 1);
    Hypergraph state = start;
    std::vector<LoccMove> moves;
    auto play = [&](LoccMove m) {
        state = apply_move(state, m);
        moves.push_back(std::move(m));
    };

    // Copy 0 keeps exactly the common edges.
    for (const auto& e : t1.edges())
        if (!t2.has_edge(e))
            play(LoccMove::discard(e));

    for (const auto& target : missing) {
        const auto path = tree_path(t1, target.front(), target.back());
        std::vector<bool> on_path_edge(t1.edge_count(), false);
        Hyperedge built{path[0], path[1]};
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            Hyperedge next{path[i], path[i + 1]};
            play(LoccMove::swap(built, next));
            built = Hyperedge{path[0], path[i + 1]};
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            for (std::size_t k = 0; k < t1.edge_count(); ++k)
                if (t1.edges()[k] == Hyperedge{path[i], path[i + 1]})
                    on_path_edge[k] = true;
        for (std::size_t k = 0; k < t1.edge_count(); ++k)
            if (!on_path_edge[k])
                play(LoccMove::discard(t1.edges()[k]));
    }
    if (!(state == t2))
        throw Error(ErrorCode::InternalInconsistency, "copy protocol did not end at the target tree");
    return {start, std::move(moves), state};
}

std::vector<LoccMove> legal_moves(const Hypergraph& state)
{
    std::vector<LoccMove> out;
    for (const auto& m : mask_moves(state_of(state)))
        out.push_back(to_move(m));
    return out;
}

std::optional<ProtocolTrace> reachability_search(const Hypergraph& source, const Hypergraph& target,
    std::size_t budget)
{
    if (source.agent_count() != target.agent_count())
        throw Error(ErrorCode::MismatchedAgents, "source and target agent sets differ");
    if (source.agent_count() > 64)
        throw Error(ErrorCode::BoundExceeded, "search supports at most 64 agents");

    const State start = state_of(source), goal = state_of(target);
    if (start == goal)
        return ProtocolTrace{source, {}, target};
    const std::size_t goal_potential = potential(goal);

    struct Node {
        std::size_t parent;
        MaskMove move;
    };
    std::vector<Node> nodes{{0, {}}};
    std::unordered_map<State, std::size_t, StateHash> index{{start, 0}};
    std::deque<std::pair<State, std::size_t>> queue;
    if (potential(start) > goal_potential)
        queue.emplace_back(start, 0);

    while (!queue.empty()) {
        auto [state, id] = std::move(queue.front());
        queue.pop_front();
        for (const auto& m : mask_moves(state)) {
            State next = apply_mask_move(state, m);
            const auto p = potential(next);
            if (p < goal_potential || index.contains(next))
                continue;
            const bool reached = next == goal;
            if (!reached && p == goal_potential)
                continue;
            if (index.size() >= budget)
                throw Error(ErrorCode::BudgetExceeded,
                    "reachability search exceeded " + std::to_string(budget) + " states");
            const std::size_t next_id = nodes.size();
            nodes.push_back({id, m});
            index.emplace(next, next_id);
            if (reached) {
                std::vector<LoccMove> moves;
                for (std::size_t at = next_id; at != 0; at = nodes[at].parent)
                    moves.push_back(to_move(nodes[at].move));
                std::reverse(moves.begin(), moves.end());
                return ProtocolTrace{source, std::move(moves), target};
            }
            queue.emplace_back(std::move(next), next_id);
        }
    }
    return std::nullopt;
}

} // namespace locc
