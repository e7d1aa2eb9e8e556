#include "locc/witnesses.hpp"

#include "locc/error.hpp"

#include <algorithm>
#include <queue>

namespace locc {

namespace {

void check(bool condition, const std::string& what)
{
    if (!condition)
        throw Error(ErrorCode::InternalInconsistency, what);
}

void require_same_agents(const Hypergraph& a, const Hypergraph& b)
{
    if (a.agent_count() != b.agent_count())
        throw Error(ErrorCode::MismatchedAgents,
            "agent sets differ: " + std::to_string(a.agent_count()) + " vs " + std::to_string(b.agent_count()));
}

bool contains(const std::vector<Agent>& sorted, Agent a)
{
    return std::binary_search(sorted.begin(), sorted.end(), a);
}

std::size_t index_of(const Hypergraph& h, const Hyperedge& e)
{
    const auto it = std::lower_bound(h.edges().begin(), h.edges().end(), e);
    check(it != h.edges().end() && *it == e, "hyperedge " + e.to_string() + " not present");
    return static_cast<std::size_t>(it - h.edges().begin());
}

std::vector<Agent> complement(std::size_t n, const std::vector<Agent>& sorted)
{
    std::vector<Agent> out;
    for (Agent a = 1; a <= n; ++a)
        if (!contains(sorted, a))
            out.push_back(a);
    return out;
}

std::vector<Agent> united(std::vector<Agent> a, const std::vector<Agent>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

BlockingWitness labeled(BlockingWitness w, std::string source, std::string target)
{
    w.source_label = std::move(source);
    w.target_label = std::move(target);
    return w;
}

void require_two_uniform(const Hypergraph& g)
{
    for (const auto& e : g.edges())
        if (e.size() != 2)
            throw Error(ErrorCode::MalformedHypergraph, "expected EPR pairs only, found " + e.to_string());
}

// The n-CAT against an EPR graph with at least two pairs: color the shared
// agent of the first two pairs, or the larger end of each when disjoint.
BlockingWitness cat_vs_two_pairs(const Hypergraph& g)
{
    const auto& e1 = g.edges()[0];
    const auto& e2 = g.edges()[1];
    std::vector<Agent> a_side;
    for (Agent x : e1.members())
        if (e2.contains(x)) {
            a_side.push_back(x);
            break;
        }
    if (a_side.empty())
        a_side = {e1.back(), e2.back()};
    std::sort(a_side.begin(), a_side.end());
    return make_witness(Bicoloring::from_a_side(g.agent_count(), a_side), Hypergraph::cat(g.agent_count()), g);
}

// A side = the component of agent 1; blocks source -> target whenever the
// source is disconnected and the target joins that component to the rest.
BlockingWitness component_witness(const Hypergraph& source, const Hypergraph& target)
{
    const auto components = connected_components(source);
    return make_witness(Bicoloring::from_a_side(source.agent_count(), components.front()), source, target);
}

std::vector<Agent> tree_vertex_path(const Hypergraph& t, Agent from, Agent to)
{
    std::vector<Agent> path{from};
    for (std::size_t ei : hypertree_path(t, from, to)) {
        const auto& e = t.edges()[ei];
        path.push_back(e.front() == path.back() ? e.back() : e.front());
    }
    return path;
}

std::size_t require_uniform_pair(const Hypergraph& h1, const Hypergraph& h2)
{
    require_same_agents(h1, h2);
    std::optional<std::size_t> r1, r2;
    if (h1.edge_count() > 0 && is_entangled_hypertree(h1))
        r1 = uniformity(h1);
    if (h2.edge_count() > 0 && is_entangled_hypertree(h2))
        r2 = uniformity(h2);
    if (!r1 || !r2 || *r1 != *r2)
        throw Error(ErrorCode::NotRUniformHypertrees, "inputs are not hypertrees of one common edge size");
    if (h1 == h2)
        throw Error(ErrorCode::EqualHypertrees, "hypertrees are identical");
    return *r1;
}

// Layout of the source around the hyperpath u = w0, E1, w1, ..., E(k+1), w(k+1) = v.
struct PathGeometry {
    std::vector<std::size_t> path;
    std::vector<Agent> connector;
    // Every agent's attachment point on the path.
    std::vector<Agent> anchor;
    // For agents on the path: least i (1-based) with the agent in E_i.
    std::vector<std::size_t> position;
};

PathGeometry path_geometry(const Hypergraph& h, Agent u, Agent v)
{
    const std::size_t n = h.agent_count();
    PathGeometry g;
    g.path = hypertree_path(h, u, v);
    g.connector.push_back(u);
    for (std::size_t i = 0; i + 1 < g.path.size(); ++i) {
        const auto& a = h.edges()[g.path[i]];
        const auto& b = h.edges()[g.path[i + 1]];
        Agent shared = 0;
        for (Agent x : a.members())
            if (b.contains(x))
                shared = x;
        g.connector.push_back(shared);
    }
    g.connector.push_back(v);

    g.position.assign(n + 1, 0);
    g.anchor.assign(n + 1, 0);
    std::vector<bool> on_path(h.edge_count(), false);
    std::queue<Agent> queue;
    for (std::size_t i = 0; i < g.path.size(); ++i) {
        on_path[g.path[i]] = true;
        for (Agent x : h.edges()[g.path[i]].members())
            if (g.position[x] == 0) {
                g.position[x] = i + 1;
                g.anchor[x] = x;
                queue.push(x);
            }
    }
    std::vector<std::vector<std::size_t>> incident(n + 1);
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        if (!on_path[i])
            for (Agent x : h.edges()[i].members())
                incident[x].push_back(i);
    while (!queue.empty()) {
        const Agent a = queue.front();
        queue.pop();
        for (std::size_t ei : incident[a])
            for (Agent b : h.edges()[ei].members())
                if (g.anchor[b] == 0) {
                    g.anchor[b] = g.anchor[a];
                    queue.push(b);
                }
    }
    return g;
}

// Agents hanging from w on the far side from t: cut by the last hyperedge
// of the t-w path.
std::vector<Agent> hanging_away(const Hypergraph& h, Agent t, Agent w)
{
    const auto path = hypertree_path(h, t, w);
    check(!path.empty(), "hanging_away with equal endpoints");
    return side_of_edge(h, path.back(), w);
}

// Union of the sides of E_i at every member except the excluded ones.
std::vector<Agent> sides_except(const Hypergraph& h, std::size_t edge_index, Agent skip1, Agent skip2)
{
    std::vector<Agent> out;
    for (Agent y : h.edges()[edge_index].members())
        if (y != skip1 && y != skip2)
            out = united(std::move(out), side_of_edge(h, edge_index, y));
    return out;
}

HypertreeWitness hypertree_direction(const Hypergraph& h1, const Hypergraph& h2, std::size_t r)
{
    const std::size_t n = h1.agent_count();
    HypertreeWitness out;
    const auto pair = find_separating_pair(h1, h2);
    out.pair = pair;
    Agent u = pair.u, v = pair.v;

    const auto& e_big = pair.target_edge;
    const std::size_t e_idx = index_of(h2, e_big);
    const auto tu2 = side_of_edge(h2, e_idx, u);
    const auto tv2 = side_of_edge(h2, e_idx, v);

    auto geo = path_geometry(h1, u, v);
    check(geo.path.size() >= 2, "separated pair must be joined by at least two hyperedges");
    auto in_t = [&](Agent x) { return x != u && x != v && geo.anchor[x] != u && geo.anchor[x] != v; };

    std::vector<Agent> a_side;

    std::optional<Agent> case1_w;
    for (Agent x = 1; x <= n && !case1_w; ++x)
        if (in_t(x) && x != u && contains(tu2, x))
            case1_w = x;
    if (!case1_w)
        for (Agent x = 1; x <= n && !case1_w; ++x)
            if (in_t(x) && x != v && contains(tv2, x))
                case1_w = x;

    if (case1_w) {
        const Agent w = *case1_w;
        if (contains(tv2, w)) {
            // same construction with the roles of u and v exchanged
            out.mirrored = true;
            std::swap(u, v);
            geo = path_geometry(h1, u, v);
        }
        const Agent a = geo.anchor[w];
        const std::size_t i = geo.position[a];
        check(i >= 1 && a != u && a != v, "case 1 vertex must hang from the path interior");
        out.case_label = a == w ? "1.1" : a == geo.connector[i] ? "1.2" : "1.3";
        out.w = w;
        a_side = side_of_edge(h1, geo.path[i - 1], geo.connector[i - 1]);
    }
    else {
        const Agent w1 = geo.connector[1], w2 = geo.connector[2];
        std::vector<Agent> x1, x2;
        for (Agent x : h1.edges()[geo.path[0]].members())
            if (x != u && x != w1)
                x1.push_back(x);
        for (Agent x : h1.edges()[geo.path[1]].members())
            if (x != w1 && x != w2)
                x2.push_back(x);
        const auto pool = united(x1, x2);
        check(pool.size() == x1.size() + x2.size(), "E1 and E2 interiors must be disjoint");
        check(pool.size() == 2 * r - 4, "interior count must be 2r-4");
        check(pool.size() - (r - 2) == r - 2 && r - 2 >= 1, "pigeonhole surplus must be r-2 >= 1");

        std::vector<Agent> rest;
        for (Agent x : e_big.members())
            if (x != u && x != v)
                rest.push_back(x);
        std::vector<Agent> candidates;
        for (Agent x : pool) {
            check(in_t(x), "E1 and E2 interiors lie in T");
            if (!contains(rest, x))
                candidates.push_back(x);
        }
        check(!candidates.empty(), "pigeonhole must leave a vertex outside E");
        const Agent t = candidates.front();

        Agent w = 0;
        for (Agent x : rest)
            if (contains(side_of_edge(h2, e_idx, x), t))
                w = x;
        check(w != 0 && w != t, "t must hang from a vertex of E other than u, v");
        out.t = t;
        out.w = w;

        if (contains(x1, t)) {
            if (geo.anchor[w] == u) {
                out.case_label = "2.1.1";
                a_side = side_of_edge(h1, geo.path.front(), u);
            }
            else if (geo.anchor[w] == v) {
                out.case_label = "2.1.2";
                a_side = complement(n, side_of_edge(h1, geo.path.back(), v));
            }
            else if (geo.anchor[w] == t) {
                out.case_label = "2.1.3.1";
                a_side = hanging_away(h1, t, w);
            }
            else {
                out.case_label = "2.1.3.2";
                const Agent root = geo.anchor[w];
                const std::size_t i = geo.position[root];
                a_side = sides_except(h1, geo.path[i - 1], root, geo.connector[i]);
            }
        }
        else {
            const auto s1 = side_of_edge(h1, geo.path[1], w1);
            const auto s2 = side_of_edge(h1, geo.path[1], w2);
            if (contains(s1, w)) {
                out.case_label = "2.2.1";
                a_side = s1;
            }
            else if (contains(s2, w)) {
                out.case_label = "2.2.2";
                a_side = complement(n, s2);
            }
            else {
                const Agent root = geo.anchor[w];
                check(geo.position[root] == 2, "case 2.2.3 vertex must hang from E2");
                if (root == t) {
                    out.case_label = "2.2.3.1";
                    a_side = hanging_away(h1, t, w);
                }
                else {
                    out.case_label = "2.2.3.2";
                    a_side = sides_except(h1, geo.path[1], root, w2);
                }
            }
        }
    }

    for (std::size_t ei : geo.path)
        out.source_path.push_back(h1.edges()[ei]);
    out.witness = make_witness(Bicoloring::from_a_side(n, a_side), h1, h2);
    check(out.witness.source_cut == 1, "case " + out.case_label + " coloring must cut one source hyperedge");
    return out;
}

} // namespace

BlockingWitness witness_disconnected_vs_cat(const Hypergraph& g)
{
    require_two_uniform(g);
    if (is_connected(g))
        throw Error(ErrorCode::InputConnected, "graph is connected");
    const auto w = component_witness(g, Hypergraph::cat(g.agent_count()));
    check(w.source_cut == 0 && w.target_cut == 1, "component coloring must give cuts (0,1)");
    return labeled(w, "graph", "cat");
}

BlockingWitness witness_ghz_not_two_epr(const Hypergraph& target)
{
    const auto& edges = target.edges();
    if (target.agent_count() != 3 || edges.size() != 2 || edges[0].size() != 2 || edges[1].size() != 2
        || edges[0] == edges[1])
        throw Error(ErrorCode::ConditionNotMet, "target must be two distinct EPR pairs on three agents");
    Agent c = 0;
    for (Agent x : edges[0].members())
        if (edges[1].contains(x))
            c = x;
    const auto w = make_witness(Bicoloring::from_a_side(3, {c}), Hypergraph::cat(3), target);
    check(w.source_cut == 1 && w.target_cut == 2, "GHZ coloring must give cuts (1,2)");
    return labeled(w, "ghz", "two_epr");
}

std::array<OrderLink, 3> check_order_chain(std::size_t n)
{
    if (n < 3)
        throw Error(ErrorCode::IncompatibleParameters, "the order chain needs at least 3 agents");
    const auto epr = Hypergraph::epr_graph(n, {{1, 2}});
    const auto cat = Hypergraph::cat(n);
    std::vector<std::pair<Agent, Agent>> chain;
    for (Agent a = 1; a < n; ++a)
        chain.emplace_back(a, a + 1);
    const auto tree = Hypergraph::epr_graph(n, chain);

    std::array<OrderLink, 3> links{
        OrderLink{"epr_pair", "cat", epr, cat, cat_to_epr(n, 1, 2),
            labeled(component_witness(epr, cat), "epr_pair", "cat")},
        OrderLink{"cat", "path_tree", cat, tree, tree_to_cat(tree), labeled(cat_vs_two_pairs(tree), "cat", "path_tree")},
        OrderLink{"epr_pair", "path_tree", epr, tree, concatenate(tree_to_cat(tree), cat_to_epr(n, 1, 2)),
            labeled(component_witness(epr, tree), "epr_pair", "path_tree")},
    };
    for (auto& link : links)
        link.holds = link.downward.start == link.upper && link.downward.end == link.lower
            && trace_replays(link.downward) && witness_holds(link.upward_blocked, link.lower, link.upper)
            && !find_blocking_witness(link.upper, link.lower) && find_blocking_witness(link.lower, link.upper);
    return links;
}

std::pair<BlockingWitness, BlockingWitness> witness_cat_vs_disconnected(const Hypergraph& g)
{
    require_two_uniform(g);
    if (is_connected(g))
        throw Error(ErrorCode::InputConnected, "graph is connected");
    if (g.edge_count() < 2)
        throw Error(ErrorCode::TooFewEdges, "need at least two EPR pairs");
    auto forward = cat_vs_two_pairs(g);
    check(forward.source_cut == 1 && forward.target_cut >= 2, "two-pair coloring must give cuts (1, >=2)");
    return {labeled(std::move(forward), "cat", "graph"), witness_disconnected_vs_cat(g)};
}

BlockingWitness witness_cat_copies_vs_tree(std::size_t n, const Hypergraph& t)
{
    if (n < 3 || t.agent_count() != n || !is_spanning_epr_tree(t))
        throw Error(ErrorCode::NotSpanningTree, "expected a spanning EPR tree on " + std::to_string(n) + " agents");
    std::vector<std::vector<Agent>> adj(n + 1);
    for (const auto& e : t.edges()) {
        adj[e.front()].push_back(e.back());
        adj[e.back()].push_back(e.front());
    }
    std::vector<int> parity(n + 1, -1);
    std::queue<Agent> queue;
    parity[1] = 0;
    queue.push(1);
    while (!queue.empty()) {
        const Agent a = queue.front();
        queue.pop();
        for (Agent b : adj[a])
            if (parity[b] < 0) {
                parity[b] = 1 - parity[a];
                queue.push(b);
            }
    }
    std::vector<Agent> even, odd;
    for (Agent a = 1; a <= n; ++a)
        (parity[a] == 0 ? even : odd).push_back(a);
    const auto& a_side = even.size() < odd.size() ? even : odd;
    const auto w = make_witness(Bicoloring::from_a_side(n, a_side), Hypergraph::cat(n).copies(n - 2), t);
    check(w.source_cut == n - 2 && w.target_cut == n - 1, "proper coloring must give cuts (n-2, n-1)");
    return labeled(w, "cat_copies", "tree");
}

TreeSplitWitness witness_distinct_spanning_trees(const Hypergraph& t1, const Hypergraph& t2)
{
    require_same_agents(t1, t2);
    if (!is_spanning_epr_tree(t1) || !is_spanning_epr_tree(t2))
        throw Error(ErrorCode::NotSpanningTree, "both inputs must be spanning EPR trees");
    if (t1 == t2)
        throw Error(ErrorCode::EqualTrees, "trees are identical");
    const std::size_t n = t1.agent_count();

    std::size_t pivot = 0;
    while (t1.has_edge(t2.edges()[pivot]))
        ++pivot;
    TreeSplit split;
    split.i = t2.edges()[pivot].front();
    split.j = t2.edges()[pivot].back();
    split.source_path = tree_vertex_path(t1, split.i, split.j);
    check(split.source_path.size() >= 3, "pivot endpoints must be joined through at least one vertex");

    auto ti2 = side_of_edge(t2, pivot, split.i);
    auto tj2 = side_of_edge(t2, pivot, split.j);
    std::erase(ti2, split.i);
    std::erase(tj2, split.j);
    std::vector<Agent> both;
    std::set_intersection(ti2.begin(), ti2.end(), tj2.begin(), tj2.end(), std::back_inserter(both));
    check(both.empty(), "the two target branches must be disjoint");
    check(!ti2.empty() || !tj2.empty(), "the target branches cannot both be empty");
    const Agent k1 = split.source_path[1];
    check(contains(ti2, k1) || contains(tj2, k1), "k1 must lie in a target branch");
    if (contains(tj2, k1)) {
        std::swap(split.i, split.j);
        std::reverse(split.source_path.begin(), split.source_path.end());
        split.reoriented = true;
    }

    const std::size_t cut_edge = index_of(t1, Hyperedge{split.source_path[0], split.source_path[1]});
    split.colored_a = side_of_edge(t1, cut_edge, split.i);
    auto w = make_witness(Bicoloring::from_a_side(n, split.colored_a), t1, t2);
    check(w.source_cut == 1 && w.target_cut >= 2, "tree split coloring must give cuts (1, >=2)");
    return {std::move(split), labeled(std::move(w), "tree1", "tree2")};
}

std::pair<BlockingWitness, BlockingWitness> witness_pendant_condition(const Hypergraph& h1, const Hypergraph& h2)
{
    require_same_agents(h1, h2);
    const auto c1 = h1.incidence_counts();
    const auto c2 = h2.incidence_counts();
    auto pick = [&](const std::vector<std::size_t>& pendant_in, const std::vector<std::size_t>& other) {
        for (Agent a = 1; a <= h1.agent_count(); ++a)
            if (pendant_in[a] == 1 && other[a] >= 2)
                return a;
        return Agent{0};
    };
    const Agent forward = pick(c1, c2);
    const Agent backward = pick(c2, c1);
    if (forward == 0 || backward == 0)
        throw Error(ErrorCode::ConditionNotMet,
            "need an agent pendant in each hypergraph that lies in two or more hyperedges of the other");
    const std::size_t n = h1.agent_count();
    auto f = make_witness(Bicoloring::from_a_side(n, {forward}), h1, h2);
    auto b = make_witness(Bicoloring::from_a_side(n, {backward}), h2, h1);
    check(f.source_cut == 1 && b.source_cut == 1, "pendant coloring must cut one source hyperedge");
    return {labeled(std::move(f), "h1", "h2"), labeled(std::move(b), "h2", "h1")};
}

SeparatingPair find_separating_pair(const Hypergraph& h1, const Hypergraph& h2)
{
    const std::size_t r = require_uniform_pair(h1, h2);
    if (r < 3)
        throw Error(ErrorCode::RTooSmall, "edge size 2 is the spanning-tree case");

    const auto& edges2 = h2.edges();
    const auto e2 = *std::find_if(edges2.begin(), edges2.end(), [&](const Hyperedge& e) { return !h1.has_edge(e); });
    const Agent anchor = e2.front();
    const auto e1 = *std::find_if(h1.edges().begin(), h1.edges().end(),
        [&](const Hyperedge& e) { return e.contains(anchor); });

    std::vector<Agent> shared, fresh;
    for (Agent x : e2.members())
        (e1.contains(x) ? shared : fresh).push_back(x);
    check(!shared.empty() && shared.size() <= r - 1, "overlap of E1 and E2 must be 1..r-1");

    SeparatingPair pair{0, 0, "", e1, e2};
    const Agent u1 = shared.front();
    const bool wide = shared.size() > 1;
    const auto free = std::find_if(fresh.begin(), fresh.end(), [&](Agent x) { return !co_occur(h1, u1, x); });
    if (free != fresh.end()) {
        pair.case_label = wide ? "1.1" : "2.1";
        pair.u = u1;
        pair.v = *free;
    }
    else if (wide) {
        pair.case_label = "1.2";
        pair.u = shared[1];
        pair.v = fresh.front();
    }
    else {
        pair.case_label = "2.2";
        const auto with_first = *std::find_if(h1.edges().begin(), h1.edges().end(),
            [&](const Hyperedge& e) { return e.contains(u1) && e.contains(fresh.front()); });
        const auto other = std::find_if(fresh.begin(), fresh.end(), [&](Agent x) { return !with_first.contains(x); });
        check(other != fresh.end(), "fresh vertices must spread over two source hyperedges");
        pair.u = fresh.front();
        pair.v = *other;
    }
    check(co_occur(h2, pair.u, pair.v) && !co_occur(h1, pair.u, pair.v),
        "case " + pair.case_label + " pair is not separating");
    return pair;
}

HypertreeIncomparability witness_r_uniform_hypertrees(const Hypergraph& h1, const Hypergraph& h2)
{
    const std::size_t r = require_uniform_pair(h1, h2);
    if (r == 2) {
        auto direction = [](const Hypergraph& a, const Hypergraph& b) {
            auto split = witness_distinct_spanning_trees(a, b);
            HypertreeWitness w;
            w.witness = std::move(split.witness);
            w.case_label = "tree";
            w.tree_split = std::move(split.split);
            return w;
        };
        HypertreeIncomparability out{direction(h1, h2), direction(h2, h1)};
        out.forward.witness = labeled(std::move(out.forward.witness), "h1", "h2");
        out.backward.witness = labeled(std::move(out.backward.witness), "h2", "h1");
        return out;
    }
    HypertreeIncomparability out{hypertree_direction(h1, h2, r), hypertree_direction(h2, h1, r)};
    out.forward.witness = labeled(std::move(out.forward.witness), "h1", "h2");
    out.backward.witness = labeled(std::move(out.backward.witness), "h2", "h1");
    return out;
}

} // namespace locc
