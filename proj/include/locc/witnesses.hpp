#pragma once

#include "locc/merging.hpp"
#include "locc/protocols.hpp"
#include "locc/topology.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace locc {

/// Proof object for two distinct spanning trees: pivot edge {i,j} of the
/// target missing from the source, the source path i k1 ... km j, and the
/// A side (i plus the subtree hanging from i away from {i,k1}).
struct TreeSplit {
    Agent i = 0;
    Agent j = 0;
    std::vector<Agent> source_path;
    std::vector<Agent> colored_a;
    /// The pivot was turned around so that k1 hangs from i in the target.
    bool reoriented = false;
};

struct TreeSplitWitness {
    TreeSplit split;
    BlockingWitness witness;
};

/// Agents u, v sharing a hyperedge of h2 but no hyperedge of h1.
struct SeparatingPair {
    Agent u = 0;
    Agent v = 0;
    std::string case_label;
    /// The h1 hyperedge meeting target_edge that the case analysis started from.
    Hyperedge source_edge{1, 2};
    /// The h2 hyperedge missing from h1 that contains u and v.
    Hyperedge target_edge{1, 2};
};

/// One direction of the incomparability of two uniform hypertrees.
struct HypertreeWitness {
    BlockingWitness witness{Bicoloring(1, 0)};
    std::string case_label;
    std::optional<SeparatingPair> pair;
    std::optional<TreeSplit> tree_split;
    /// Source hyperpath E1 ... E(k+1) from u to v.
    std::vector<Hyperedge> source_path;
    std::optional<Agent> w;
    std::optional<Agent> t;
    /// The roles of u and v were exchanged (the w found hangs from v in h2).
    bool mirrored = false;
};

struct HypertreeIncomparability {
    HypertreeWitness forward;
    HypertreeWitness backward;
};

/// One strict step of the chain EPR pair < n-CAT < spanning EPR tree.
struct OrderLink {
    std::string lower_name;
    std::string upper_name;
    Hypergraph lower;
    Hypergraph upper;
    ProtocolTrace downward;
    BlockingWitness upward_blocked;
    /// Trace replays, witness recomputes, and the coloring scan finds no
    /// obstruction downward but one upward.
    bool holds = false;
};

BlockingWitness witness_disconnected_vs_cat(const Hypergraph& g);

/// Source is the GHZ state on {1,2,3}; target is two EPR pairs sharing an agent.
BlockingWitness witness_ghz_not_two_epr(const Hypergraph& target);

/// EPR < CAT, CAT < tree and EPR < tree on n >= 3 agents, tree = path 1-2-...-n.
std::array<OrderLink, 3> check_order_chain(std::size_t n);

/// first: n-CAT cannot reach g; second: g cannot reach n-CAT.
std::pair<BlockingWitness, BlockingWitness> witness_cat_vs_disconnected(const Hypergraph& g);

/// (n-2) copies of the n-CAT cannot reach the spanning tree t.
BlockingWitness witness_cat_copies_vs_tree(std::size_t n, const Hypergraph& t);

/// Witness for t1 cannot reach t2.
TreeSplitWitness witness_distinct_spanning_trees(const Hypergraph& t1, const Hypergraph& t2);

/// first: h1 cannot reach h2 (u pendant in h1 only); second: the reverse.
std::pair<BlockingWitness, BlockingWitness> witness_pendant_condition(const Hypergraph& h1, const Hypergraph& h2);

SeparatingPair find_separating_pair(const Hypergraph& h1, const Hypergraph& h2);

HypertreeIncomparability witness_r_uniform_hypertrees(const Hypergraph& h1, const Hypergraph& h2);

} // namespace locc
