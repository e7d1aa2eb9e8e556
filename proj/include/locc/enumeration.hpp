#pragma once

#include "locc/error.hpp"
#include "locc/merging.hpp"
#include "locc/topology.hpp"

#include <cstdint>
#include <random>
#include <ranges>
#include <vector>

namespace locc {

using Rng = std::mt19937_64;

/// Prüfer code of a labeled tree on agents 1..n: n-2 symbols from 1..n.
struct PruferSequence {
    std::size_t agent_count = 0;
    std::vector<Agent> symbols;

    friend bool operator==(const PruferSequence&, const PruferSequence&) = default;
};

inline constexpr std::size_t max_enumerated_tree_agents = 7;

Hypergraph prufer_decode(const PruferSequence& p);
PruferSequence prufer_encode(const Hypergraph& tree);

/// Every labeled spanning tree on n agents (n^(n-2) of them), decoded from
/// Prüfer sequences in lexicographic order. 2 <= n <= 7.
std::vector<Hypergraph> all_spanning_trees(std::size_t n);

Hypergraph random_spanning_tree(std::size_t n, Rng& rng);

/// r-uniform hypertree grown by attaching r-1 fresh agents at a uniformly
/// chosen existing agent, then relabeled by a seeded permutation. Requires
/// n = m(r-1)+1 with m >= 1.
Hypergraph random_r_uniform_hypertree(std::size_t n, std::size_t r, std::uint64_t seed);
Hypergraph random_r_uniform_hypertree(std::size_t n, std::size_t r, Rng& rng);

/// Hypertree with hyperedge sizes drawn from 2..max_edge_size.
Hypergraph random_hypertree(std::size_t n, std::size_t max_edge_size, Rng& rng);

/// Disconnected 2-uniform graph with at least two edges, n >= 4. Components
/// carry a random spanning tree plus occasional extra edges.
Hypergraph random_disconnected_epr_graph(std::size_t n, Rng& rng);

/// The 2^(n-1) colorings with agent 1 pinned to B, in binary counting
/// order over agents 2..n; the first is all-B.
inline auto all_bicolorings(std::size_t n, std::size_t bound = default_color_bound)
{
    if (n == 0 || n > bound || n > 64)
        throw Error(ErrorCode::BoundExceeded, std::to_string(n) + " agents outside the coloring bound");
    return std::views::iota(std::uint64_t{0}, std::uint64_t{1} << (n - 1))
        | std::views::transform([n](std::uint64_t i) { return Bicoloring::from_scan_index(n, i); });
}

} // namespace locc
