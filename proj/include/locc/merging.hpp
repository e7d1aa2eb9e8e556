#pragma once

#include "locc/topology.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace locc {

enum class Color : std::uint8_t { A, B };

/// Total assignment of the agents 1..n (n <= 64) to the two merged parties.
class Bicoloring {
public:
    /// Bit i of `a_mask` set means agent i+1 is colored A.
    Bicoloring(std::size_t agent_count, std::uint64_t a_mask);

    static Bicoloring from_a_side(std::size_t agent_count, const std::vector<Agent>& a_side);
    /// Parses the bit-string form produced by bits().
    static Bicoloring from_bits(std::string_view bits);
    /// The index-th coloring of the canonical scan: agent 1 pinned to B,
    /// agents 2..n take the binary digits of index.
    static Bicoloring from_scan_index(std::size_t agent_count, std::uint64_t index);

    std::size_t agent_count() const noexcept { return agent_count_; }
    std::uint64_t a_mask() const noexcept { return a_mask_; }
    Color color(Agent a) const noexcept { return (a_mask_ >> (a - 1)) & 1 ? Color::A : Color::B; }
    bool nontrivial() const noexcept;
    Bicoloring flipped() const;

    std::vector<Agent> a_side() const;
    std::vector<Agent> b_side() const;
    /// One character per agent in canonical order: '1' for A, '0' for B.
    std::string bits() const;

    friend bool operator==(const Bicoloring&, const Bicoloring&) = default;

private:
    std::size_t agent_count_;
    std::uint64_t a_mask_;
};

enum class Collapse : std::uint8_t { Edge, Vertex };

struct CollapsedEdge {
    Hyperedge edge;
    Collapse to;
    /// Party owning the merged vertex; meaningful when to == Vertex.
    Color vertex_color;
};

/// Two-party graph left after merging: each hyperedge becomes an A-B edge
/// when bichromatic, otherwise a local vertex.
struct BcmGraph {
    std::size_t cross_edge_count = 0;
    std::vector<CollapsedEdge> collapsed;
};

/// A coloring under which the target shares strictly more EPR pairs across
/// the A|B cut than the source, so source cannot reach target by LOCC.
struct BlockingWitness {
    Bicoloring coloring;
    std::size_t source_cut = 0;
    std::size_t target_cut = 0;
    std::string source_label = "source";
    std::string target_label = "target";
};

/// Lower bound on copies of the source needed to produce the target.
struct CopyBound {
    bool infinite = false;
    std::size_t copies = 0;

    friend bool operator==(const CopyBound&, const CopyBound&) = default;
};

inline constexpr std::size_t default_color_bound = 22;

/// Number of hyperedges (with multiplicity) holding agents of both colors.
std::size_t bcm_cut(const Hypergraph& h, const Bicoloring& c);
BcmGraph bcm_reduce(const Hypergraph& h, const Bicoloring& c);

/// Stored cuts match a recomputation and the target cut is strictly larger.
bool witness_holds(const BlockingWitness& w, const Hypergraph& source, const Hypergraph& target);
/// Builds a witness from a coloring after recomputing both cuts; throws
/// InternalInconsistency when the coloring does not block.
BlockingWitness make_witness(const Bicoloring& c, const Hypergraph& source, const Hypergraph& target);

/// First coloring in scan order with bcm_cut(target) > bcm_cut(source).
/// nullopt only says that no bipartition obstruction exists. Above
/// `color_bound` agents only single-agent colorings are tried before
/// SearchBoundExceeded is thrown.
std::optional<BlockingWitness> find_blocking_witness(const Hypergraph& source, const Hypergraph& target,
    std::size_t color_bound = default_color_bound);

/// max over nontrivial colorings of ceil(target cut / source cut).
CopyBound min_copies_lower_bound(const Hypergraph& source, const Hypergraph& target,
    std::size_t color_bound = default_color_bound);

} // namespace locc
