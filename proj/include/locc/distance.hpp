#pragma once

#include "locc/merging.hpp"
#include "locc/protocols.hpp"
#include "locc/topology.hpp"

#include <optional>
#include <vector>

namespace locc {

/// Copy and qubit bounds between two spanning EPR trees.
struct DistanceReport {
    std::size_t qd = 0;
    std::size_t copies_lower = 1;
    std::size_t copies_upper = 1;
    std::size_t qubit_upper = 0;
    /// Realizes copies_upper: (qd+1) copies of t1 down to t2.
    ProtocolTrace upper_trace;
};

/// Number of edges of t1 missing from t2.
std::size_t quantum_distance(const Hypergraph& t1, const Hypergraph& t2);

DistanceReport distance_report(const Hypergraph& t1, const Hypergraph& t2,
    std::size_t color_bound = default_color_bound);

/// Distinct tree pairs on n agents where the copy bounds meet.
struct SaturatingPairs {
    /// copies_lower = copies_upper = 2.
    std::optional<std::pair<Hypergraph, Hypergraph>> lower_two;
    /// copies_lower = qd + 1 with qd >= 2.
    std::optional<std::pair<Hypergraph, Hypergraph>> tight_at_distance;
};

/// Scans all ordered tree pairs on n agents (3 <= n <= 6) in enumeration order.
SaturatingPairs find_saturating_pairs(std::size_t n);

} // namespace locc
