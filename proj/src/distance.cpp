#include "locc/distance.hpp"

#include "locc/enumeration.hpp"
#include "locc/error.hpp"

#include <algorithm>

namespace locc {

namespace {

void require_trees(const Hypergraph& t1, const Hypergraph& t2)
{
    if (t1.agent_count() != t2.agent_count())
        throw Error(ErrorCode::MismatchedAgents,
            "agent sets differ: " + std::to_string(t1.agent_count()) + " vs " + std::to_string(t2.agent_count()));
    if (!is_spanning_epr_tree(t1) || !is_spanning_epr_tree(t2))
        throw Error(ErrorCode::NotSpanningTree, "both inputs must be spanning EPR trees");
}

} // namespace

std::size_t quantum_distance(const Hypergraph& t1, const Hypergraph& t2)
{
    require_trees(t1, t2);
    return static_cast<std::size_t>(std::count_if(t1.edges().begin(), t1.edges().end(),
        [&](const Hyperedge& e) { return !t2.has_edge(e); }));
}

DistanceReport distance_report(const Hypergraph& t1, const Hypergraph& t2, std::size_t color_bound)
{
    const auto qd = quantum_distance(t1, t2);
    DistanceReport r{qd, 1, qd + 1, qd, trees_copies_to_tree(t1, t2)};
    if (r.qd == 0)
        r.copies_lower = 1;
    else {
        const auto bound = min_copies_lower_bound(t1, t2, color_bound);
        if (bound.infinite)
            throw Error(ErrorCode::InternalInconsistency, "a connected tree cannot have an empty cut");
        r.copies_lower = std::max<std::size_t>(2, bound.copies);
    }
    if (r.copies_lower > r.copies_upper)
        throw Error(ErrorCode::InternalInconsistency,
            "copy lower bound " + std::to_string(r.copies_lower) + " exceeds upper bound "
                + std::to_string(r.copies_upper));
    return r;
}

SaturatingPairs find_saturating_pairs(std::size_t n)
{
    if (n < 3 || n > 6)
        throw Error(ErrorCode::BoundExceeded, "saturation scan supports 3..6 agents");
    const auto trees = all_spanning_trees(n);
    SaturatingPairs found;
    for (const auto& a : trees)
        for (const auto& b : trees) {
            if (found.lower_two && found.tight_at_distance)
                return found;
            if (a == b)
                continue;
            const auto qd = quantum_distance(a, b);
            if (!found.lower_two && qd == 1) {
                found.lower_two = {a, b};
                continue;
            }
            if (!found.tight_at_distance && qd >= 2) {
                const auto bound = min_copies_lower_bound(a, b);
                if (std::max<std::size_t>(2, bound.copies) == qd + 1)
                    found.tight_at_distance = {a, b};
            }
        }
    return found;
}

} // namespace locc
