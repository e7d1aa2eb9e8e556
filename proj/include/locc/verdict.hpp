#pragma once

#include "locc/merging.hpp"
#include "locc/protocols.hpp"
#include "locc/topology.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace locc {

enum class Direction : std::uint8_t { Possible, Impossible, Unknown };
enum class Classification : std::uint8_t { Equivalent, StrictlyAbove, StrictlyBelow, Incomparable, Unknown };

std::string_view direction_name(Direction d);
std::string_view classification_name(Classification c);

/// Outcome for one direction: a replayable trace, a blocking coloring, or
/// neither. A verdict never carries both.
class DirectionVerdict {
public:
    static DirectionVerdict possible(ProtocolTrace trace);
    static DirectionVerdict impossible(BlockingWitness witness);
    static DirectionVerdict unknown(std::string reason);

    Direction status() const noexcept { return status_; }
    const std::optional<ProtocolTrace>& trace() const noexcept { return trace_; }
    const std::optional<BlockingWitness>& witness() const noexcept { return witness_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    DirectionVerdict() = default;

    Direction status_ = Direction::Unknown;
    std::optional<ProtocolTrace> trace_;
    std::optional<BlockingWitness> witness_;
    std::string reason_;
};

/// forward: first -> second, backward: second -> first.
/// StrictlyBelow means first <_LOCC second.
struct ComparabilityVerdict {
    DirectionVerdict forward;
    DirectionVerdict backward;
    Classification classification;
};

Classification classify(Direction forward, Direction backward);

struct CompareOptions {
    std::size_t color_bound = default_color_bound;
    std::size_t search_budget = default_search_budget;
    /// After a witness is found, run the move search anyway and fail with
    /// InternalInconsistency if it reaches the target.
    bool cross_check = true;
};

/// Coloring scan first; the move search only runs when no witness exists
/// (or to cross-check one). Every returned trace and witness has been
/// re-verified.
DirectionVerdict decide_direction(const Hypergraph& source, const Hypergraph& target, const CompareOptions& options = {});

ComparabilityVerdict compare(const Hypergraph& first, const Hypergraph& second, const CompareOptions& options = {});

} // namespace locc
