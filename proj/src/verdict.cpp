#include "locc/verdict.hpp"

#include "locc/error.hpp"

namespace locc {

std::string_view direction_name(Direction d)
{
    switch (d) {
    case Direction::Possible: return "Possible";
    case Direction::Impossible: return "Impossible";
    case Direction::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::string_view classification_name(Classification c)
{
    switch (c) {
    case Classification::Equivalent: return "Equivalent";
    case Classification::StrictlyAbove: return "StrictlyAbove";
    case Classification::StrictlyBelow: return "StrictlyBelow";
    case Classification::Incomparable: return "Incomparable";
    case Classification::Unknown: return "Unknown";
    }
    return "Unknown";
}

DirectionVerdict DirectionVerdict::possible(ProtocolTrace trace)
{
    DirectionVerdict v;
    v.status_ = Direction::Possible;
    v.trace_ = std::move(trace);
    return v;
}

DirectionVerdict DirectionVerdict::impossible(BlockingWitness witness)
{
    DirectionVerdict v;
    v.status_ = Direction::Impossible;
    v.witness_ = std::move(witness);
    return v;
}

DirectionVerdict DirectionVerdict::unknown(std::string reason)
{
    DirectionVerdict v;
    v.reason_ = std::move(reason);
    return v;
}

Classification classify(Direction forward, Direction backward)
{
    using enum Direction;
    if (forward == Possible && backward == Possible)
        return Classification::Equivalent;
    if (forward == Possible && backward == Impossible)
        return Classification::StrictlyAbove;
    if (forward == Impossible && backward == Possible)
        return Classification::StrictlyBelow;
    if (forward == Impossible && backward == Impossible)
        return Classification::Incomparable;
    return Classification::Unknown;
}

DirectionVerdict decide_direction(const Hypergraph& source, const Hypergraph& target, const CompareOptions& options)
{
    std::optional<BlockingWitness> witness;
    std::string scan_note;
    try {
        witness = find_blocking_witness(source, target, options.color_bound);
    }
    catch (const Error& e) {
        if (e.code() != ErrorCode::SearchBoundExceeded)
            throw;
        scan_note = e.what();
    }

    if (witness && !witness_holds(*witness, source, target))
        throw Error(ErrorCode::InternalInconsistency, "coloring scan returned a witness that does not recompute");
    if (witness && !options.cross_check)
        return DirectionVerdict::impossible(std::move(*witness));

    std::optional<ProtocolTrace> trace;
    std::string search_note;
    try {
        trace = reachability_search(source, target, options.search_budget);
    }
    catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded)
            throw;
        search_note = e.what();
    }

    if (trace && witness)
        throw Error(ErrorCode::InternalInconsistency,
            "direction has both a blocking coloring " + witness->coloring.bits() + " and a protocol trace");
    if (witness)
        return DirectionVerdict::impossible(std::move(*witness));
    if (trace) {
        if (!trace_replays(*trace))
            throw Error(ErrorCode::InternalInconsistency, "move search returned a trace that does not replay");
        return DirectionVerdict::possible(std::move(*trace));
    }
    std::string reason = search_note.empty() ? "no coloring blocks and the move search is exhausted" : search_note;
    if (!scan_note.empty())
        reason = scan_note + "; " + reason;
    return DirectionVerdict::unknown(std::move(reason));
}

ComparabilityVerdict compare(const Hypergraph& first, const Hypergraph& second, const CompareOptions& options)
{
    if (first.agent_count() != second.agent_count())
        throw Error(ErrorCode::MismatchedAgents,
            "agent sets differ: " + std::to_string(first.agent_count()) + " vs "
                + std::to_string(second.agent_count()));
    auto forward = decide_direction(first, second, options);
    auto backward = decide_direction(second, first, options);
    const auto c = classify(forward.status(), backward.status());
    return {std::move(forward), std::move(backward), c};
}

} // namespace locc
