#pragma once

#include "locc/distance.hpp"
#include "locc/merging.hpp"
#include "locc/protocols.hpp"
#include "locc/topology.hpp"
#include "locc/verdict.hpp"
#include "locc/witnesses.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace locc {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view tool_version = "0.1.0";

/// {"agents": n, "hyperedges": [[1,2], ...]}
Json to_json(const Hypergraph& h);
Json to_json(const Hyperedge& e);
Json to_json(const LoccMove& m);
Json to_json(const ProtocolTrace& t);
Json to_json(const BlockingWitness& w);
Json to_json(const DirectionVerdict& v);
Json to_json(const TreeSplit& s);
Json to_json(const SeparatingPair& p);
Json to_json(const HypertreeWitness& w);
Json to_json(const DistanceReport& d);
Json to_json(const OrderLink& link);

/// The readers throw BadReport on any structural problem.
Hypergraph hypergraph_from_json(const Json& j);
Hyperedge hyperedge_from_json(const Json& j);
LoccMove move_from_json(const Json& j);
ProtocolTrace trace_from_json(const Json& j);
BlockingWitness witness_from_json(const Json& j);

struct InputRecord {
    std::string path;
    std::string sha256;
};

Json check_report(const ComparabilityVerdict& v, const Hypergraph& first, const Hypergraph& second,
    const std::vector<InputRecord>& inputs);

/// Re-verifies a check report against the two input states: stored states
/// match, every witness recomputes, every trace replays from the right
/// start to the right end, and the classification follows from the
/// directions. Returns the problems found; empty means verified.
std::vector<std::string> verify_report(const Json& report, const Hypergraph& first, const Hypergraph& second);

} // namespace locc
