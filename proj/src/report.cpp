#include "locc/report.hpp"

#include "locc/error.hpp"

namespace locc {

namespace {

template <class F>
auto reading(const char* what, F&& f)
{
    try {
        return f();
    }
    catch (const Json::exception& e) {
        throw Error(ErrorCode::BadReport, std::string(what) + ": " + e.what());
    }
    catch (const Error& e) {
        if (e.code() == ErrorCode::BadReport)
            throw;
        throw Error(ErrorCode::BadReport, std::string(what) + ": " + e.what());
    }
}

Json agents_json(const std::vector<Agent>& agents)
{
    return Json(agents);
}

} // namespace

Json to_json(const Hyperedge& e)
{
    return Json(std::vector<Agent>(e.members().begin(), e.members().end()));
}

Json to_json(const Hypergraph& h)
{
    Json edges = Json::array();
    for (const auto& e : h.edges())
        edges.push_back(to_json(e));
    return {{"agents", h.agent_count()}, {"hyperedges", std::move(edges)}};
}

Json to_json(const LoccMove& m)
{
    Json j{{"kind", move_kind_name(m.kind)}, {"first", to_json(m.first)}};
    if (m.second)
        j["second"] = to_json(*m.second);
    if (m.kind == MoveKind::MeasureOut)
        j["agent"] = m.agent;
    return j;
}

Json to_json(const ProtocolTrace& t)
{
    Json moves = Json::array();
    for (const auto& m : t.moves)
        moves.push_back(to_json(m));
    return {{"start", to_json(t.start)}, {"moves", std::move(moves)}, {"end", to_json(t.end)}};
}

Json to_json(const BlockingWitness& w)
{
    return {{"source", w.source_label}, {"target", w.target_label}, {"coloring", w.coloring.bits()},
        {"a_side", agents_json(w.coloring.a_side())}, {"source_cut", w.source_cut}, {"target_cut", w.target_cut}};
}

Json to_json(const DirectionVerdict& v)
{
    Json j{{"status", direction_name(v.status())}};
    if (v.trace())
        j["trace"] = to_json(*v.trace());
    if (v.witness())
        j["witness"] = to_json(*v.witness());
    if (!v.reason().empty())
        j["reason"] = v.reason();
    return j;
}

Json to_json(const TreeSplit& s)
{
    return {{"pivot_edge", {s.i, s.j}}, {"source_path", agents_json(s.source_path)},
        {"colored_a", agents_json(s.colored_a)}, {"reoriented", s.reoriented}};
}

Json to_json(const SeparatingPair& p)
{
    return {{"u", p.u}, {"v", p.v}, {"case", p.case_label}, {"source_edge", to_json(p.source_edge)},
        {"target_edge", to_json(p.target_edge)}};
}

Json to_json(const HypertreeWitness& w)
{
    Json j{{"case", w.case_label}, {"witness", to_json(w.witness)}};
    if (w.pair)
        j["separating_pair"] = to_json(*w.pair);
    if (w.tree_split)
        j["tree_split"] = to_json(*w.tree_split);
    if (!w.source_path.empty()) {
        Json path = Json::array();
        for (const auto& e : w.source_path)
            path.push_back(to_json(e));
        j["source_path"] = std::move(path);
    }
    if (w.w)
        j["w"] = *w.w;
    if (w.t)
        j["t"] = *w.t;
    j["mirrored"] = w.mirrored;
    return j;
}

Json to_json(const DistanceReport& d)
{
    return {{"qd", d.qd}, {"copies_lower", d.copies_lower}, {"copies_upper", d.copies_upper},
        {"qubit_upper", d.qubit_upper}, {"upper_trace", to_json(d.upper_trace)}};
}

Json to_json(const OrderLink& link)
{
    return {{"lower", link.lower_name}, {"upper", link.upper_name}, {"holds", link.holds},
        {"downward_trace", to_json(link.downward)}, {"upward_blocked", to_json(link.upward_blocked)}};
}

Hyperedge hyperedge_from_json(const Json& j)
{
    return reading("hyperedge", [&] { return Hyperedge(j.get<std::vector<Agent>>()); });
}

Hypergraph hypergraph_from_json(const Json& j)
{
    return reading("hypergraph", [&] {
        std::vector<Hyperedge> edges;
        for (const auto& e : j.at("hyperedges"))
            edges.push_back(hyperedge_from_json(e));
        return Hypergraph(j.at("agents").get<std::size_t>(), std::move(edges));
    });
}

LoccMove move_from_json(const Json& j)
{
    return reading("move", [&] {
        const auto kind = move_kind_from_name(j.at("kind").get<std::string>());
        auto first = hyperedge_from_json(j.at("first"));
        switch (kind) {
        case MoveKind::Discard: return LoccMove::discard(std::move(first));
        case MoveKind::MeasureOut: return LoccMove::measure_out(std::move(first), j.at("agent").get<Agent>());
        case MoveKind::Swap: return LoccMove::swap(std::move(first), hyperedge_from_json(j.at("second")));
        case MoveKind::CatExpand: return LoccMove::cat_expand(std::move(first), hyperedge_from_json(j.at("second")));
        }
        throw Error(ErrorCode::BadReport, "unreachable move kind");
    });
}

ProtocolTrace trace_from_json(const Json& j)
{
    return reading("trace", [&] {
        std::vector<LoccMove> moves;
        for (const auto& m : j.at("moves"))
            moves.push_back(move_from_json(m));
        return ProtocolTrace{hypergraph_from_json(j.at("start")), std::move(moves), hypergraph_from_json(j.at("end"))};
    });
}

BlockingWitness witness_from_json(const Json& j)
{
    return reading("witness", [&] {
        BlockingWitness w{Bicoloring::from_bits(j.at("coloring").get<std::string>()),
            j.at("source_cut").get<std::size_t>(), j.at("target_cut").get<std::size_t>()};
        w.source_label = j.value("source", "source");
        w.target_label = j.value("target", "target");
        return w;
    });
}

Json check_report(const ComparabilityVerdict& v, const Hypergraph& first, const Hypergraph& second,
    const std::vector<InputRecord>& inputs)
{
    Json in = Json::array();
    for (const auto& r : inputs)
        in.push_back({{"path", r.path}, {"sha256", r.sha256}});
    return {{"tool", "locc"}, {"version", tool_version}, {"inputs", std::move(in)}, {"first", to_json(first)},
        {"second", to_json(second)}, {"forward", to_json(v.forward)}, {"backward", to_json(v.backward)},
        {"classification", classification_name(v.classification)}};
}

std::vector<std::string> verify_report(const Json& report, const Hypergraph& first, const Hypergraph& second)
{
    std::vector<std::string> problems;
    auto note = [&](std::string s) { problems.push_back(std::move(s)); };
    try {
        if (hypergraph_from_json(report.at("first")) != first)
            note("stored first state differs from the input");
        if (hypergraph_from_json(report.at("second")) != second)
            note("stored second state differs from the input");

        auto direction = [&](const char* key, const Hypergraph& src, const Hypergraph& tgt) {
            const auto& d = report.at(key);
            const auto status = d.at("status").get<std::string>();
            if (d.contains("witness") && d.contains("trace"))
                note(std::string(key) + ": carries both a witness and a trace");
            if (status == "Impossible") {
                if (!d.contains("witness"))
                    note(std::string(key) + ": Impossible without a witness");
                else if (!witness_holds(witness_from_json(d.at("witness")), src, tgt))
                    note(std::string(key) + ": witness does not recompute");
                return Direction::Impossible;
            }
            if (status == "Possible") {
                if (!d.contains("trace")) {
                    note(std::string(key) + ": Possible without a trace");
                    return Direction::Possible;
                }
                const auto t = trace_from_json(d.at("trace"));
                if (t.start != src || t.end != tgt)
                    note(std::string(key) + ": trace endpoints differ from the inputs");
                else if (!trace_replays(t))
                    note(std::string(key) + ": trace does not replay");
                return Direction::Possible;
            }
            if (status != "Unknown")
                note(std::string(key) + ": unknown status '" + status + "'");
            return Direction::Unknown;
        };
        const auto f = direction("forward", first, second);
        const auto b = direction("backward", second, first);
        if (report.at("classification").get<std::string>() != classification_name(classify(f, b)))
            note("classification does not follow from the directions");
    }
    catch (const Json::exception& e) {
        note(std::string("malformed report: ") + e.what());
    }
    catch (const Error& e) {
        note(e.what());
    }
    return problems;
}

} // namespace locc
