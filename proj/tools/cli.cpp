#include "cli.hpp"

#include "locc/distance.hpp"
#include "locc/enumeration.hpp"
#include "locc/error.hpp"
#include "locc/report.hpp"
#include "locc/sweeps.hpp"
#include "locc/verdict.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace locc::cli {

namespace {

struct Input {
    std::string path;
    std::string bytes;
    Hypergraph state;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Input load(const std::string& path)
{
    auto bytes = read_file(path);
    try {
        auto state = parse_hypergraph(bytes);
        return {path, std::move(bytes), std::move(state)};
    }
    catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

std::vector<InputRecord> records(std::initializer_list<const Input*> inputs)
{
    std::vector<InputRecord> out;
    for (const auto* i : inputs)
        out.push_back({i->path, sha256_hex(i->bytes)});
    return out;
}

Json with_inputs(Json body, const std::vector<InputRecord>& inputs)
{
    Json in = Json::array();
    for (const auto& r : inputs)
        in.push_back({{"path", r.path}, {"sha256", r.sha256}});
    Json j{{"tool", "locc"}, {"version", tool_version}, {"inputs", std::move(in)}};
    for (auto& [k, v] : body.items())
        j[k] = v;
    return j;
}

std::string describe(const Hypergraph& h)
{
    return std::to_string(h.agent_count()) + " agents, " + std::to_string(h.edge_count())
        + (h.edge_count() == 1 ? " hyperedge" : " hyperedges");
}

std::string agent_set(const std::vector<Agent>& agents)
{
    std::string s = "{";
    for (std::size_t i = 0; i < agents.size(); ++i)
        s += (i ? "," : "") + std::to_string(agents[i]);
    return s + "}";
}

void print_witness(std::ostream& out, const BlockingWitness& w)
{
    out << "  coloring A = " << agent_set(w.coloring.a_side()) << ", cuts " << w.source_cut << " -> "
        << w.target_cut << "\n";
}

void print_trace(std::ostream& out, const ProtocolTrace& t)
{
    for (const auto& m : t.moves)
        out << "  " << m.to_string() << "\n";
}

void print_direction(std::ostream& out, const char* label, const DirectionVerdict& v)
{
    out << label << ": " << direction_name(v.status());
    if (v.trace())
        out << " (" << v.trace()->moves.size() << (v.trace()->moves.size() == 1 ? " move)" : " moves)");
    out << "\n";
    if (v.witness())
        print_witness(out, *v.witness());
    if (v.trace())
        print_trace(out, *v.trace());
    if (!v.reason().empty())
        out << "  " << v.reason() << "\n";
}

struct Globals {
    bool json = false;
    std::uint64_t seed = 1;
    std::size_t color_bound = default_color_bound;
    std::size_t search_budget = default_search_budget;
};

int cmd_check(const Globals& g, const std::string& a, const std::string& b, bool cross_check, std::ostream& out)
{
    const auto first = load(a), second = load(b);
    const auto v = compare(first.state, second.state, {g.color_bound, g.search_budget, cross_check});
    if (g.json)
        out << check_report(v, first.state, second.state, records({&first, &second})).dump(2) << "\n";
    else {
        out << "first:  " << a << " (" << describe(first.state) << ")\n";
        out << "second: " << b << " (" << describe(second.state) << ")\n";
        print_direction(out, "forward  first -> second", v.forward);
        print_direction(out, "backward second -> first", v.backward);
        out << "classification: " << classification_name(v.classification) << "\n";
    }
    return v.classification == Classification::Unknown ? exit_unknown : exit_definite;
}

int cmd_verify(const Globals& g, const SweepOptions& base, std::ostream& out)
{
    SweepOptions o = base;
    o.seed = g.seed;
    o.color_bound = g.color_bound;
    o.search_budget = g.search_budget;
    const auto results = run_theorem_sweeps(o);
    bool ok = std::all_of(results.begin(), results.end(), [](const SweepResult& r) { return r.failed == 0; });
    if (g.json) {
        Json sweeps = Json::array();
        for (const auto& r : results)
            sweeps.push_back(to_json(r));
        out << Json{{"tool", "locc"}, {"version", tool_version}, {"seed", o.seed}, {"n_max", o.n_max},
                       {"r_list", o.r_list}, {"samples", o.samples}, {"sweeps", std::move(sweeps)}, {"passed", ok}}
                   .dump(2)
            << "\n";
    }
    else {
        for (const auto& r : results) {
            out << (r.failed ? "FAIL " : "PASS ") << r.name << ": " << r.passed << "/" << (r.passed + r.failed)
                << "\n";
            if (r.first_counterexample)
                out << "  first counterexample: " << r.first_counterexample->dump() << "\n";
        }
        out << (ok ? "all sweeps passed" : "some sweeps failed") << "\n";
    }
    return ok ? exit_definite : exit_inconsistency;
}

int cmd_distance(const Globals& g, const std::string& a, const std::string& b, std::ostream& out)
{
    const auto first = load(a), second = load(b);
    const auto d = distance_report(first.state, second.state, g.color_bound);
    if (g.json)
        out << with_inputs(Json{{"distance", to_json(d)}}, records({&first, &second})).dump(2) << "\n";
    else
        out << "quantum distance: " << d.qd << "\n"
            << "copies lower bound: " << d.copies_lower << "\n"
            << "copies upper bound: " << d.copies_upper << " (" << d.upper_trace.moves.size()
            << "-move trace from " << d.qd + 1 << " copies)\n"
            << "qubit upper bound: " << d.qubit_upper << "\n";
    return exit_definite;
}

int cmd_protocol(const Globals& g, const std::string& a, const std::string& b, std::ostream& out)
{
    const auto first = load(a), second = load(b);
    std::optional<ProtocolTrace> trace;
    try {
        trace = reachability_search(first.state, second.state, g.search_budget);
    }
    catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded)
            throw;
        out << e.what() << "\n";
        return exit_unknown;
    }
    if (!trace) {
        out << "no protocol found: the move search is exhausted\n";
        return exit_unknown;
    }
    if (g.json)
        out << with_inputs(Json{{"trace", to_json(*trace)}}, records({&first, &second})).dump(2) << "\n";
    else {
        out << trace->moves.size() << (trace->moves.size() == 1 ? " move\n" : " moves\n");
        print_trace(out, *trace);
    }
    return exit_definite;
}

int cmd_replay(const std::string& path, std::ostream& out)
{
    Json j;
    try {
        j = Json::parse(read_file(path));
    }
    catch (const Json::parse_error& e) {
        throw Error(ErrorCode::BadReport, path + ": " + e.what());
    }
    if (j.contains("trace") && !j.contains("moves"))
        j = j.at("trace");
    const auto trace = trace_from_json(j);
    const auto end = replay_moves(trace.start, trace.moves);
    if (end != trace.end) {
        out << "replay FAILED: end state does not match\n" << format_hypergraph(end);
        return exit_input_error;
    }
    out << "replay OK, end state matches (" << trace.moves.size()
        << (trace.moves.size() == 1 ? " move)\n" : " moves)\n");
    return exit_definite;
}

int cmd_enumerate(const Globals& g, const std::string& kind, std::size_t n, std::size_t r, std::size_t count,
    std::ostream& out)
{
    Rng rng(g.seed);
    std::vector<Hypergraph> items;
    if (kind == "bicolorings") {
        Json all = Json::array();
        for (const auto& c : all_bicolorings(n, g.color_bound)) {
            if (g.json)
                all.push_back(c.bits());
            else
                out << c.bits() << "\n";
        }
        if (g.json)
            out << all.dump(2) << "\n";
        return exit_definite;
    }
    if (kind == "trees")
        items = all_spanning_trees(n);
    else if (kind == "hypertrees")
        for (std::size_t i = 0; i < count; ++i)
            items.push_back(random_r_uniform_hypertree(n, r, rng));
    else if (kind == "disconnected")
        for (std::size_t i = 0; i < count; ++i)
            items.push_back(random_disconnected_epr_graph(n, rng));
    else
        throw Error(ErrorCode::IncompatibleParameters, "unknown kind '" + kind + "'");

    if (g.json) {
        Json all = Json::array();
        for (const auto& h : items)
            all.push_back(to_json(h));
        out << all.dump(2) << "\n";
    }
    else
        for (std::size_t i = 0; i < items.size(); ++i)
            out << (i ? "---\n" : "") << format_hypergraph(items[i]);
    return exit_definite;
}

int cmd_export_dot(const std::string& path, std::ostream& out)
{
    const auto in = load(path);
    out << "graph locc {\n  node [shape=circle];\n";
    for (Agent a = 1; a <= in.state.agent_count(); ++a)
        out << "  " << a << ";\n";
    for (std::size_t i = 0; i < in.state.edge_count(); ++i) {
        const auto& e = in.state.edges()[i];
        if (e.size() == 2) {
            out << "  " << e.front() << " -- " << e.back() << ";\n";
            continue;
        }
        out << "  e" << i << " [shape=box, label=\"" << e.size() << "-CAT\"];\n";
        for (Agent a : e.members())
            out << "  e" << i << " -- " << a << ";\n";
    }
    out << "}\n";
    return exit_definite;
}

} // namespace

std::string sha256_hex(const std::string& bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorCode::InternalInconsistency, "sha256 failed");
    std::ostringstream s;
    for (unsigned int i = 0; i < len; ++i)
        s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"LOCC comparability of EPR graphs and entangled hypergraphs", "locc"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(tool_version));

    Globals g;
    app.add_flag("--json", g.json, "Emit a JSON report");
    app.add_option("--seed", g.seed, "Seed for random instances");
    app.add_option("--color-bound", g.color_bound, "Largest agent count for the exhaustive coloring scan")
        ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    app.add_option("--search-budget", g.search_budget, "Largest number of states the move search may visit")
        ->check(CLI::PositiveNumber);

    std::string a, b, path, kind;
    bool no_cross_check = false;

    auto* check = app.add_subcommand("check", "Classify two states: witnesses and protocol traces per direction");
    check->add_option("first", a, "First state")->required();
    check->add_option("second", b, "Second state")->required();
    check->add_flag("--no-cross-check", no_cross_check, "Skip the move search once a coloring blocks a direction");

    SweepOptions sweep;
    auto* verify = app.add_subcommand("verify-theorems", "Run the theorem sweeps");
    verify->add_option("--n-max", sweep.n_max, "Largest agent count for tree sweeps")->capture_default_str();
    verify->add_option("--r", sweep.r_list, "Hyperedge sizes for the uniform hypertree sweep")->delimiter(',');
    verify->add_option("--samples", sweep.samples, "Random instances per sampled family")->capture_default_str();

    auto* distance = app.add_subcommand("distance", "Quantum distance and copy bounds of two spanning trees");
    distance->add_option("first", a)->required();
    distance->add_option("second", b)->required();

    auto* protocol = app.add_subcommand("protocol", "Search for a move sequence from first to second");
    protocol->add_option("first", a)->required();
    protocol->add_option("second", b)->required();

    auto* replay = app.add_subcommand("replay", "Replay a JSON trace and compare its end state");
    replay->add_option("trace", path)->required();

    std::size_t n = 4, r = 3, count = 1;
    auto* enumerate = app.add_subcommand("enumerate", "Emit instances: trees, hypertrees, disconnected, bicolorings");
    enumerate->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"trees", "hypertrees", "disconnected", "bicolorings"}));
    enumerate->add_option("--n", n, "Agent count")->capture_default_str();
    enumerate->add_option("--r", r, "Hyperedge size for hypertrees")->capture_default_str();
    enumerate->add_option("--count", count, "Number of random instances")->capture_default_str();

    auto* dot = app.add_subcommand("export-dot", "Render a state as a DOT graph");
    dot->add_option("file", path)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_definite : exit_input_error;
    }

    try {
        if (*check)
            return cmd_check(g, a, b, !no_cross_check, out);
        if (*verify)
            return cmd_verify(g, sweep, out);
        if (*distance)
            return cmd_distance(g, a, b, out);
        if (*protocol)
            return cmd_protocol(g, a, b, out);
        if (*replay)
            return cmd_replay(path, out);
        if (*enumerate)
            return cmd_enumerate(g, kind, n, r, count, out);
        if (*dot)
            return cmd_export_dot(path, out);
    }
    catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::InternalInconsistency ? exit_inconsistency : exit_input_error;
    }
    return exit_input_error;
}

} // namespace locc::cli
