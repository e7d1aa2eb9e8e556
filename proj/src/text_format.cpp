#include "locc/error.hpp"
#include "locc/topology.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace locc {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what)
{
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::uint64_t> parse_numbers(std::string_view body, std::size_t line)
{
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t'))
            ++pos;
        if (pos == body.size())
            break;
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), value);
        if (ec != std::errc() || (ptr != body.data() + body.size() && *ptr != ' ' && *ptr != '\t'))
            parse_fail(line, "expected a positive integer near '" + std::string(body.substr(pos)) + "'");
        out.push_back(value);
        pos = static_cast<std::size_t>(ptr - body.data());
    }
    return out;
}

} // namespace

std::string format_hypergraph(const Hypergraph& h)
{
    std::ostringstream out;
    out << "agents: " << h.agent_count() << '\n';
    for (const auto& e : h.edges()) {
        out << "cat:";
        for (Agent a : e.members())
            out << ' ' << a;
        out << '\n';
    }
    return out.str();
}

Hypergraph parse_hypergraph(std::string_view text)
{
    std::optional<std::size_t> agent_count;
    std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> cat_lines;

    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            parse_fail(line_no, "expected 'agents: n' or 'cat: i1 ... ik'");
        const auto key = trim(line.substr(0, colon));
        const auto body = trim(line.substr(colon + 1));
        auto numbers = parse_numbers(body, line_no);

        if (key == "agents") {
            if (agent_count)
                parse_fail(line_no, "duplicate 'agents' header");
            if (numbers.size() != 1 || numbers[0] == 0)
                parse_fail(line_no, "'agents' takes one positive count");
            agent_count = numbers[0];
        }
        else if (key == "cat") {
            if (numbers.size() < 2)
                parse_fail(line_no, "a hyperedge needs at least two agents");
            cat_lines.emplace_back(line_no, std::move(numbers));
        }
        else
            parse_fail(line_no, "unknown key '" + std::string(key) + "'");
    }
    if (!agent_count)
        throw Error(ErrorCode::ParseError, "missing 'agents: n' header");

    std::vector<Hyperedge> edges;
    for (auto& [at, numbers] : cat_lines) {
        std::vector<Agent> members;
        for (auto v : numbers) {
            if (v == 0 || v > *agent_count)
                parse_fail(at, "agent " + std::to_string(v) + " outside 1.." + std::to_string(*agent_count));
            members.push_back(static_cast<Agent>(v));
        }
        try {
            edges.emplace_back(std::move(members));
        }
        catch (const Error& e) {
            parse_fail(at, e.what());
        }
    }
    return Hypergraph(*agent_count, std::move(edges));
}

} // namespace locc
