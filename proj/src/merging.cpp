#include "locc/merging.hpp"

#include "locc/error.hpp"

#include <algorithm>

namespace locc {

namespace {

std::uint64_t full_mask(std::size_t n)
{
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_same_agents(const Hypergraph& source, const Hypergraph& target)
{
    if (source.agent_count() != target.agent_count())
        throw Error(ErrorCode::MismatchedAgents,
            "agent sets differ: " + std::to_string(source.agent_count()) + " vs "
                + std::to_string(target.agent_count()));
}

std::vector<std::uint64_t> edge_masks(const Hypergraph& h)
{
    std::vector<std::uint64_t> masks;
    masks.reserve(h.edge_count());
    for (const auto& e : h.edges())
        masks.push_back(e.mask());
    return masks;
}

std::size_t cut_of(const std::vector<std::uint64_t>& masks, std::uint64_t a_mask, std::uint64_t b_mask)
{
    std::size_t cut = 0;
    for (auto m : masks)
        cut += (m & a_mask) && (m & b_mask);
    return cut;
}

} // namespace

Bicoloring::Bicoloring(std::size_t agent_count, std::uint64_t a_mask) : agent_count_(agent_count), a_mask_(a_mask)
{
    if (agent_count_ == 0 || agent_count_ > 64)
        throw Error(ErrorCode::BoundExceeded, "bicolorings support 1..64 agents");
    if (a_mask_ & ~full_mask(agent_count_))
        throw Error(ErrorCode::BadAgents, "coloring mentions agents beyond " + std::to_string(agent_count_));
}

Bicoloring Bicoloring::from_a_side(std::size_t agent_count, const std::vector<Agent>& a_side)
{
    std::uint64_t mask = 0;
    for (Agent a : a_side) {
        if (a == 0 || a > agent_count)
            throw Error(ErrorCode::BadAgents, "agent " + std::to_string(a) + " outside the agent set");
        mask |= std::uint64_t{1} << (a - 1);
    }
    return Bicoloring(agent_count, mask);
}

Bicoloring Bicoloring::from_bits(std::string_view bits)
{
    if (bits.empty() || bits.size() > 64)
        throw Error(ErrorCode::BadReport, "coloring bit string must have 1..64 characters");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            mask |= std::uint64_t{1} << i;
        else if (bits[i] != '0')
            throw Error(ErrorCode::BadReport, "coloring bit string may only contain 0 and 1");
    }
    return Bicoloring(bits.size(), mask);
}

Bicoloring Bicoloring::from_scan_index(std::size_t agent_count, std::uint64_t index)
{
    return Bicoloring(agent_count, index << 1);
}

bool Bicoloring::nontrivial() const noexcept
{
    return a_mask_ != 0 && a_mask_ != full_mask(agent_count_);
}

Bicoloring Bicoloring::flipped() const
{
    return Bicoloring(agent_count_, ~a_mask_ & full_mask(agent_count_));
}

std::vector<Agent> Bicoloring::a_side() const
{
    std::vector<Agent> out;
    for (Agent a = 1; a <= agent_count_; ++a)
        if (color(a) == Color::A)
            out.push_back(a);
    return out;
}

std::vector<Agent> Bicoloring::b_side() const
{
    std::vector<Agent> out;
    for (Agent a = 1; a <= agent_count_; ++a)
        if (color(a) == Color::B)
            out.push_back(a);
    return out;
}

std::string Bicoloring::bits() const
{
    std::string s(agent_count_, '0');
    for (std::size_t i = 0; i < agent_count_; ++i)
        if ((a_mask_ >> i) & 1)
            s[i] = '1';
    return s;
}

std::size_t bcm_cut(const Hypergraph& h, const Bicoloring& c)
{
    if (c.agent_count() != h.agent_count())
        throw Error(ErrorCode::MismatchedAgents, "coloring is not total over the agent set");
    const std::uint64_t a = c.a_mask(), b = ~a & full_mask(c.agent_count());
    std::size_t cut = 0;
    for (const auto& e : h.edges()) {
        const auto m = e.mask();
        cut += (m & a) && (m & b);
    }
    return cut;
}

BcmGraph bcm_reduce(const Hypergraph& h, const Bicoloring& c)
{
    if (c.agent_count() != h.agent_count())
        throw Error(ErrorCode::MismatchedAgents, "coloring is not total over the agent set");
    BcmGraph g;
    for (const auto& e : h.edges()) {
        bool has_a = false, has_b = false;
        for (Agent x : e.members())
            (c.color(x) == Color::A ? has_a : has_b) = true;
        if (has_a && has_b) {
            g.collapsed.push_back({e, Collapse::Edge, Color::A});
            ++g.cross_edge_count;
        }
        else
            g.collapsed.push_back({e, Collapse::Vertex, has_a ? Color::A : Color::B});
    }
    return g;
}

bool witness_holds(const BlockingWitness& w, const Hypergraph& source, const Hypergraph& target)
{
    if (source.agent_count() != target.agent_count() || w.coloring.agent_count() != source.agent_count())
        return false;
    const auto s = bcm_cut(source, w.coloring);
    const auto t = bcm_cut(target, w.coloring);
    return s == w.source_cut && t == w.target_cut && t > s;
}

BlockingWitness make_witness(const Bicoloring& c, const Hypergraph& source, const Hypergraph& target)
{
    require_same_agents(source, target);
    BlockingWitness w{c, bcm_cut(source, c), bcm_cut(target, c)};
    if (w.target_cut <= w.source_cut)
        throw Error(ErrorCode::InternalInconsistency,
            "coloring " + c.bits() + " does not block: cuts " + std::to_string(w.source_cut) + " vs "
                + std::to_string(w.target_cut));
    return w;
}

std::optional<BlockingWitness> find_blocking_witness(const Hypergraph& source, const Hypergraph& target,
    std::size_t color_bound)
{
    require_same_agents(source, target);
    const std::size_t n = source.agent_count();
    if (n > 64)
        throw Error(ErrorCode::SearchBoundExceeded, "more than 64 agents");
    const auto src = edge_masks(source);
    const auto tgt = edge_masks(target);
    const std::uint64_t all = full_mask(n);

    if (n > color_bound) {
        for (Agent a = 1; a <= n; ++a) {
            const std::uint64_t m = std::uint64_t{1} << (a - 1);
            const auto s = cut_of(src, m, all & ~m), t = cut_of(tgt, m, all & ~m);
            if (t > s)
                return BlockingWitness{Bicoloring(n, m), s, t};
        }
        throw Error(ErrorCode::SearchBoundExceeded,
            std::to_string(n) + " agents exceed the exhaustive coloring bound " + std::to_string(color_bound));
    }

    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t index = 1; index < count; ++index) {
        const std::uint64_t a = index << 1, b = all & ~a;
        const auto t = cut_of(tgt, a, b);
        if (t == 0)
            continue;
        const auto s = cut_of(src, a, b);
        if (t > s)
            return BlockingWitness{Bicoloring(n, a), s, t};
    }
    return std::nullopt;
}

CopyBound min_copies_lower_bound(const Hypergraph& source, const Hypergraph& target, std::size_t color_bound)
{
    require_same_agents(source, target);
    const std::size_t n = source.agent_count();
    if (n > color_bound || n > 64)
        throw Error(ErrorCode::SearchBoundExceeded,
            std::to_string(n) + " agents exceed the exhaustive coloring bound " + std::to_string(color_bound));
    if (target.edges().empty())
        return {};

    const auto src = edge_masks(source);
    const auto tgt = edge_masks(target);
    const std::uint64_t all = full_mask(n);
    CopyBound best;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t index = 1; index < count; ++index) {
        const std::uint64_t a = index << 1, b = all & ~a;
        const auto t = cut_of(tgt, a, b);
        if (t == 0)
            continue;
        const auto s = cut_of(src, a, b);
        if (s == 0)
            return {true, 0};
        best.copies = std::max(best.copies, (t + s - 1) / s);
    }
    return best;
}

} // namespace locc
