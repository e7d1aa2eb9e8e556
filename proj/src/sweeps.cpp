#include "locc/sweeps.hpp"

#include "locc/distance.hpp"
#include "locc/enumeration.hpp"
#include "locc/error.hpp"
#include "locc/verdict.hpp"
#include "locc/witnesses.hpp"

#include <chrono>

namespace locc {

namespace {

using Clock = std::chrono::steady_clock;

class Sweep {
public:
    explicit Sweep(std::string name) : start_(Clock::now()) { result_.name = std::move(name); }

    // `check` returns nullopt on success, otherwise a counterexample.
    template <class F>
    void item(F&& check)
    {
        std::optional<Json> bad;
        try {
            bad = check();
        }
        catch (const Error& e) {
            bad = Json{{"error", e.what()}};
        }
        if (!bad) {
            ++result_.passed;
            return;
        }
        ++result_.failed;
        if (!result_.first_counterexample)
            result_.first_counterexample = std::move(*bad);
    }

    SweepResult finish()
    {
        result_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return std::move(result_);
    }

private:
    SweepResult result_;
    Clock::time_point start_;
};

Json pair_json(const Hypergraph& a, const Hypergraph& b)
{
    return {{"first", to_json(a)}, {"second", to_json(b)}};
}

std::optional<Json> failure(Json context, std::string what)
{
    context["failure"] = std::move(what);
    return context;
}

SweepResult sweep_ghz(const SweepOptions& o)
{
    Sweep s("ghz_vs_two_epr");
    const auto ghz = Hypergraph::cat(3);
    for (auto target : {Hypergraph::epr_graph(3, {{1, 3}, {2, 3}}), Hypergraph::epr_graph(3, {{1, 2}, {1, 3}}),
             Hypergraph::epr_graph(3, {{1, 2}, {2, 3}})})
        s.item([&]() -> std::optional<Json> {
            const auto w = witness_ghz_not_two_epr(target);
            const auto v = compare(ghz, target, {o.color_bound, o.search_budget, true});
            if (w.source_cut != 1 || w.target_cut != 2 || v.classification != Classification::StrictlyBelow
                || !v.backward.trace() || v.backward.trace()->moves.size() != 1)
                return failure(pair_json(ghz, target), "expected GHZ strictly below two EPR pairs");
            return std::nullopt;
        });
    return s.finish();
}

SweepResult sweep_order_chain(const SweepOptions& o)
{
    Sweep s("order_chain");
    for (std::size_t n = 3; n <= std::max<std::size_t>(o.n_max, 3); ++n)
        s.item([&]() -> std::optional<Json> {
            for (const auto& link : check_order_chain(n))
                if (!link.holds)
                    return failure(to_json(link), "order link fails at n=" + std::to_string(n));
            return std::nullopt;
        });
    return s.finish();
}

SweepResult sweep_tree_count(const SweepOptions& o)
{
    Sweep s("tree_count");
    for (std::size_t n = 2; n <= o.n_max; ++n)
        s.item([&]() -> std::optional<Json> {
            auto trees = all_spanning_trees(n);
            std::size_t expected = 1;
            for (std::size_t i = 2; i < n; ++i)
                expected *= n;
            std::sort(trees.begin(), trees.end(),
                [](const Hypergraph& a, const Hypergraph& b) { return a.edges() < b.edges(); });
            const bool distinct = std::adjacent_find(trees.begin(), trees.end()) == trees.end();
            if (trees.size() != expected || !distinct)
                return Json{{"n", n}, {"count", trees.size()}, {"expected", expected}, {"distinct", distinct}};
            return std::nullopt;
        });
    return s.finish();
}

std::optional<Json> tree_pair_check(const Hypergraph& a, const Hypergraph& b, const CompareOptions& co)
{
    const auto forward = witness_distinct_spanning_trees(a, b);
    const auto backward = witness_distinct_spanning_trees(b, a);
    if (!witness_holds(forward.witness, a, b) || !witness_holds(backward.witness, b, a))
        return failure(pair_json(a, b), "constructive tree split does not block");
    const auto v = compare(a, b, co);
    if (v.classification != Classification::Incomparable)
        return failure(pair_json(a, b), "classified " + std::string(classification_name(v.classification)));
    return std::nullopt;
}

SweepResult sweep_spanning_trees(const SweepOptions& o, Rng& rng)
{
    Sweep s("spanning_tree_incomparability");
    for (std::size_t n = 3; n <= o.n_max; ++n) {
        if (n <= exhaustive_pair_agents) {
            const CompareOptions co{o.color_bound, o.search_budget, true};
            const auto trees = all_spanning_trees(n);
            for (std::size_t i = 0; i < trees.size(); ++i)
                for (std::size_t j = i + 1; j < trees.size(); ++j)
                    s.item([&] { return tree_pair_check(trees[i], trees[j], co); });
        }
        else {
            const CompareOptions co{o.color_bound, o.search_budget, false};
            for (std::size_t k = 0; k < o.samples; ++k) {
                const auto a = random_spanning_tree(n, rng);
                auto b = random_spanning_tree(n, rng);
                while (b == a)
                    b = random_spanning_tree(n, rng);
                s.item([&] { return tree_pair_check(a, b, co); });
            }
        }
    }
    return s.finish();
}

SweepResult sweep_cat_copies(const SweepOptions& o)
{
    Sweep s("cat_copies_vs_tree");
    for (std::size_t n = 3; n <= o.n_max; ++n) {
        const auto cat = Hypergraph::cat(n);
        for (const auto& t : all_spanning_trees(n))
            s.item([&]() -> std::optional<Json> {
                const auto bound = min_copies_lower_bound(cat, t, o.color_bound);
                const auto w = witness_cat_copies_vs_tree(n, t);
                const auto trace = cat_copies_to_tree(t);
                if (bound.infinite || bound.copies != n - 1)
                    return failure(to_json(t), "copy lower bound is not n-1");
                if (!witness_holds(w, cat.copies(n - 2), t))
                    return failure(to_json(t), "n-2 copies witness does not block");
                if (trace.start != cat.copies(n - 1) || trace.end != t || !trace_replays(trace))
                    return failure(to_json(t), "n-1 copies trace does not replay");
                return std::nullopt;
            });
    }
    return s.finish();
}

SweepResult sweep_disconnected(const SweepOptions& o, Rng& rng)
{
    Sweep s("disconnected_vs_cat");
    for (std::size_t n = 4; n <= 8; ++n)
        for (std::size_t k = 0; k < o.samples / 4; ++k) {
            const auto g = random_disconnected_epr_graph(n, rng);
            s.item([&]() -> std::optional<Json> {
                const auto cat = Hypergraph::cat(n);
                const auto to_cat = witness_disconnected_vs_cat(g);
                const auto [cat_to_g, g_to_cat] = witness_cat_vs_disconnected(g);
                if (!witness_holds(to_cat, g, cat) || !witness_holds(g_to_cat, g, cat)
                    || !witness_holds(cat_to_g, cat, g))
                    return failure(to_json(g), "disconnected-graph witness does not recompute");
                return std::nullopt;
            });
        }
    return s.finish();
}

bool pendant_condition(const Hypergraph& a, const Hypergraph& b)
{
    const auto ca = a.incidence_counts(), cb = b.incidence_counts();
    bool f = false, r = false;
    for (Agent x = 1; x <= a.agent_count(); ++x) {
        f = f || (ca[x] == 1 && cb[x] >= 2);
        r = r || (cb[x] == 1 && ca[x] >= 2);
    }
    return f && r;
}

SweepResult sweep_pendant(const SweepOptions& o, Rng& rng)
{
    Sweep s("pendant_condition");
    std::size_t found = 0;
    while (found < o.samples) {
        const std::size_t n = 4 + found % 6;
        const auto a = random_hypertree(n, 4, rng);
        const auto b = random_hypertree(n, 4, rng);
        if (!pendant_condition(a, b))
            continue;
        ++found;
        s.item([&]() -> std::optional<Json> {
            const auto [f, r] = witness_pendant_condition(a, b);
            if (!witness_holds(f, a, b) || !witness_holds(r, b, a))
                return failure(pair_json(a, b), "pendant witness does not recompute");
            if (!find_blocking_witness(a, b, o.color_bound) || !find_blocking_witness(b, a, o.color_bound))
                return failure(pair_json(a, b), "coloring scan disagrees with pendant witness");
            return std::nullopt;
        });
    }
    return s.finish();
}

SweepResult sweep_r_uniform(const SweepOptions& o, Rng& rng)
{
    Sweep s("r_uniform_hypertrees");
    const CompareOptions co{o.color_bound, o.search_budget, false};
    for (std::size_t r : o.r_list)
        for (std::size_t m = 2; m <= 4; ++m) {
            const std::size_t n = m * (r - 1) + 1;
            if (n > o.color_bound)
                continue;
            for (std::size_t k = 0; k < o.samples; ++k) {
                const auto a = random_r_uniform_hypertree(n, r, rng);
                auto b = random_r_uniform_hypertree(n, r, rng);
                while (b == a)
                    b = random_r_uniform_hypertree(n, r, rng);
                s.item([&]() -> std::optional<Json> {
                    if (r >= 3) {
                        const auto p = find_separating_pair(a, b);
                        if (!co_occur(b, p.u, p.v) || co_occur(a, p.u, p.v))
                            return failure(pair_json(a, b), "separating pair fails the co-occurrence scan");
                    }
                    const auto w = witness_r_uniform_hypertrees(a, b);
                    if (!witness_holds(w.forward.witness, a, b) || !witness_holds(w.backward.witness, b, a))
                        return failure(pair_json(a, b), "hypertree witness does not recompute");
                    if (compare(a, b, co).classification != Classification::Incomparable)
                        return failure(pair_json(a, b), "not classified Incomparable");
                    return std::nullopt;
                });
            }
        }
    return s.finish();
}

SweepResult sweep_edge_law(const SweepOptions& o, Rng& rng)
{
    Sweep s("hypertree_edge_law");
    for (std::size_t r = 2; r <= 5; ++r)
        for (std::size_t m = 1; m <= 6; ++m)
            for (std::size_t k = 0; k < std::max<std::size_t>(o.samples / 20, 1); ++k) {
                const std::size_t n = m * (r - 1) + 1;
                const auto h = random_r_uniform_hypertree(n, r, rng);
                s.item([&]() -> std::optional<Json> {
                    if (h.edge_count() != m || !is_entangled_hypertree(h) || uniformity(h) != r
                        || n != h.edge_count() * (r - 1) + 1)
                        return failure(to_json(h), "hypertree violates n = m(r-1)+1");
                    return std::nullopt;
                });
            }
    return s.finish();
}

SweepResult sweep_distance(const SweepOptions& o, Rng& rng)
{
    Sweep s("quantum_distance");
    for (std::size_t n = 4; n <= 9; ++n)
        for (std::size_t k = 0; k < o.samples; ++k) {
            const auto a = random_spanning_tree(n, rng);
            const auto b = random_spanning_tree(n, rng);
            const auto c = random_spanning_tree(n, rng);
            s.item([&]() -> std::optional<Json> {
                const auto ab = quantum_distance(a, b), ba = quantum_distance(b, a);
                const auto bc = quantum_distance(b, c), ac = quantum_distance(a, c);
                if (ab != ba || (ab == 0) != (a == b) || ac > ab + bc)
                    return failure(Json{{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}}, "metric axiom fails");
                if (a == b)
                    return std::nullopt;
                const auto d = distance_report(a, b, o.color_bound);
                if (d.copies_lower < 2 || d.copies_lower > d.copies_upper || d.copies_upper != d.qd + 1
                    || d.upper_trace.start != a.copies(d.qd + 1) || !trace_replays(d.upper_trace))
                    return failure(to_json(d), "copy bounds fail");
                return std::nullopt;
            });
        }
    s.item([&]() -> std::optional<Json> {
        const auto found = find_saturating_pairs(3);
        if (!found.lower_two)
            return Json{{"failure", "no saturating pair at n=3"}};
        const auto d = distance_report(found.lower_two->first, found.lower_two->second, o.color_bound);
        if (d.copies_lower != d.copies_upper)
            return failure(to_json(d), "pair is not saturating");
        return std::nullopt;
    });
    return s.finish();
}

SweepResult sweep_soundness(const SweepOptions& o, Rng& rng)
{
    Sweep s("move_soundness");
    const std::size_t count = std::max<std::size_t>(o.samples * 50, 1);
    std::size_t done = 0;
    while (done < count) {
        const std::size_t n = 3 + rng() % 6;
        std::vector<Hyperedge> edges;
        const std::size_t m = 1 + rng() % 6;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Agent> members;
            for (Agent a = 1; a <= n; ++a)
                if (rng() % 3 == 0)
                    members.push_back(a);
            if (members.size() >= 2)
                edges.emplace_back(std::move(members));
        }
        const Hypergraph state(n, std::move(edges));
        const auto moves = legal_moves(state);
        if (moves.empty())
            continue;
        const auto& move = moves[rng() % moves.size()];
        const Bicoloring coloring(n, rng() & ((std::uint64_t{1} << n) - 1));
        ++done;
        s.item([&]() -> std::optional<Json> {
            const auto next = apply_move(state, move);
            if (bcm_cut(next, coloring) > bcm_cut(state, coloring))
                return Json{{"state", to_json(state)}, {"move", to_json(move)}, {"coloring", coloring.bits()}};
            return std::nullopt;
        });
    }
    return s.finish();
}

} // namespace

std::vector<SweepResult> run_theorem_sweeps(const SweepOptions& options)
{
    if (options.n_max < 3 || options.n_max > max_sweep_tree_agents)
        throw Error(ErrorCode::BoundExceeded,
            "tree sweeps support n_max in 3.." + std::to_string(max_sweep_tree_agents));
    for (std::size_t r : options.r_list)
        if (r < 2)
            throw Error(ErrorCode::IncompatibleParameters, "hyperedge size must be at least 2");
    Rng rng(options.seed);
    std::vector<SweepResult> out;
    out.push_back(sweep_ghz(options));
    out.push_back(sweep_order_chain(options));
    out.push_back(sweep_tree_count(options));
    out.push_back(sweep_spanning_trees(options, rng));
    out.push_back(sweep_cat_copies(options));
    out.push_back(sweep_disconnected(options, rng));
    out.push_back(sweep_pendant(options, rng));
    out.push_back(sweep_r_uniform(options, rng));
    out.push_back(sweep_edge_law(options, rng));
    out.push_back(sweep_distance(options, rng));
    out.push_back(sweep_soundness(options, rng));
    return out;
}

Json to_json(const SweepResult& r)
{
    Json j{{"name", r.name}, {"passed", r.passed}, {"failed", r.failed}};
    if (r.first_counterexample)
        j["first_counterexample"] = *r.first_counterexample;
    return j;
}

} // namespace locc
