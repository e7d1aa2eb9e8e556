#pragma once

#include "locc/merging.hpp"
#include "locc/protocols.hpp"
#include "locc/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace locc {

struct SweepOptions {
    /// Largest agent count for the tree sweeps; pairs are exhaustive up to
    /// 5 agents and sampled above.
    std::size_t n_max = 5;
    std::vector<std::size_t> r_list{3, 4};
    std::uint64_t seed = 1;
    std::size_t samples = 200;
    std::size_t color_bound = default_color_bound;
    std::size_t search_budget = default_search_budget;
};

struct SweepResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::optional<Json> first_counterexample;
    double seconds = 0;
};

inline constexpr std::size_t max_sweep_tree_agents = 7;
inline constexpr std::size_t exhaustive_pair_agents = 5;

/// Runs every theorem sweep; BoundExceeded when n_max is outside 3..7.
std::vector<SweepResult> run_theorem_sweeps(const SweepOptions& options);

Json to_json(const SweepResult& r);

} // namespace locc
