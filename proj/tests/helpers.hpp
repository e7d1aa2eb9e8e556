#pragma once

#include "locc/enumeration.hpp"
#include "locc/error.hpp"
#include "locc/topology.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace testing_support {

inline locc::Hypergraph hg(std::size_t n, std::vector<std::vector<locc::Agent>> edges)
{
    std::vector<locc::Hyperedge> out;
    for (auto& e : edges)
        out.emplace_back(std::move(e));
    return locc::Hypergraph(n, std::move(out));
}

/// Up to max_edges hyperedges, each a uniformly random subset of size >= 2.
inline locc::Hypergraph random_hypergraph(std::size_t n, std::size_t max_edges, locc::Rng& rng)
{
    std::vector<locc::Hyperedge> edges;
    const std::size_t m = rng() % (max_edges + 1);
    while (n >= 2 && edges.size() < m) {
        std::vector<locc::Agent> members;
        for (locc::Agent a = 1; a <= n; ++a)
            if (rng() % 2)
                members.push_back(a);
        if (members.size() >= 2)
            edges.emplace_back(std::move(members));
    }
    return locc::Hypergraph(n, std::move(edges));
}

} // namespace testing_support

// Asserts that `statement` throws locc::Error with the given code.
#define EXPECT_LOCC_ERROR(statement, error_code)                                          \
    do {                                                                                  \
        try {                                                                             \
            statement;                                                                    \
            ADD_FAILURE() << "expected " << locc::error_code_name(locc::ErrorCode::error_code); \
        }                                                                                 \
        catch (const locc::Error& e_) {                                                   \
            EXPECT_EQ(e_.code(), locc::ErrorCode::error_code) << e_.what();               \
        }                                                                                 \
    } while (0)
