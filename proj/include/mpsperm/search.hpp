// Copyright 2026 The mpsperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpsperm/mps.hpp"
#include "mpsperm/permutation.hpp"
#include "mpsperm/tensor.hpp"

namespace mpsperm {

/// A partial qubit ordering in the uniform-cost search.
///
/// The first cut treats `prefix` as a set (ascending); every later cut fixes one
/// more qubit from `remaining` into `extension`. `residual` is diag(sigma) * Vt
/// of the last cut: its rows are the truncated bond and its columns index the
/// `remaining` qubits in ascending order, most significant first.
struct SearchNode {
    std::vector<std::size_t> prefix;
    std::vector<std::size_t> extension;
    std::vector<std::size_t> remaining;
    double cost = 0.0;
    Matrix residual;

    std::size_t depth() const noexcept { return prefix.size() + extension.size(); }

    /// The last prefix.size() qubits are left; their order cannot change the cost.
    bool is_terminal() const noexcept { return remaining.size() <= prefix.size(); }
};

struct SearchOptions {
    /// Keep only the path in frontier nodes and replay the SVDs on expansion.
    bool recompute = false;
    /// Children whose cost exceeds this bound are not pushed.
    std::optional<double> cost_bound;
};

struct SearchResult {
    QubitPermutation permutation = QubitPermutation::identity(0);
    double total_sq = 0.0;
    std::uint64_t visited_nodes = 0;  // heap pops
    std::uint64_t pushed_nodes = 0;   // heap pushes, seeds included
    std::uint64_t seed_nodes = 0;     // C(n, x)
    std::uint64_t frontier_peak = 0;
    std::chrono::duration<double> wall_time{};
    /// Set when cost_bound pruned every complete path; permutation is then the
    /// identity and total_sq its cost.
    bool bound_exhausted = false;
};

/// Number of qubits handled as one unordered block at each end of the chain:
/// min(floor(log2 chi) + 1, n - 1).
std::size_t search_group_width(std::size_t n, std::size_t chi);

/// First cut with `prefix_set` on the row side. Throws if the set size is not
/// search_group_width(n, chi) or contains duplicates.
SearchNode partial_truncation_error(const StateVector &state, std::span<const std::size_t> prefix_set,
                                    std::size_t chi);

/// Moves qubit q from the residual's columns into its rows and cuts again.
SearchNode extend_node(const SearchNode &node, std::size_t q, std::size_t chi);

/// prefix ascending ++ extension ++ remaining ascending. Throws on a
/// non-terminal node.
QubitPermutation node_to_permutation(const SearchNode &node);

SearchResult search_optimal_permutation(const StateVector &state, std::size_t chi,
                                        const SearchOptions &options = {});

/// Number of distinct search nodes at depth k (x <= k <= n - x):
/// C(n, x) * P(n - x, k - x).
std::uint64_t grouped_nodes_at_depth(std::size_t n, std::size_t x, std::size_t k);

/// Sum of grouped_nodes_at_depth over every depth.
std::uint64_t grouped_space_size(std::size_t n, std::size_t x);

}  // namespace mpsperm
