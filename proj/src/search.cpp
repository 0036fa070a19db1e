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

#include "mpsperm/search.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "mpsperm/error.hpp"

namespace mpsperm {

namespace {

SearchNode child_from_svd(const SearchNode &parent, const TruncatedSvd &svd) {
    SearchNode child;
    child.prefix = parent.prefix;
    child.extension = parent.extension;
    child.remaining = parent.remaining;
    child.cost = parent.cost + svd.discarded_sq;
    child.residual = svd.weighted_vt();
    return child;
}

// Lexicographic order on prefix ++ extension; prefixes share one length.
bool path_less(const SearchNode &a, const SearchNode &b) {
    if (a.prefix != b.prefix) {
        return a.prefix < b.prefix;
    }
    return a.extension < b.extension;
}

// Lowest cost first, then deeper, then lexicographically smaller path.
bool pops_before(const SearchNode &a, const SearchNode &b) {
    if (a.cost != b.cost) {
        return a.cost < b.cost;
    }
    if (a.depth() != b.depth()) {
        return a.depth() > b.depth();
    }
    return path_less(a, b);
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

bool next_combination(std::vector<std::size_t> &comb, std::size_t n) {
    const std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

class Frontier {
   public:
    explicit Frontier(bool keep_residuals) : keep_residuals_(keep_residuals) {}

    void push(SearchNode node) {
        if (!keep_residuals_) {
            node.residual = Matrix();
        }
        std::size_t slot;
        if (!free_.empty()) {
            slot = free_.back();
            free_.pop_back();
            nodes_[slot] = std::move(node);
        } else {
            slot = nodes_.size();
            nodes_.push_back(std::move(node));
        }
        heap_.push(slot);
        ++pushed_;
        peak_ = std::max<std::uint64_t>(peak_, heap_.size());
    }

    SearchNode pop() {
        const std::size_t slot = heap_.top();
        heap_.pop();
        free_.push_back(slot);
        return std::move(nodes_[slot]);
    }

    bool empty() const noexcept { return heap_.empty(); }
    std::uint64_t pushed() const noexcept { return pushed_; }
    std::uint64_t peak() const noexcept { return peak_; }

   private:
    struct Later {
        const std::vector<SearchNode> *nodes;
        bool operator()(std::size_t a, std::size_t b) const { return pops_before((*nodes)[b], (*nodes)[a]); }
    };

    bool keep_residuals_;
    std::vector<SearchNode> nodes_;
    std::vector<std::size_t> free_;
    std::priority_queue<std::size_t, std::vector<std::size_t>, Later> heap_{Later{&nodes_}};
    std::uint64_t pushed_ = 0;
    std::uint64_t peak_ = 0;
};

SearchNode replay(const StateVector &state, const SearchNode &node, std::size_t chi) {
    SearchNode cur = partial_truncation_error(state, node.prefix, chi);
    for (std::size_t q : node.extension) {
        cur = extend_node(cur, q, chi);
    }
    return cur;
}

}  // namespace

std::size_t search_group_width(std::size_t n, std::size_t chi) {
    require(n >= 2, "search needs at least 2 qubits");
    return std::min(group_width(chi), n - 1);
}

SearchNode partial_truncation_error(const StateVector &state, std::span<const std::size_t> prefix_set,
                                    std::size_t chi) {
    const std::size_t n = state.num_qubits();
    const std::size_t x = search_group_width(n, chi);
    require(prefix_set.size() == x, "prefix set has " + std::to_string(prefix_set.size()) +
                                        " qubits, expected " + std::to_string(x));

    SearchNode node;
    node.prefix.assign(prefix_set.begin(), prefix_set.end());
    std::sort(node.prefix.begin(), node.prefix.end());
    std::vector<bool> used(n, false);
    for (std::size_t q : node.prefix) {
        require(q < n && !used[q], "prefix set must hold distinct qubits below n");
        used[q] = true;
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (!used[q]) {
            node.remaining.push_back(q);
        }
    }

    std::vector<std::size_t> order = node.prefix;
    order.insert(order.end(), node.remaining.begin(), node.remaining.end());
    const DenseTensor moved = axis_transpose(DenseTensor::qubits(state.amplitudes()), order);
    const std::size_t rows = std::size_t{1} << x;
    const TruncatedSvd svd = truncated_svd(moved.as_matrix(rows, state.size() / rows), chi);
    node.cost = svd.discarded_sq;
    node.residual = svd.weighted_vt();
    return node;
}

SearchNode extend_node(const SearchNode &node, std::size_t q, std::size_t chi) {
    const auto pos_it = std::find(node.remaining.begin(), node.remaining.end(), q);
    require(pos_it != node.remaining.end(), "qubit " + std::to_string(q) + " is already fixed");
    const std::size_t m = node.remaining.size();
    require(m >= 2, "cannot extend a node with fewer than two open qubits");
    const auto r = static_cast<std::size_t>(node.residual.rows());
    require(static_cast<std::size_t>(node.residual.cols()) == (std::size_t{1} << m),
            "node residual does not match its open qubits");

    // Column bit of q, counted from the least significant end.
    const std::size_t shift = m - 1 - static_cast<std::size_t>(pos_it - node.remaining.begin());
    const std::size_t low_mask = (std::size_t{1} << shift) - 1;
    const std::size_t new_cols = std::size_t{1} << (m - 1);

    Matrix moved(static_cast<Eigen::Index>(2 * r), static_cast<Eigen::Index>(new_cols));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = 0; c < new_cols; ++c) {
            const std::size_t base = ((c & ~low_mask) << 1) | (c & low_mask);
            const auto row = static_cast<Eigen::Index>(i);
            moved(static_cast<Eigen::Index>(2 * i), static_cast<Eigen::Index>(c)) =
                node.residual(row, static_cast<Eigen::Index>(base));
            moved(static_cast<Eigen::Index>(2 * i + 1), static_cast<Eigen::Index>(c)) =
                node.residual(row, static_cast<Eigen::Index>(base | (std::size_t{1} << shift)));
        }
    }

    SearchNode child = child_from_svd(node, truncated_svd(moved, chi));
    child.extension.push_back(q);
    child.remaining.erase(child.remaining.begin() + (pos_it - node.remaining.begin()));
    return child;
}

QubitPermutation node_to_permutation(const SearchNode &node) {
    require(node.is_terminal(), "node is not terminal: " + std::to_string(node.remaining.size()) +
                                    " qubits still open");
    std::vector<std::size_t> map = node.prefix;
    map.insert(map.end(), node.extension.begin(), node.extension.end());
    map.insert(map.end(), node.remaining.begin(), node.remaining.end());
    return QubitPermutation(std::move(map));
}

SearchResult search_optimal_permutation(const StateVector &state, std::size_t chi,
                                        const SearchOptions &options) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = state.num_qubits();
    const std::size_t x = search_group_width(n, chi);

    SearchResult result;
    result.permutation = QubitPermutation::identity(n);

    // Every cut is exact once chi reaches the largest possible Schmidt rank.
    if (chi >= (std::size_t{1} << (n / 2))) {
        result.wall_time = std::chrono::steady_clock::now() - start;
        return result;
    }

    Frontier frontier(!options.recompute);
    std::vector<std::size_t> comb(x);
    for (std::size_t i = 0; i < x; ++i) {
        comb[i] = i;
    }
    do {
        frontier.push(partial_truncation_error(state, comb, chi));
    } while (next_combination(comb, n));
    result.seed_nodes = frontier.pushed();

    bool found = false;
    while (!found && !frontier.empty()) {
        SearchNode node = frontier.pop();
        ++result.visited_nodes;
        if (node.is_terminal()) {
            result.permutation = node_to_permutation(node);
            result.total_sq = node.cost;
            found = true;
            break;
        }
        if (options.recompute) {
            node.residual = replay(state, node, chi).residual;
        }
        for (std::size_t q : node.remaining) {
            SearchNode child = extend_node(node, q, chi);
            if (options.cost_bound && child.cost > *options.cost_bound) {
                continue;
            }
            frontier.push(std::move(child));
        }
    }
    if (!found) {
        // Only reachable when cost_bound pruned every complete path.
        result.bound_exhausted = true;
        result.total_sq = mps_svd(state, chi).ledger.total_sq;
    }
    result.pushed_nodes = frontier.pushed();
    result.frontier_peak = frontier.peak();
    result.wall_time = std::chrono::steady_clock::now() - start;
    return result;
}

std::uint64_t grouped_nodes_at_depth(std::size_t n, std::size_t x, std::size_t k) {
    if (k < x || k + x > n) {
        return 0;
    }
    std::uint64_t count = binomial(n, x);
    for (std::size_t i = 0; i < k - x; ++i) {
        count *= n - x - i;
    }
    return count;
}

std::uint64_t grouped_space_size(std::size_t n, std::size_t x) {
    std::uint64_t total = 0;
    for (std::size_t k = x; k + x <= n; ++k) {
        total += grouped_nodes_at_depth(n, x, k);
    }
    return total;
}

}  // namespace mpsperm
