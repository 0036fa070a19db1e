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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mpsperm/permutation.hpp"

namespace mpsperm {

/// Ordered transpositions of qubit positions, assuming all-to-all connectivity.
struct SwapNetwork {
    std::size_t num_qubits = 0;
    std::vector<std::pair<std::size_t, std::size_t>> swaps;
};

/// Cycle decomposition, cycles taken from the smallest unvisited index. A cycle
/// (c0 c1 ... c_{L-1}) with p[c_k] = c_{k+1} emits (c0,c1), (c1,c2), ...,
/// (c_{L-2},c_{L-1}), so the network has n - #cycles swaps, which is minimal.
SwapNetwork perm_to_swaps(const QubitPermutation &p);

/// Swaps the entries at each pair of positions, in order.
std::vector<std::size_t> apply_swap_network(std::vector<std::size_t> arrangement, const SwapNetwork &net);

/// "QUBITS n" followed by one "SWAP i j" line per swap.
std::string to_text(const SwapNetwork &net);

/// Arity of the multi-qubit blocks needed to prepare a bond-chi MPS.
std::size_t gate_arity(std::size_t chi);

std::size_t count_cycles(const QubitPermutation &p);

}  // namespace mpsperm
