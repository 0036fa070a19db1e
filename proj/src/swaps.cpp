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

#include "mpsperm/swaps.hpp"

#include "mpsperm/error.hpp"
#include "mpsperm/mps.hpp"

namespace mpsperm {

SwapNetwork perm_to_swaps(const QubitPermutation &p) {
    SwapNetwork net;
    net.num_qubits = p.size();
    std::vector<bool> visited(p.size(), false);
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (visited[start]) {
            continue;
        }
        visited[start] = true;
        std::size_t cur = start;
        while (p[cur] != start) {
            net.swaps.emplace_back(cur, p[cur]);
            cur = p[cur];
            visited[cur] = true;
        }
    }
    return net;
}

std::vector<std::size_t> apply_swap_network(std::vector<std::size_t> arrangement, const SwapNetwork &net) {
    for (const auto &[i, j] : net.swaps) {
        require(i < arrangement.size() && j < arrangement.size(),
                "swap (" + std::to_string(i) + ", " + std::to_string(j) + ") is out of range");
        std::swap(arrangement[i], arrangement[j]);
    }
    return arrangement;
}

std::string to_text(const SwapNetwork &net) {
    std::string out = "QUBITS " + std::to_string(net.num_qubits) + "\n";
    for (const auto &[i, j] : net.swaps) {
        out += "SWAP " + std::to_string(i) + " " + std::to_string(j) + "\n";
    }
    return out;
}

std::size_t gate_arity(std::size_t chi) { return group_width(chi); }

std::size_t count_cycles(const QubitPermutation &p) {
    std::vector<bool> visited(p.size(), false);
    std::size_t cycles = 0;
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (visited[start]) {
            continue;
        }
        ++cycles;
        for (std::size_t cur = start; !visited[cur]; cur = p[cur]) {
            visited[cur] = true;
        }
    }
    return cycles;
}

}  // namespace mpsperm
