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

#include "mpsperm/permutation.hpp"

#include <charconv>
#include <sstream>

#include "mpsperm/error.hpp"

namespace mpsperm {

QubitPermutation::QubitPermutation(std::vector<std::size_t> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (std::size_t v : map_) {
        require(v < map_.size() && !seen[v], "qubit map is not a bijection on [0, n)");
        seen[v] = true;
    }
}

QubitPermutation QubitPermutation::identity(std::size_t n) {
    std::vector<std::size_t> map(n);
    for (std::size_t i = 0; i < n; ++i) {
        map[i] = i;
    }
    return QubitPermutation(std::move(map));
}

QubitPermutation QubitPermutation::parse(const std::string &text) {
    std::vector<std::size_t> map;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        require(first != std::string::npos, "empty entry in permutation '" + text + "'");
        const std::string trimmed = token.substr(first, last - first + 1);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
        require(ec == std::errc() && ptr == trimmed.data() + trimmed.size(),
                "bad entry '" + trimmed + "' in permutation");
        map.push_back(value);
    }
    require(!map.empty(), "empty permutation");
    return QubitPermutation(std::move(map));
}

bool QubitPermutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (map_[i] != i) {
            return false;
        }
    }
    return true;
}

std::string QubitPermutation::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += std::to_string(map_[i]);
    }
    return out + "]";
}

QubitPermutation invert_permutation(const QubitPermutation &p) {
    std::vector<std::size_t> inv(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        inv[p[j]] = j;
    }
    return QubitPermutation(std::move(inv));
}

QubitPermutation compose(const QubitPermutation &p, const QubitPermutation &q) {
    require(p.size() == q.size(), "cannot compose permutations of different sizes");
    std::vector<std::size_t> out(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        out[j] = q[p[j]];
    }
    return QubitPermutation(std::move(out));
}

}  // namespace mpsperm
