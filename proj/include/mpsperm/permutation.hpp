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
#include <span>
#include <string>
#include <vector>

namespace mpsperm {

/// Bijection on qubit positions: position j of the new ordering carries
/// original qubit map()[j]. Qubit 0 is the most significant bit of a flat
/// amplitude index, i = sum_j 2^(n-1-j) q_j.
class QubitPermutation {
   public:
    explicit QubitPermutation(std::vector<std::size_t> map);

    static QubitPermutation identity(std::size_t n);

    /// Parses "3,4,2,7" (whitespace tolerated).
    static QubitPermutation parse(const std::string &text);

    const std::vector<std::size_t> &map() const noexcept { return map_; }
    std::size_t size() const noexcept { return map_.size(); }
    std::size_t operator[](std::size_t j) const { return map_[j]; }
    bool is_identity() const noexcept;

    std::string to_string() const;

    friend bool operator==(const QubitPermutation &, const QubitPermutation &) = default;

   private:
    std::vector<std::size_t> map_;
};

QubitPermutation invert_permutation(const QubitPermutation &p);

/// Composition with apply(s, compose(p, q)) == apply(apply(s, q), p).
QubitPermutation compose(const QubitPermutation &p, const QubitPermutation &q);

}  // namespace mpsperm
