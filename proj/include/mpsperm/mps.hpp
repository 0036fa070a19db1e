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
#include <vector>

#include "mpsperm/permutation.hpp"
#include "mpsperm/tensor.hpp"

namespace mpsperm {

/// Unit-norm real amplitude vector of length 2^n, n >= 2.
class StateVector {
   public:
    /// Validates length (power of two, at least 4) and unit norm within 1e-12.
    static StateVector from_amplitudes(std::vector<double> amplitudes);

    /// Divides through by the L2 norm first; throws Degenerate on a zero vector.
    static StateVector normalized(std::vector<double> amplitudes);

    const std::vector<double> &amplitudes() const noexcept { return amplitudes_; }
    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }
    double operator[](std::size_t i) const { return amplitudes_[i]; }

    friend bool operator==(const StateVector &, const StateVector &) = default;

   private:
    StateVector(std::vector<double> amplitudes, std::size_t num_qubits)
        : amplitudes_(std::move(amplitudes)), num_qubits_(num_qubits) {}

    std::vector<double> amplitudes_;
    std::size_t num_qubits_;
};

/// Local tensor with row-major data over (left_bond, phys_dim, right_bond).
struct MpsCore {
    std::size_t left_bond = 1;
    std::size_t phys_dim = 2;
    std::size_t right_bond = 1;
    std::vector<double> data;

    std::size_t size() const noexcept { return left_bond * phys_dim * right_bond; }
};

struct Mps {
    std::vector<MpsCore> cores;
    std::size_t chi = 1;
    QubitPermutation perm = QubitPermutation::identity(0);

    std::size_t num_qubits() const;
    std::size_t max_bond() const noexcept;

    /// Throws InvalidInput on bond mismatch, open outer bonds, bad phys dims
    /// or data length, or a perm of the wrong size.
    void validate() const;
};

struct CutRecord {
    std::size_t cut_index = 0;  // qubits to the left of the cut
    std::vector<double> kept_sigma;
    double discarded_sq = 0.0;
};

struct TruncationLedger {
    std::vector<CutRecord> per_cut;
    double total_sq = 0.0;
};

struct MpsEncoding {
    Mps mps;
    TruncationLedger ledger;
};

/// Sequential truncated-SVD encoding. The first cut groups the leading
/// floor(log2 chi) + 1 qubits into one core; each later cut peels one qubit.
/// Cutting stops once the working vector has at most 2 * chi entries, and that
/// remainder (which carries the state norm) becomes the final core. A state with
/// 2^n <= 2 * chi is returned as a single exact core with an empty ledger.
/// The cores describe the amplitudes in the order given; `perm` is recorded as
/// metadata only.
MpsEncoding mps_svd(const StateVector &state, std::size_t chi,
                    const QubitPermutation *perm = nullptr);

/// Contracts cores left to right. The result is not renormalized.
std::vector<double> reconstruct(const Mps &mps);

/// Splits grouped cores into phys_dim 2 cores with exact SVDs.
Mps split_cores(const Mps &mps);

std::size_t param_count(const Mps &mps);

/// floor(log2 chi) + 1
std::size_t group_width(std::size_t chi);

}  // namespace mpsperm
