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

#include "mpsperm/mps.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "mpsperm/error.hpp"

namespace mpsperm {

namespace {

double l2_norm(std::span<const double> v) {
    double acc = 0.0;
    for (double a : v) {
        acc += a * a;
    }
    return std::sqrt(acc);
}

std::size_t qubit_count(std::size_t length) {
    require(std::has_single_bit(length) && length >= 4,
            "state length " + std::to_string(length) + " is not a power of two >= 4");
    return static_cast<std::size_t>(std::countr_zero(length));
}

std::vector<double> flatten(const Matrix &m) { return {m.data(), m.data() + m.size()}; }

}  // namespace

StateVector StateVector::from_amplitudes(std::vector<double> amplitudes) {
    const std::size_t n = qubit_count(amplitudes.size());
    const double norm = l2_norm(amplitudes);
    require(std::abs(norm - 1.0) <= 1e-12, "state is not normalized (norm " + std::to_string(norm) + ")");
    return StateVector(std::move(amplitudes), n);
}

StateVector StateVector::normalized(std::vector<double> amplitudes) {
    const std::size_t n = qubit_count(amplitudes.size());
    const double norm = l2_norm(amplitudes);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        fail(ErrorKind::Degenerate, "cannot normalize a zero or non-finite vector");
    }
    for (double &a : amplitudes) {
        a /= norm;
    }
    return StateVector(std::move(amplitudes), n);
}

std::size_t Mps::num_qubits() const {
    std::size_t total = 1;
    for (const auto &core : cores) {
        total *= core.phys_dim;
    }
    return static_cast<std::size_t>(std::countr_zero(total));
}

std::size_t Mps::max_bond() const noexcept {
    std::size_t best = 1;
    for (const auto &core : cores) {
        best = std::max({best, core.left_bond, core.right_bond});
    }
    return best;
}

void Mps::validate() const {
    require(!cores.empty(), "MPS has no cores");
    require(cores.front().left_bond == 1, "first core must have left bond 1");
    require(cores.back().right_bond == 1, "last core must have right bond 1");
    for (std::size_t i = 0; i < cores.size(); ++i) {
        const auto &core = cores[i];
        require(core.left_bond >= 1 && core.right_bond >= 1, "core bonds must be positive");
        require(core.phys_dim >= 2 && std::has_single_bit(core.phys_dim),
                "core " + std::to_string(i) + " phys_dim is not a power of two >= 2");
        require(core.data.size() == core.size(), "core " + std::to_string(i) + " data length mismatch");
        if (i + 1 < cores.size()) {
            require(core.right_bond == cores[i + 1].left_bond,
                    "bond mismatch between cores " + std::to_string(i) + " and " + std::to_string(i + 1));
        }
    }
    require(perm.size() == num_qubits(), "MPS permutation size does not match qubit count");
}

std::size_t group_width(std::size_t chi) {
    require(chi >= 1, "chi must be at least 1");
    return static_cast<std::size_t>(std::bit_width(chi));
}

MpsEncoding mps_svd(const StateVector &state, std::size_t chi, const QubitPermutation *perm) {
    require(chi >= 1, "chi must be at least 1");
    const std::size_t n = state.num_qubits();
    const std::size_t length = state.size();
    if (perm != nullptr) {
        require(perm->size() == n, "permutation size does not match state");
    }

    MpsEncoding out;
    out.mps.chi = chi;
    out.mps.perm = perm != nullptr ? *perm : QubitPermutation::identity(n);

    if (length <= 2 * chi) {
        out.mps.cores.push_back(MpsCore{1, length, 1, state.amplitudes()});
        return out;
    }

    const std::size_t x = std::min(group_width(chi), n);
    std::size_t phys = std::size_t{1} << x;
    std::size_t left = 1;
    std::size_t cut = x;
    Matrix work = Eigen::Map<const Matrix>(state.amplitudes().data(), static_cast<Eigen::Index>(phys),
                                           static_cast<Eigen::Index>(length / phys));
    while (true) {
        TruncatedSvd svd = truncated_svd(work, chi);
        const std::size_t r = svd.rank();
        out.mps.cores.push_back(MpsCore{left, phys, r, flatten(svd.u)});
        out.ledger.per_cut.push_back(CutRecord{cut, svd.singular_values, svd.discarded_sq});
        out.ledger.total_sq += svd.discarded_sq;

        Matrix residual = svd.weighted_vt();
        const auto cols = static_cast<std::size_t>(residual.cols());
        left = r;
        if (r * cols <= 2 * chi) {
            out.mps.cores.push_back(MpsCore{left, cols, 1, flatten(residual)});
            break;
        }
        // Row-major reshape r x cols -> 2r x cols/2 moves the next qubit into the row index.
        phys = 2;
        ++cut;
        work = Eigen::Map<const Matrix>(residual.data(), static_cast<Eigen::Index>(2 * r),
                                        static_cast<Eigen::Index>(cols / 2));
    }
    return out;
}

std::vector<double> reconstruct(const Mps &mps) {
    mps.validate();
    // acc holds a (prefix amplitudes) x (bond) matrix, row-major.
    std::vector<double> acc{1.0};
    std::size_t rows = 1;
    for (const auto &core : mps.cores) {
        const std::size_t cols_out = core.phys_dim * core.right_bond;
        Eigen::Map<const Matrix> a(acc.data(), static_cast<Eigen::Index>(rows),
                                   static_cast<Eigen::Index>(core.left_bond));
        Eigen::Map<const Matrix> c(core.data.data(), static_cast<Eigen::Index>(core.left_bond),
                                   static_cast<Eigen::Index>(cols_out));
        Matrix next = a * c;
        acc.assign(next.data(), next.data() + next.size());
        rows *= core.phys_dim;
    }
    return acc;
}

Mps split_cores(const Mps &mps) {
    mps.validate();
    Mps out;
    out.chi = mps.chi;
    out.perm = mps.perm;
    for (const auto &core : mps.cores) {
        if (core.phys_dim == 2) {
            out.cores.push_back(core);
            continue;
        }
        std::size_t left = core.left_bond;
        std::size_t phys = core.phys_dim;
        const std::size_t right = core.right_bond;
        Matrix rest = Eigen::Map<const Matrix>(core.data.data(), static_cast<Eigen::Index>(left * phys),
                                               static_cast<Eigen::Index>(right));
        while (phys > 2) {
            Matrix m = Eigen::Map<const Matrix>(rest.data(), static_cast<Eigen::Index>(left * 2),
                                                static_cast<Eigen::Index>(phys / 2 * right));
            const auto full = static_cast<std::size_t>(std::min(m.rows(), m.cols()));
            TruncatedSvd svd = truncated_svd(m, full);
            out.cores.push_back(MpsCore{left, 2, svd.rank(), flatten(svd.u)});
            rest = svd.weighted_vt();
            left = svd.rank();
            phys /= 2;
        }
        out.cores.push_back(MpsCore{left, 2, right, flatten(rest)});
    }
    return out;
}

std::size_t param_count(const Mps &mps) {
    std::size_t total = 0;
    for (const auto &core : mps.cores) {
        total += core.size();
    }
    return total;
}

}  // namespace mpsperm
