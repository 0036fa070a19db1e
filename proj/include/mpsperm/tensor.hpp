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

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

namespace mpsperm {

/// Dense row-major matrix used for every reshape/SVD step.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Flat row-major real tensor with explicit extents.
class DenseTensor {
   public:
    DenseTensor(std::vector<double> data, std::vector<std::size_t> shape);

    /// Rank-n tensor with every extent 2, viewing a length-2^n vector as n qubit axes.
    static DenseTensor qubits(std::span<const double> amplitudes);

    const std::vector<double> &data() const noexcept { return data_; }
    std::vector<double> &&release() && noexcept { return std::move(data_); }
    const std::vector<std::size_t> &shape() const noexcept { return shape_; }
    std::size_t rank() const noexcept { return shape_.size(); }
    std::size_t size() const noexcept { return data_.size(); }

    /// Copy into a rows x cols matrix; rows * cols must equal size().
    Matrix as_matrix(std::size_t rows, std::size_t cols) const;

    friend bool operator==(const DenseTensor &, const DenseTensor &) = default;

   private:
    std::vector<double> data_;
    std::vector<std::size_t> shape_;
};

struct TruncatedSvd {
    Matrix u;                              // rows x r, orthonormal columns
    std::vector<double> singular_values;   // descending, length r
    Matrix vt;                             // r x cols, orthonormal rows
    double discarded_sq = 0.0;             // sum of squared discarded singular values

    std::size_t rank() const noexcept { return singular_values.size(); }

    /// diag(sigma) * vt, the residual carried to the next cut.
    Matrix weighted_vt() const;

    Matrix reconstruct() const;
};

/// Singular values below max(rows, cols) * eps * sigma_max are treated as exact
/// zeros: they are neither kept nor counted in discarded_sq. At least one
/// triplet is always kept. Each left singular vector has its first component
/// with |u| > 1e-12 made nonnegative (the matching row of vt is flipped too).
TruncatedSvd truncated_svd(const Matrix &m, std::size_t chi);

/// Output axis j carries input axis order[j].
DenseTensor axis_transpose(const DenseTensor &t, std::span<const std::size_t> order);

double frobenius_distance(const DenseTensor &a, const DenseTensor &b);
double frobenius_distance(std::span<const double> a, std::span<const double> b);

}  // namespace mpsperm
