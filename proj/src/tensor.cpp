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

#include "mpsperm/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "mpsperm/error.hpp"

namespace mpsperm {

DenseTensor::DenseTensor(std::vector<double> data, std::vector<std::size_t> shape)
    : data_(std::move(data)), shape_(std::move(shape)) {
    std::size_t expected = 1;
    for (std::size_t extent : shape_) {
        require(extent >= 1, "tensor extents must be positive");
        expected *= extent;
    }
    require(expected == data_.size(), "tensor shape product " + std::to_string(expected) +
                                          " does not match data length " + std::to_string(data_.size()));
}

DenseTensor DenseTensor::qubits(std::span<const double> amplitudes) {
    require(!amplitudes.empty() && std::has_single_bit(amplitudes.size()),
            "qubit tensor length must be a power of two");
    const auto n = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
    return DenseTensor({amplitudes.begin(), amplitudes.end()}, std::vector<std::size_t>(n, 2));
}

Matrix DenseTensor::as_matrix(std::size_t rows, std::size_t cols) const {
    require(rows * cols == data_.size(), "matrix view does not cover the tensor");
    return Eigen::Map<const Matrix>(data_.data(), static_cast<Eigen::Index>(rows),
                                    static_cast<Eigen::Index>(cols));
}

Matrix TruncatedSvd::weighted_vt() const {
    Matrix out = vt;
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        out.row(i) *= singular_values[static_cast<std::size_t>(i)];
    }
    return out;
}

Matrix TruncatedSvd::reconstruct() const { return u * weighted_vt(); }

TruncatedSvd truncated_svd(const Matrix &m, std::size_t chi) {
    require(chi >= 1, "chi must be at least 1");
    require(m.rows() > 0 && m.cols() > 0, "cannot decompose an empty matrix");
    require(m.allFinite(), "matrix has non-finite entries");

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Eigen::MatrixXd(m), Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd &sigma = svd.singularValues();
    const auto full = static_cast<std::size_t>(sigma.size());

    const double tol = static_cast<double>(std::max(m.rows(), m.cols())) *
                       std::numeric_limits<double>::epsilon() * (full > 0 ? sigma(0) : 0.0);
    std::size_t nonzero = 0;
    while (nonzero < full && sigma(static_cast<Eigen::Index>(nonzero)) > tol) {
        ++nonzero;
    }
    const std::size_t keep = std::max<std::size_t>(1, std::min(nonzero, chi));

    TruncatedSvd out;
    out.u = svd.matrixU().leftCols(static_cast<Eigen::Index>(keep));
    out.vt = svd.matrixV().leftCols(static_cast<Eigen::Index>(keep)).transpose();
    out.singular_values.resize(keep);
    for (std::size_t i = 0; i < keep; ++i) {
        out.singular_values[i] = sigma(static_cast<Eigen::Index>(i));
    }
    for (std::size_t i = keep; i < nonzero; ++i) {
        const double s = sigma(static_cast<Eigen::Index>(i));
        out.discarded_sq += s * s;
    }

    for (Eigen::Index c = 0; c < out.u.cols(); ++c) {
        for (Eigen::Index r = 0; r < out.u.rows(); ++r) {
            const double v = out.u(r, c);
            if (std::abs(v) > 1e-12) {
                if (v < 0) {
                    out.u.col(c) *= -1.0;
                    out.vt.row(c) *= -1.0;
                }
                break;
            }
        }
    }
    return out;
}

DenseTensor axis_transpose(const DenseTensor &t, std::span<const std::size_t> order) {
    const std::size_t rank = t.rank();
    require(order.size() == rank, "axis order length does not match tensor rank");
    std::vector<bool> seen(rank, false);
    for (std::size_t axis : order) {
        require(axis < rank && !seen[axis], "axis order is not a permutation");
        seen[axis] = true;
    }

    const auto &shape = t.shape();
    std::vector<std::size_t> in_strides(rank, 1);
    for (std::size_t k = rank; k-- > 1;) {
        in_strides[k - 1] = in_strides[k] * shape[k];
    }
    std::vector<std::size_t> out_shape(rank);
    std::vector<std::size_t> step(rank);
    for (std::size_t j = 0; j < rank; ++j) {
        out_shape[j] = shape[order[j]];
        step[j] = in_strides[order[j]];
    }

    // Odometer over output indices, tracking the matching input offset.
    const auto &src = t.data();
    std::vector<double> out(src.size());
    std::vector<std::size_t> idx(rank, 0);
    std::size_t offset = 0;
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        out[flat] = src[offset];
        for (std::size_t j = rank; j-- > 0;) {
            if (++idx[j] < out_shape[j]) {
                offset += step[j];
                break;
            }
            offset -= step[j] * (out_shape[j] - 1);
            idx[j] = 0;
        }
    }
    return DenseTensor(std::move(out), std::move(out_shape));
}

double frobenius_distance(std::span<const double> a, std::span<const double> b) {
    require(a.size() == b.size(), "frobenius_distance: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

double frobenius_distance(const DenseTensor &a, const DenseTensor &b) {
    require(a.shape() == b.shape(), "frobenius_distance: shape mismatch");
    return frobenius_distance(std::span<const double>(a.data()), std::span<const double>(b.data()));
}

}  // namespace mpsperm
