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

#include "mpsperm/mps.hpp"
#include "mpsperm/permutation.hpp"

namespace mpsperm {

/// Row-major real image. Values are not clamped.
struct ImageBuffer {
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<double> pixels;

    ImageBuffer() = default;
    ImageBuffer(std::size_t h, std::size_t w, std::vector<double> px);

    double &at(std::size_t row, std::size_t col) { return pixels[row * width + col]; }
    double at(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
};

struct EncodingRecord {
    StateVector state;
    double norm_scale = 1.0;                 // L2 norm of the raw data before normalizing
    std::size_t pad_to = 0;                  // 2^n
    std::size_t orig_height = 1;             // 1 for plain vectors
    std::size_t orig_width = 0;              // vector length for plain vectors
};

/// Flattens row-major, zero-pads the tail to the next power of two (at least
/// 4) and normalizes. Pixels must be nonnegative and not all zero.
EncodingRecord amplitude_encode(const ImageBuffer &img);

/// Same padding and normalization for feature or weight vectors; negative
/// entries are allowed.
EncodingRecord amplitude_encode_vector(std::span<const double> values);

/// Reorders qubit axes: new axis j carries original qubit p[j].
std::vector<double> apply_permutation(std::span<const double> amplitudes, const QubitPermutation &p);
StateVector apply_permutation(const StateVector &state, const QubitPermutation &p);

/// Scales by norm_scale, drops the padding tail and reshapes row-major.
ImageBuffer decode_to_image(std::span<const double> amplitudes, double norm_scale, std::size_t height,
                            std::size_t width);

}  // namespace mpsperm
