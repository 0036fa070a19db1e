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

#include "mpsperm/encoding.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "mpsperm/error.hpp"

namespace mpsperm {

ImageBuffer::ImageBuffer(std::size_t h, std::size_t w, std::vector<double> px)
    : height(h), width(w), pixels(std::move(px)) {
    require(h >= 1 && w >= 1, "image extents must be positive");
    require(pixels.size() == h * w, "image pixel count does not match its shape");
}

EncodingRecord amplitude_encode_vector(std::span<const double> values) {
    require(!values.empty(), "cannot encode an empty vector");
    const std::size_t padded = std::max<std::size_t>(4, std::bit_ceil(values.size()));
    std::vector<double> raw(padded, 0.0);
    double sq = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        require(std::isfinite(values[i]), "input contains non-finite values");
        raw[i] = values[i];
        sq += values[i] * values[i];
    }
    if (!(sq > 0.0)) {
        fail(ErrorKind::Degenerate, "input is all zeros; its norm is undefined");
    }
    const double norm = std::sqrt(sq);
    for (double &v : raw) {
        v /= norm;
    }
    EncodingRecord rec{StateVector::from_amplitudes(std::move(raw)), norm, padded, 1, values.size()};
    return rec;
}

EncodingRecord amplitude_encode(const ImageBuffer &img) {
    for (double p : img.pixels) {
        require(p >= 0.0, "image pixels must be nonnegative");
    }
    EncodingRecord rec = amplitude_encode_vector(img.pixels);
    rec.orig_height = img.height;
    rec.orig_width = img.width;
    return rec;
}

std::vector<double> apply_permutation(std::span<const double> amplitudes, const QubitPermutation &p) {
    DenseTensor t = DenseTensor::qubits(amplitudes);
    require(t.rank() == p.size(), "permutation size " + std::to_string(p.size()) +
                                      " does not match qubit count " + std::to_string(t.rank()));
    return std::move(axis_transpose(t, p.map())).release();
}

StateVector apply_permutation(const StateVector &state, const QubitPermutation &p) {
    // Pure relabeling, so the norm check in from_amplitudes cannot drift.
    return StateVector::from_amplitudes(apply_permutation(std::span<const double>(state.amplitudes()), p));
}

ImageBuffer decode_to_image(std::span<const double> amplitudes, double norm_scale, std::size_t height,
                            std::size_t width) {
    require(height * width <= amplitudes.size(), "image shape " + std::to_string(height) + "x" +
                                                      std::to_string(width) + " exceeds state length");
    std::vector<double> px(height * width);
    for (std::size_t i = 0; i < px.size(); ++i) {
        px[i] = amplitudes[i] * norm_scale;
    }
    return ImageBuffer(height, width, std::move(px));
}

}  // namespace mpsperm
