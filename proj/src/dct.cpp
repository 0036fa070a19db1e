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

#include "mpsperm/dct.hpp"

#include <cmath>
#include <numbers>

#include "mpsperm/error.hpp"

namespace mpsperm {

std::vector<double> DctPlan::basis(std::size_t n) {
    require(n >= 1, "DCT length must be positive");
    std::vector<double> c(n * n);
    const double dn = static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double scale = k == 0 ? std::sqrt(1.0 / dn) : std::sqrt(2.0 / dn);
        for (std::size_t i = 0; i < n; ++i) {
            c[k * n + i] = scale * std::cos(std::numbers::pi * (2.0 * static_cast<double>(i) + 1.0) *
                                            static_cast<double>(k) / (2.0 * dn));
        }
    }
    return c;
}

DctPlan::DctPlan(std::size_t height, std::size_t width)
    : height_(height), width_(width), col_basis_(basis(height)), row_basis_(basis(width)) {}

ImageBuffer DctPlan::forward(const ImageBuffer &img) const { return apply(img, false); }

ImageBuffer DctPlan::inverse(const ImageBuffer &coeffs) const { return apply(coeffs, true); }

ImageBuffer DctPlan::apply(const ImageBuffer &in, bool inverse) const {
    require(in.height == height_ && in.width == width_, "image shape does not match the DCT plan");
    const std::size_t h = height_;
    const std::size_t w = width_;

    // Forward: Y = C_h X C_w^T.  Inverse: X = C_h^T Y C_w.
    std::vector<double> tmp(h * w, 0.0);
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t k = 0; k < w; ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < w; ++i) {
                const double b = inverse ? row_basis_[i * w + k] : row_basis_[k * w + i];
                acc += in.pixels[r * w + i] * b;
            }
            tmp[r * w + k] = acc;
        }
    }
    std::vector<double> out(h * w, 0.0);
    for (std::size_t k = 0; k < h; ++k) {
        for (std::size_t c = 0; c < w; ++c) {
            double acc = 0.0;
            for (std::size_t i = 0; i < h; ++i) {
                const double b = inverse ? col_basis_[i * h + k] : col_basis_[k * h + i];
                acc += b * tmp[i * w + c];
            }
            out[k * w + c] = acc;
        }
    }
    return ImageBuffer(h, w, std::move(out));
}

ImageBuffer dct2(const ImageBuffer &img) { return DctPlan(img.height, img.width).forward(img); }

ImageBuffer idct2(const ImageBuffer &coeffs) { return DctPlan(coeffs.height, coeffs.width).inverse(coeffs); }

}  // namespace mpsperm
