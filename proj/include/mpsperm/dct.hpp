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
#include <vector>

#include "mpsperm/encoding.hpp"

namespace mpsperm {

/// Separable orthonormal 2-D DCT-II for a fixed image shape.
///
/// The 1-D basis is C[k][i] = s_k cos(pi (2i + 1) k / 2N) with s_0 = sqrt(1/N)
/// and s_k = sqrt(2/N) otherwise, so C is orthogonal and the transform
/// preserves the Frobenius norm. Tables are built once; a plan is immutable and
/// can be shared across threads.
class DctPlan {
   public:
    DctPlan(std::size_t height, std::size_t width);

    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }

    /// Coefficient (0, 0) is the DC term.
    ImageBuffer forward(const ImageBuffer &img) const;
    ImageBuffer inverse(const ImageBuffer &coeffs) const;

    /// N x N row-major basis matrix; row k is frequency k.
    static std::vector<double> basis(std::size_t n);

   private:
    ImageBuffer apply(const ImageBuffer &in, bool inverse) const;

    std::size_t height_;
    std::size_t width_;
    std::vector<double> col_basis_;  // height x height
    std::vector<double> row_basis_;  // width x width
};

ImageBuffer dct2(const ImageBuffer &img);
ImageBuffer idct2(const ImageBuffer &coeffs);

}  // namespace mpsperm
