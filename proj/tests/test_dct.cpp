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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mpsperm/dct.hpp"
#include "test_util.hpp"

using namespace mpsperm;
using namespace mpsperm::testing;

namespace {

ImageBuffer random_buffer(std::size_t h, std::size_t w, std::mt19937_64 &rng) {
    return ImageBuffer(h, w, random_values(h * w, rng));
}

double fro(const ImageBuffer &img) {
    double acc = 0.0;
    for (double v : img.pixels) {
        acc += v * v;
    }
    return std::sqrt(acc);
}

}  // namespace

TEST(dct2, constant_image_is_dc_only) {
    const double c = 3.5;
    const ImageBuffer out = dct2(ImageBuffer(4, 6, std::vector<double>(24, c)));
    EXPECT_NEAR(out.at(0, 0), c * std::sqrt(24.0), 1e-12);
    for (std::size_t i = 1; i < out.pixels.size(); ++i) {
        EXPECT_NEAR(out.pixels[i], 0.0, 1e-12);
    }
}

TEST(dct2, basis_function_maps_to_unit_coefficient) {
    const std::size_t h = 8, w = 12;
    auto scale = [](std::size_t k, std::size_t n) { return k == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n); };
    for (const auto &[kr, kc] : std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 0}, {3, 5}, {7, 11}}) {
        ImageBuffer img(h, w, std::vector<double>(h * w));
        for (std::size_t i = 0; i < h; ++i) {
            for (std::size_t j = 0; j < w; ++j) {
                img.at(i, j) = scale(kr, h) * std::cos(std::numbers::pi * (2.0 * i + 1) * kr / (2.0 * h)) *
                               scale(kc, w) * std::cos(std::numbers::pi * (2.0 * j + 1) * kc / (2.0 * w));
            }
        }
        const ImageBuffer out = dct2(img);
        for (std::size_t r = 0; r < h; ++r) {
            for (std::size_t c = 0; c < w; ++c) {
                EXPECT_NEAR(out.at(r, c), (r == kr && c == kc) ? 1.0 : 0.0, 1e-12);
            }
        }
    }
}

TEST(dct2, preserves_frobenius_norm) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const ImageBuffer x = random_buffer(28, 28, rng);
        EXPECT_NEAR(fro(dct2(x)), fro(x), 1e-12);
    }
}

TEST(idct2, round_trip) {
    std::mt19937_64 rng(2);
    const DctPlan plan(28, 28);
    for (int trial = 0; trial < 20; ++trial) {
        const ImageBuffer x = random_buffer(28, 28, rng);
        const ImageBuffer back = plan.inverse(plan.forward(x));
        for (std::size_t i = 0; i < x.pixels.size(); ++i) {
            EXPECT_NEAR(back.pixels[i], x.pixels[i], 1e-12);
        }
    }
}

TEST(idct2, dc_only_gives_constant) {
    ImageBuffer coeffs(5, 7, std::vector<double>(35, 0.0));
    coeffs.at(0, 0) = std::sqrt(35.0) * 2.0;
    for (double v : idct2(coeffs).pixels) {
        EXPECT_NEAR(v, 2.0, 1e-12);
    }
}

TEST(idct2, linear) {
    std::mt19937_64 rng(3);
    const ImageBuffer a = random_buffer(9, 4, rng);
    const ImageBuffer b = random_buffer(9, 4, rng);
    ImageBuffer sum = a;
    for (std::size_t i = 0; i < sum.pixels.size(); ++i) {
        sum.pixels[i] += b.pixels[i];
    }
    const ImageBuffer ia = idct2(a), ib = idct2(b), is = idct2(sum);
    for (std::size_t i = 0; i < is.pixels.size(); ++i) {
        EXPECT_NEAR(is.pixels[i], ia.pixels[i] + ib.pixels[i], 1e-12);
    }
}

TEST(dct_plan, basis_is_orthogonal) {
    for (std::size_t n = 1; n <= 32; ++n) {
        const auto c = DctPlan::basis(n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    dot += c[a * n + i] * c[b * n + i];
                }
                ASSERT_NEAR(dot, a == b ? 1.0 : 0.0, 1e-12) << "n=" << n;
            }
        }
    }
}

TEST(dct_plan, rejects_other_shapes) {
    const DctPlan plan(4, 4);
    EXPECT_THROW(plan.forward(ImageBuffer(4, 5, std::vector<double>(20))), std::exception);
}

TEST(dct_encoding, constant_image_is_a_basis_state) {
    const ImageBuffer coeffs = dct2(ImageBuffer(28, 28, std::vector<double>(784, 17.0)));
    const EncodingRecord rec = amplitude_encode_vector(coeffs.pixels);
    const MpsEncoding enc = mps_svd(rec.state, 1);
    EXPECT_LT(enc.ledger.total_sq, 1e-20);
    EXPECT_LT(frobenius_distance(rec.state.amplitudes(), reconstruct(enc.mps)), 1e-10);
}
