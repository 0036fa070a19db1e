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

#include <random>

#include "mpsperm/encoding.hpp"
#include "mpsperm/error.hpp"
#include "test_util.hpp"

using namespace mpsperm;
using namespace mpsperm::testing;

namespace {

ImageBuffer random_image(std::size_t h, std::size_t w, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> px(0, 255);
    std::vector<double> pixels(h * w);
    for (double &p : pixels) {
        p = px(rng);
    }
    pixels[0] = 1.0;
    return ImageBuffer(h, w, std::move(pixels));
}

}  // namespace

TEST(amplitude_encode, three_four_five) {
    const EncodingRecord rec = amplitude_encode(ImageBuffer(2, 2, {3, 4, 0, 0}));
    EXPECT_EQ(rec.state.num_qubits(), 2u);
    EXPECT_DOUBLE_EQ(rec.norm_scale, 5.0);
    EXPECT_EQ(rec.state.amplitudes(), (std::vector<double>{0.6, 0.8, 0.0, 0.0}));
}

TEST(amplitude_encode, mnist_shape_pads_to_1024) {
    std::mt19937_64 rng(1);
    const EncodingRecord rec = amplitude_encode(random_image(28, 28, rng));
    EXPECT_EQ(rec.pad_to, 1024u);
    EXPECT_EQ(rec.state.num_qubits(), 10u);
    for (std::size_t i = 784; i < 1024; ++i) {
        EXPECT_EQ(rec.state[i], 0.0);
    }
}

TEST(amplitude_encode, single_pixel_is_basis_state) {
    std::vector<double> px(28 * 28, 0.0);
    px[0] = 255;
    const EncodingRecord rec = amplitude_encode(ImageBuffer(28, 28, px));
    EXPECT_EQ(rec.state[0], 1.0);
    for (std::size_t i = 1; i < rec.state.size(); ++i) {
        ASSERT_EQ(rec.state[i], 0.0);
    }
}

TEST(amplitude_encode, errors) {
    try {
        amplitude_encode(ImageBuffer(2, 2, {0, 0, 0, 0}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
    }
    EXPECT_THROW(amplitude_encode(ImageBuffer(1, 2, {1, -1})), Error);
}

TEST(amplitude_encode, vector_path_allows_negatives) {
    const std::vector<double> w{1.0, -2.0, 2.0};
    const EncodingRecord rec = amplitude_encode_vector(w);
    EXPECT_EQ(rec.pad_to, 4u);
    EXPECT_DOUBLE_EQ(rec.norm_scale, 3.0);
    EXPECT_EQ(rec.orig_height, 1u);
    EXPECT_EQ(rec.orig_width, 3u);
    EXPECT_NEAR(rec.state[1], -2.0 / 3.0, 1e-16);
}

TEST(amplitude_encode, scaled_data_reproduced) {
    std::mt19937_64 rng(2);
    const ImageBuffer img = random_image(5, 7, rng);
    const EncodingRecord rec = amplitude_encode(img);
    for (std::size_t i = 0; i < rec.pad_to; ++i) {
        const double raw = i < img.pixels.size() ? img.pixels[i] : 0.0;
        EXPECT_NEAR(rec.state[i] * rec.norm_scale, raw, 1e-12 * 255);
    }
}

TEST(amplitude_encode, deterministic) {
    std::mt19937_64 rng(3);
    const ImageBuffer img = random_image(28, 28, rng);
    EXPECT_EQ(amplitude_encode(img).state, amplitude_encode(img).state);
}

TEST(apply_permutation, identity) {
    std::mt19937_64 rng(4);
    const StateVector s = random_state(5, rng);
    EXPECT_EQ(apply_permutation(s, QubitPermutation::identity(5)), s);
}

TEST(apply_permutation, two_qubit_swap_follows_bit_convention) {
    // e1 has q0 = 0, q1 = 1; swapping the qubits gives bits (1, 0), i.e. e2.
    const StateVector e1 = StateVector::from_amplitudes({0, 1, 0, 0});
    const StateVector out = apply_permutation(e1, QubitPermutation({1, 0}));
    EXPECT_EQ(out.amplitudes(), (std::vector<double>{0, 0, 1, 0}));
}

TEST(apply_permutation, bit_level_oracle) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 6;
        const StateVector s = random_state(n, rng);
        const QubitPermutation p = random_permutation(n, rng);
        const StateVector out = apply_permutation(s, p);
        for (std::size_t i = 0; i < s.size(); ++i) {
            // New bit j (MSB first) is old qubit p[j]'s bit.
            std::size_t old = 0;
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t bit = (i >> (n - 1 - j)) & 1u;
                old |= bit << (n - 1 - p[j]);
            }
            ASSERT_EQ(out[i], s[old]);
        }
    }
}

TEST(apply_permutation, inverse_round_trip_and_norm) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 8;
        const StateVector s = random_state(n, rng);
        const QubitPermutation p = random_permutation(n, rng);
        const StateVector moved = apply_permutation(s, p);
        EXPECT_EQ(apply_permutation(moved, invert_permutation(p)), s);

        std::vector<double> a = s.amplitudes(), b = moved.amplitudes();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);  // pure relabeling, so the norm is preserved exactly
    }
}

TEST(apply_permutation, composition_homomorphism) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + trial % 6;
        const StateVector s = random_state(n, rng);
        const QubitPermutation p = random_permutation(n, rng);
        const QubitPermutation q = random_permutation(n, rng);
        EXPECT_EQ(apply_permutation(s, compose(p, q)), apply_permutation(apply_permutation(s, q), p));
    }
}

TEST(apply_permutation, size_mismatch) {
    EXPECT_THROW(apply_permutation(uniform_state(3), QubitPermutation::identity(4)), Error);
}

TEST(invert_permutation, cases) {
    EXPECT_EQ(invert_permutation(QubitPermutation::identity(5)), QubitPermutation::identity(5));
    EXPECT_EQ(invert_permutation(QubitPermutation({1, 2, 0})), QubitPermutation({2, 0, 1}));
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const QubitPermutation p = random_permutation(1 + trial % 10, rng);
        EXPECT_EQ(invert_permutation(invert_permutation(p)), p);
    }
}

TEST(qubit_permutation, parse_and_validate) {
    EXPECT_EQ(QubitPermutation::parse("3, 4,2,7,9,6,8,5,0,1").map(),
              (std::vector<std::size_t>{3, 4, 2, 7, 9, 6, 8, 5, 0, 1}));
    EXPECT_THROW(QubitPermutation::parse("0,0"), Error);
    EXPECT_THROW(QubitPermutation::parse("0,x"), Error);
    EXPECT_THROW(QubitPermutation({0, 2}), Error);
}

TEST(decode_to_image, round_trip) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const ImageBuffer img = random_image(3 + trial, 4 + trial, rng);
        const EncodingRecord rec = amplitude_encode(img);
        const ImageBuffer back = decode_to_image(rec.state.amplitudes(), rec.norm_scale, img.height, img.width);
        ASSERT_EQ(back.pixels.size(), img.pixels.size());
        for (std::size_t i = 0; i < img.pixels.size(); ++i) {
            EXPECT_NEAR(back.pixels[i], img.pixels[i], 1e-10);
        }
    }
}

TEST(decode_to_image, keeps_negative_values) {
    const ImageBuffer img = decode_to_image(std::vector<double>{0.5, -0.25, 0.1, 0.0}, 2.0, 1, 3);
    EXPECT_EQ(img.pixels, (std::vector<double>{1.0, -0.5, 0.2}));
}

TEST(decode_to_image, drops_padding_tail) {
    std::mt19937_64 rng(10);
    const ImageBuffer img = random_image(28, 28, rng);
    const EncodingRecord rec = amplitude_encode(img);
    std::vector<double> amps = rec.state.amplitudes();
    for (std::size_t i = 784; i < 1024; ++i) {
        amps[i] = 0.125;  // junk in the pad region must not leak into the image
    }
    const ImageBuffer back = decode_to_image(amps, rec.norm_scale, 28, 28);
    EXPECT_EQ(back.pixels.size(), 784u);
    for (std::size_t i = 0; i < 784; ++i) {
        EXPECT_NEAR(back.pixels[i], img.pixels[i], 1e-10);
    }
    EXPECT_THROW(decode_to_image(amps, 1.0, 32, 33), Error);
}
