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

#include <filesystem>
#include <random>

#include "json.hpp"
#include "mpsperm/error.hpp"
#include "mpsperm/io.hpp"
#include "mpsperm/search.hpp"
#include "test_util.hpp"

using namespace mpsperm;
using namespace mpsperm::testing;

namespace {

std::vector<std::uint8_t> two_image_fixture() {
    return {0x00, 0x00, 0x08, 0x03,  // magic
            0x00, 0x00, 0x00, 0x02,  // count
            0x00, 0x00, 0x00, 0x02,  // rows
            0x00, 0x00, 0x00, 0x02,  // cols
            0,    10,   20,   255,   // image 0
            1,    2,    3,    4};    // image 1
}

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an mpsperm::Error";
    return ErrorKind::InvalidInput;
}

class TempDir : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("mpsperm_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::filesystem::path dir_;
};

}  // namespace

TEST(idx, parses_two_image_fixture) {
    const auto images = parse_idx_images(two_image_fixture());
    ASSERT_EQ(images.size(), 2u);
    EXPECT_EQ(images[0].height, 2u);
    EXPECT_EQ(images[0].width, 2u);
    EXPECT_EQ(images[0].pixels, (std::vector<double>{0, 10, 20, 255}));
    EXPECT_EQ(images[1].pixels, (std::vector<double>{1, 2, 3, 4}));
}

TEST(idx, label_magic_is_rejected_for_images) {
    auto bytes = two_image_fixture();
    bytes[3] = 0x01;
    try {
        parse_idx_images(bytes);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::Format);
        EXPECT_NE(std::string(e.what()).find("00 00 08 03"), std::string::npos);
    }
}

TEST(idx, count_past_payload_is_a_length_error) {
    auto bytes = two_image_fixture();
    bytes[7] = 3;
    EXPECT_EQ(kind_of([&] { parse_idx_images(bytes); }), ErrorKind::Length);
    bytes.resize(10);
    EXPECT_EQ(kind_of([&] { parse_idx_images(bytes); }), ErrorKind::Length);
}

TEST(idx, labels) {
    const std::vector<std::uint8_t> bytes{0, 0, 8, 1, 0, 0, 0, 3, 7, 0, 9};
    EXPECT_EQ(parse_idx_labels(bytes), (std::vector<int>{7, 0, 9}));
    auto wrong = bytes;
    wrong[3] = 3;
    EXPECT_EQ(kind_of([&] { parse_idx_labels(wrong); }), ErrorKind::Format);
    auto short_payload = bytes;
    short_payload.pop_back();
    EXPECT_EQ(kind_of([&] { parse_idx_labels(short_payload); }), ErrorKind::Length);
}

TEST(vector_io, raw_round_trip_is_bit_exact) {
    std::mt19937_64 rng(1);
    auto values = random_values(64, rng);
    values[3] = -0.0;
    values[5] = 1e-310;  // subnormal
    const std::string bytes = serialize_vector(values, VectorFormat::Raw);
    EXPECT_EQ(bytes.size(), 12u + 64 * 8);
    const auto back = parse_vector({bytes.begin(), bytes.end()}, VectorFormat::Raw);
    ASSERT_EQ(back.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        EXPECT_EQ(std::bit_cast<std::uint64_t>(back[i]), std::bit_cast<std::uint64_t>(values[i]));
    }
}

TEST(vector_io, raw_header_layout) {
    const std::string bytes = serialize_vector({1.0}, VectorFormat::Raw);
    EXPECT_EQ(bytes.substr(0, 8), "MPSVEC01");
    EXPECT_EQ(bytes.substr(8, 4), std::string("\x01\x00\x00\x00", 4));
    EXPECT_EQ(bytes.substr(12), std::string("\x00\x00\x00\x00\x00\x00\xf0\x3f", 8));
}

TEST(vector_io, raw_errors) {
    std::string bytes = serialize_vector({1.0, 2.0}, VectorFormat::Raw);
    bytes[7] = '2';
    EXPECT_EQ(kind_of([&] { parse_vector({bytes.begin(), bytes.end()}, VectorFormat::Raw); }), ErrorKind::Format);
    bytes[7] = '1';
    bytes.pop_back();
    EXPECT_EQ(kind_of([&] { parse_vector({bytes.begin(), bytes.end()}, VectorFormat::Raw); }), ErrorKind::Length);
}

TEST(vector_io, csv) {
    const std::string text = "1.0, 2.0\n3.0";
    EXPECT_EQ(parse_vector({text.begin(), text.end()}, VectorFormat::Csv), (std::vector<double>{1, 2, 3}));
    const std::string trailing = "4,\r\n-5.5e-1\n\n";
    EXPECT_EQ(parse_vector({trailing.begin(), trailing.end()}, VectorFormat::Csv), (std::vector<double>{4, -0.55}));
    const std::string bad = "1.0, two";
    EXPECT_EQ(kind_of([&] { parse_vector({bad.begin(), bad.end()}, VectorFormat::Csv); }), ErrorKind::Format);

    std::mt19937_64 rng(2);
    const auto values = random_values(20, rng);
    const std::string out = serialize_vector(values, VectorFormat::Csv);
    EXPECT_EQ(parse_vector({out.begin(), out.end()}, VectorFormat::Csv), values);
}

TEST_F(TempDir, files_and_pgm) {
    const ImageBuffer img(2, 3, {0, 12.4, 300, -5, 128, 255});
    write_pgm(dir_ / "a.pgm", img);
    const ImageBuffer back = read_pgm(dir_ / "a.pgm");
    EXPECT_EQ(back.height, 2u);
    EXPECT_EQ(back.width, 3u);
    EXPECT_EQ(back.pixels, (std::vector<double>{0, 12, 255, 0, 128, 255}));

    write_file_bytes(dir_ / "b.pgm", "P2\n# comment\n2 1\n255\n7 9\n");
    EXPECT_EQ(read_pgm(dir_ / "b.pgm").pixels, (std::vector<double>{7, 9}));

    write_vector(dir_ / "v.raw", {1.5, -2.5}, VectorFormat::Raw);
    EXPECT_EQ(read_vector(dir_ / "v.raw", VectorFormat::Raw), (std::vector<double>{1.5, -2.5}));

    EXPECT_EQ(kind_of([&] { read_file_bytes(dir_ / "missing.bin"); }), ErrorKind::Io);
    EXPECT_EQ(kind_of([&] { write_file_bytes(dir_ / "no" / "such" / "dir.txt", "x"); }), ErrorKind::Io);
}

TEST_F(TempDir, dataset_with_labels) {
    const auto img = two_image_fixture();
    write_file_bytes(dir_ / "img.idx", std::string(img.begin(), img.end()));
    write_file_bytes(dir_ / "lab.idx", std::string("\x00\x00\x08\x01\x00\x00\x00\x02\x04\x09", 10));
    const DatasetSlice slice = read_idx_dataset(dir_ / "img.idx", dir_ / "lab.idx");
    EXPECT_EQ(slice.name, "img");
    ASSERT_TRUE(slice.labels.has_value());
    EXPECT_EQ(*slice.labels, (std::vector<int>{4, 9}));

    write_file_bytes(dir_ / "lab3.idx", std::string("\x00\x00\x08\x01\x00\x00\x00\x01\x04", 9));
    EXPECT_THROW(read_idx_dataset(dir_ / "img.idx", dir_ / "lab3.idx"), Error);
}

TEST(mps_json, round_trip) {
    std::mt19937_64 rng(3);
    const StateVector s = random_state(6, rng);
    const QubitPermutation p({2, 0, 5, 1, 4, 3});
    const MpsEncoding enc = mps_svd(apply_permutation(s, p), 2, &p);
    const StoredMps stored{enc.mps, 4.25, 2, 32};
    const std::string text = mps_to_json(stored);

    const auto j = nlohmann::ordered_json::parse(text);
    std::vector<std::string> keys;
    for (const auto &item : j.items()) {
        keys.push_back(item.key());
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"n", "chi", "perm", "norm_scale", "orig_shape", "cores"}));

    const StoredMps back = mps_from_json(text);
    EXPECT_EQ(back.mps.perm, p);
    EXPECT_EQ(back.mps.chi, 2u);
    EXPECT_EQ(back.norm_scale, 4.25);
    EXPECT_EQ(back.orig_width, 32u);
    EXPECT_EQ(reconstruct(back.mps), reconstruct(enc.mps));
}

TEST(mps_json, rejects_malformed) {
    EXPECT_EQ(kind_of([] { mps_from_json("{not json"); }), ErrorKind::Format);
    const std::string bad_bond =
        R"({"n":2,"chi":1,"perm":[0,1],"norm_scale":1,"orig_shape":[1,4],)"
        R"("cores":[{"left":1,"phys":2,"right":2,"data":[1,0,0,0]},{"left":1,"phys":2,"right":1,"data":[1,0]}]})";
    EXPECT_EQ(kind_of([&] { mps_from_json(bad_bond); }), ErrorKind::Format);
}

TEST(report, key_order_and_round_trip) {
    const StateVector s = double_bell();
    const SearchResult found = search_optimal_permutation(s, 2);
    const MpsEncoding enc = mps_svd(apply_permutation(s, found.permutation), 2, &found.permutation);

    RunReport r;
    r.n = 4;
    r.chi = 2;
    r.permutation = found.permutation;
    r.total_sq = enc.ledger.total_sq;
    r.frobenius_distance = std::sqrt(enc.ledger.total_sq);
    r.per_cut = enc.ledger.per_cut;
    r.visited_nodes = found.visited_nodes;
    r.pushed_nodes = found.pushed_nodes;
    r.frontier_peak = found.frontier_peak;
    r.norm_scale = 2.0;
    r.orig_width = 16;
    r.input_sha256 = sha256_hex({});
    const std::string text = report_to_json(r);

    const auto j = nlohmann::ordered_json::parse(text);
    std::vector<std::string> keys;
    for (const auto &item : j.items()) {
        keys.push_back(item.key());
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"n", "chi", "permutation", "total_sq", "frobenius_distance",
                                              "frobenius_distance_renormalized", "per_cut", "visited_nodes",
                                              "pushed_nodes", "frontier_peak", "wall_ms", "norm_scale",
                                              "orig_shape", "input_sha256"}));
    EXPECT_TRUE(j["frobenius_distance_renormalized"].is_null());

    const RunReport back = report_from_json(text);
    EXPECT_EQ(back.permutation, r.permutation);
    EXPECT_NEAR(back.total_sq, 0.0, 1e-12);
    EXPECT_EQ(back.per_cut.size(), r.per_cut.size());
    const std::set<std::size_t> block{back.permutation[0], back.permutation[1]};
    EXPECT_TRUE(block == std::set<std::size_t>({0, 2}) || block == std::set<std::size_t>({1, 3}));

    auto reordered = j;
    reordered.erase("wall_ms");
    reordered["wall_ms"] = 0.0;
    EXPECT_THROW(report_from_json(reordered.dump()), Error);
}

TEST(sha256, known_vectors) {
    EXPECT_EQ(sha256_hex({}), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    EXPECT_EQ(sha256_hex({'a', 'b', 'c'}), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
