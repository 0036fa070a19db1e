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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mpsperm/encoding.hpp"
#include "mpsperm/mps.hpp"

namespace mpsperm {

struct DatasetSlice {
    std::string name;
    std::vector<ImageBuffer> images;
    std::optional<std::vector<int>> labels;
    std::vector<std::filesystem::path> sources;
};

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path &path);
void write_file_bytes(const std::filesystem::path &path, const std::string &bytes);

/// IDX image container: magic 00 00 08 03, big-endian u32 count, rows, cols,
/// then count * rows * cols row-major u8 pixels.
std::vector<ImageBuffer> parse_idx_images(const std::vector<std::uint8_t> &bytes);
/// IDX label container: magic 00 00 08 01, big-endian u32 count, u8 labels.
std::vector<int> parse_idx_labels(const std::vector<std::uint8_t> &bytes);

DatasetSlice read_idx_images(const std::filesystem::path &path);
std::vector<int> read_idx_labels(const std::filesystem::path &path);
/// Images plus optional labels; throws InvalidInput if the counts differ.
DatasetSlice read_idx_dataset(const std::filesystem::path &images,
                              const std::optional<std::filesystem::path> &labels);

/// Binary (P5) or ASCII (P2) graymap; maxval up to 255.
ImageBuffer read_pgm(const std::filesystem::path &path);
/// P5, maxval 255; values rounded and clamped to [0, 255].
void write_pgm(const std::filesystem::path &path, const ImageBuffer &img);

enum class VectorFormat { Csv, Raw };

/// raw: "MPSVEC01", u32 little-endian count, then little-endian f64 values.
/// csv: decimal values separated by commas and/or newlines.
std::vector<double> parse_vector(const std::vector<std::uint8_t> &bytes, VectorFormat format);
std::string serialize_vector(const std::vector<double> &values, VectorFormat format);
std::vector<double> read_vector(const std::filesystem::path &path, VectorFormat format);
void write_vector(const std::filesystem::path &path, const std::vector<double> &values, VectorFormat format);

/// An MPS plus what is needed to undo the amplitude encoding.
struct StoredMps {
    Mps mps;
    double norm_scale = 1.0;
    std::size_t orig_height = 1;
    std::size_t orig_width = 0;
};

std::string mps_to_json(const StoredMps &stored);
StoredMps mps_from_json(const std::string &text);

struct RunReport {
    std::size_t n = 0;
    std::size_t chi = 0;
    QubitPermutation permutation = QubitPermutation::identity(0);
    double total_sq = 0.0;
    double frobenius_distance = 0.0;
    std::optional<double> frobenius_distance_renormalized;
    std::vector<CutRecord> per_cut;
    std::uint64_t visited_nodes = 0;
    std::uint64_t pushed_nodes = 0;
    std::uint64_t frontier_peak = 0;
    double wall_ms = 0.0;
    double norm_scale = 1.0;
    std::size_t orig_height = 1;
    std::size_t orig_width = 0;
    std::string input_sha256;
};

/// JSON object with keys in the fixed order n, chi, permutation, total_sq,
/// frobenius_distance, frobenius_distance_renormalized, per_cut, visited_nodes,
/// pushed_nodes, frontier_peak, wall_ms, norm_scale, orig_shape, input_sha256.
std::string report_to_json(const RunReport &report);
RunReport report_from_json(const std::string &text);
void write_report(const RunReport &report, const std::filesystem::path &path);

std::string sha256_hex(const std::vector<std::uint8_t> &bytes);

}  // namespace mpsperm
