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
#include <optional>
#include <string>
#include <vector>

#include "mpsperm/io.hpp"

namespace mpsperm {

struct BenchOptions {
    std::vector<std::size_t> chis;
    std::size_t sample = 0;  // per class when labelled, overall otherwise; 0 takes every image
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    bool timing = true;      // false writes 0 for every timing column
};

/// One image at one chi.
struct ImageOutcome {
    std::size_t index = 0;
    std::optional<int> label;
    std::size_t chi = 0;
    double std_sq = 0.0;      // ledger total, identity ordering
    double perm_sq = 0.0;     // search optimum
    double std_err = 0.0;     // Frobenius distance, identity ordering
    double perm_err = 0.0;    // Frobenius distance, searched ordering
    double dct_err = 0.0;     // Frobenius distance, DCT coefficients (dct runs only)
    std::uint64_t visited = 0;
    double ms = 0.0;
};

struct BenchRow {
    std::string dataset;
    std::string class_id;  // label or "all"
    std::size_t chi = 0;
    std::size_t n = 0;
    std::size_t samples = 0;
    double mean_std_err = 0.0;
    double std_std_err = 0.0;
    double mean_perm_err = 0.0;
    double std_perm_err = 0.0;
    double mean_dct_err = 0.0;
    double std_dct_err = 0.0;
    double mean_visited = 0.0;
    double mean_ms = 0.0;
};

struct BenchResult {
    std::vector<BenchRow> rows;
    std::vector<ImageOutcome> outcomes;  // chi-major, then image index
    std::size_t dominance_violations = 0;
};

/// Parses "a:b" (inclusive) or a single value.
std::vector<std::size_t> parse_chi_range(const std::string &text);

/// Seeded Fisher-Yates over image indices (mt19937_64 with rejection sampling,
/// so the order does not depend on the standard library), then the first
/// `sample` images of each class in that order. Returned ascending.
std::vector<std::size_t> sample_indices(const DatasetSlice &slice, std::size_t sample, std::uint64_t seed);

/// Standard encoding vs searched permutation for every sampled image and chi.
/// Rows: one "all" row per chi, then one per class when labels exist.
BenchResult run_benchmark(const DatasetSlice &slice, const BenchOptions &options);

/// Standard encoding vs DCT-then-encode (identity ordering in both).
BenchResult run_dct_compare(const DatasetSlice &slice, const BenchOptions &options);

/// Header dataset,class,chi,n,samples,mean_std_err,std_std_err,mean_perm_err,
/// std_perm_err,mean_visited,mean_ms.
std::string bench_csv(const std::vector<BenchRow> &rows);

/// Header dataset,class,chi,n,samples,mean_std_err,std_std_err,mean_dct_err,
/// std_dct_err,mean_ms.
std::string dct_csv(const std::vector<BenchRow> &rows);

}  // namespace mpsperm
