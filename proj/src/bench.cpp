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

#include "mpsperm/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "mpsperm/dct.hpp"
#include "mpsperm/encoding.hpp"
#include "mpsperm/error.hpp"
#include "mpsperm/search.hpp"

namespace mpsperm {

namespace {

std::uint64_t bounded(std::mt19937_64 &rng, std::uint64_t bound) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

double reconstruction_error(const StateVector &state, std::size_t chi) {
    const MpsEncoding enc = mps_svd(state, chi);
    return frobenius_distance(state.amplitudes(), reconstruct(enc.mps));
}

void for_each_index(std::size_t count, std::size_t threads, const std::function<void(std::size_t)> &work) {
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            work(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!first_error) {
                        first_error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

struct Moments {
    double mean = 0.0;
    double stddev = 0.0;
};

// Population moments, summed in the order given.
Moments moments(const std::vector<double> &values) {
    Moments m;
    if (values.empty()) {
        return m;
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    m.mean = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) {
        sq += (v - m.mean) * (v - m.mean);
    }
    m.stddev = std::sqrt(sq / static_cast<double>(values.size()));
    return m;
}

BenchRow aggregate(const std::string &dataset, const std::string &class_id, std::size_t chi, std::size_t n,
                   const std::vector<const ImageOutcome *> &group) {
    std::vector<double> std_err, perm_err, dct_err, visited, ms;
    for (const ImageOutcome *o : group) {
        std_err.push_back(o->std_err);
        perm_err.push_back(o->perm_err);
        dct_err.push_back(o->dct_err);
        visited.push_back(static_cast<double>(o->visited));
        ms.push_back(o->ms);
    }
    BenchRow row;
    row.dataset = dataset;
    row.class_id = class_id;
    row.chi = chi;
    row.n = n;
    row.samples = group.size();
    const Moments s = moments(std_err);
    const Moments p = moments(perm_err);
    const Moments d = moments(dct_err);
    row.mean_std_err = s.mean;
    row.std_std_err = s.stddev;
    row.mean_perm_err = p.mean;
    row.std_perm_err = p.stddev;
    row.mean_dct_err = d.mean;
    row.std_dct_err = d.stddev;
    row.mean_visited = moments(visited).mean;
    row.mean_ms = moments(ms).mean;
    return row;
}

std::vector<BenchRow> aggregate_rows(const DatasetSlice &slice, const std::vector<std::size_t> &chis, std::size_t n,
                                     const std::vector<ImageOutcome> &outcomes, std::size_t per_chi) {
    std::vector<BenchRow> rows;
    for (std::size_t c = 0; c < chis.size(); ++c) {
        std::vector<const ImageOutcome *> all;
        std::map<int, std::vector<const ImageOutcome *>> by_class;
        for (std::size_t i = 0; i < per_chi; ++i) {
            const ImageOutcome &o = outcomes[c * per_chi + i];
            all.push_back(&o);
            if (o.label) {
                by_class[*o.label].push_back(&o);
            }
        }
        rows.push_back(aggregate(slice.name, "all", chis[c], n, all));
        for (const auto &[label, group] : by_class) {
            rows.push_back(aggregate(slice.name, std::to_string(label), chis[c], n, group));
        }
    }
    return rows;
}

std::string num(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 10);
    return std::string(buf, ptr);
}

std::string fixed3(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

template <typename Work>
BenchResult run(const DatasetSlice &slice, const BenchOptions &options, Work &&work) {
    require(!slice.images.empty(), "dataset slice is empty");
    require(!options.chis.empty(), "no bond dimensions requested");
    const auto picked = sample_indices(slice, options.sample, options.seed);
    require(!picked.empty(), "sampling selected no images");

    const std::size_t per_chi = picked.size();
    BenchResult result;
    result.outcomes.resize(options.chis.size() * per_chi);
    std::vector<std::size_t> qubits(per_chi, 0);
    for_each_index(per_chi, options.threads, [&](std::size_t i) {
        const std::size_t index = picked[i];
        const EncodingRecord rec = amplitude_encode(slice.images[index]);
        qubits[i] = rec.state.num_qubits();
        for (std::size_t c = 0; c < options.chis.size(); ++c) {
            ImageOutcome &o = result.outcomes[c * per_chi + i];
            o.index = index;
            if (slice.labels) {
                o.label = (*slice.labels)[index];
            }
            o.chi = options.chis[c];
            work(slice.images[index], rec, o);
            if (!options.timing) {
                o.ms = 0.0;
            }
        }
    });
    for (std::size_t i = 1; i < per_chi; ++i) {
        require(qubits[i] == qubits[0], "images in one benchmark must share a padded size");
    }
    for (const auto &o : result.outcomes) {
        if (o.perm_sq > o.std_sq + 1e-12) {
            ++result.dominance_violations;
        }
    }
    result.rows = aggregate_rows(slice, options.chis, qubits[0], result.outcomes, per_chi);
    return result;
}

}  // namespace

std::vector<std::size_t> parse_chi_range(const std::string &text) {
    auto parse_one = [&](std::string_view s) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        require(ec == std::errc() && ptr == s.data() + s.size() && v >= 1,
                "bad bond dimension '" + std::string(s) + "'");
        return v;
    };
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        return {parse_one(text)};
    }
    const std::size_t lo = parse_one(std::string_view(text).substr(0, colon));
    const std::size_t hi = parse_one(std::string_view(text).substr(colon + 1));
    require(lo <= hi, "empty bond dimension range '" + text + "'");
    std::vector<std::size_t> out;
    for (std::size_t c = lo; c <= hi; ++c) {
        out.push_back(c);
    }
    return out;
}

std::vector<std::size_t> sample_indices(const DatasetSlice &slice, std::size_t sample, std::uint64_t seed) {
    const std::size_t count = slice.images.size();
    if (sample == 0) {
        std::vector<std::size_t> all(count);
        for (std::size_t i = 0; i < count; ++i) {
            all[i] = i;
        }
        return all;
    }
    std::vector<std::size_t> order(count);
    for (std::size_t i = 0; i < count; ++i) {
        order[i] = i;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = count; i > 1; --i) {
        std::swap(order[i - 1], order[bounded(rng, i)]);
    }
    std::vector<std::size_t> picked;
    std::map<int, std::size_t> taken;
    for (std::size_t idx : order) {
        const int label = slice.labels ? (*slice.labels)[idx] : 0;
        if (taken[label] < sample) {
            ++taken[label];
            picked.push_back(idx);
        }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

BenchResult run_benchmark(const DatasetSlice &slice, const BenchOptions &options) {
    return run(slice, options, [](const ImageBuffer &, const EncodingRecord &rec, ImageOutcome &o) {
        const StateVector &state = rec.state;
        const MpsEncoding standard = mps_svd(state, o.chi);
        o.std_sq = standard.ledger.total_sq;
        o.std_err = frobenius_distance(state.amplitudes(), reconstruct(standard.mps));

        const auto t0 = std::chrono::steady_clock::now();
        const SearchResult found = search_optimal_permutation(state, o.chi);
        o.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        o.perm_sq = found.total_sq;
        o.visited = found.visited_nodes;
        o.perm_err = reconstruction_error(apply_permutation(state, found.permutation), o.chi);
    });
}

BenchResult run_dct_compare(const DatasetSlice &slice, const BenchOptions &options) {
    return run(slice, options, [](const ImageBuffer &img, const EncodingRecord &rec, ImageOutcome &o) {
        const MpsEncoding standard = mps_svd(rec.state, o.chi);
        o.std_sq = standard.ledger.total_sq;
        o.std_err = frobenius_distance(rec.state.amplitudes(), reconstruct(standard.mps));

        const auto t0 = std::chrono::steady_clock::now();
        const EncodingRecord coeffs = amplitude_encode_vector(dct2(img).pixels);
        o.dct_err = reconstruction_error(coeffs.state, o.chi);
        o.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        // No search in this mode; keep the dominance bookkeeping neutral.
        o.perm_sq = o.std_sq;
        o.perm_err = o.std_err;
    });
}

std::string bench_csv(const std::vector<BenchRow> &rows) {
    std::string out = "dataset,class,chi,n,samples,mean_std_err,std_std_err,mean_perm_err,std_perm_err,mean_visited,mean_ms\n";
    for (const auto &r : rows) {
        out += r.dataset + "," + r.class_id + "," + std::to_string(r.chi) + "," + std::to_string(r.n) + "," +
               std::to_string(r.samples) + "," + num(r.mean_std_err) + "," + num(r.std_std_err) + "," +
               num(r.mean_perm_err) + "," + num(r.std_perm_err) + "," + num(r.mean_visited) + "," +
               fixed3(r.mean_ms) + "\n";
    }
    return out;
}

std::string dct_csv(const std::vector<BenchRow> &rows) {
    std::string out = "dataset,class,chi,n,samples,mean_std_err,std_std_err,mean_dct_err,std_dct_err,mean_ms\n";
    for (const auto &r : rows) {
        out += r.dataset + "," + r.class_id + "," + std::to_string(r.chi) + "," + std::to_string(r.n) + "," +
               std::to_string(r.samples) + "," + num(r.mean_std_err) + "," + num(r.std_std_err) + "," +
               num(r.mean_dct_err) + "," + num(r.std_dct_err) + "," + fixed3(r.mean_ms) + "\n";
    }
    return out;
}

}  // namespace mpsperm
