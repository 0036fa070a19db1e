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

// Command-line front end: encode, search, reconstruct, bench, dct, swaps.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mpsperm/bench.hpp"
#include "mpsperm/encoding.hpp"
#include "mpsperm/error.hpp"
#include "mpsperm/io.hpp"
#include "mpsperm/mps.hpp"
#include "mpsperm/search.hpp"
#include "mpsperm/swaps.hpp"

namespace {

using namespace mpsperm;

struct EncodeArgs {
    std::string input;
    std::string format;
    std::size_t index = 0;
    std::size_t chi = 2;
    bool renormalize = false;
    bool recompute = false;
    std::string report;
    std::string mps_out;
};

struct BenchArgs {
    std::string images;
    std::string labels;
    std::string chi;
    std::size_t sample = 0;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    bool no_timing = false;
    std::string out;
};

EncodingRecord load_input(const EncodeArgs &args, const std::vector<std::uint8_t> &bytes) {
    if (args.format == "idx") {
        const auto images = parse_idx_images(bytes);
        require(args.index < images.size(), "--index " + std::to_string(args.index) + " is past the " +
                                                std::to_string(images.size()) + " images in the file");
        return amplitude_encode(images[args.index]);
    }
    if (args.format == "pgm") {
        return amplitude_encode(read_pgm(args.input));
    }
    const auto values = parse_vector(bytes, args.format == "raw" ? VectorFormat::Raw : VectorFormat::Csv);
    return amplitude_encode_vector(values);
}

int run_encode(const EncodeArgs &args, bool search) {
    const auto bytes = read_file_bytes(args.input);
    const EncodingRecord rec = load_input(args, bytes);
    const StateVector &state = rec.state;
    const std::size_t n = state.num_qubits();

    RunReport report;
    report.n = n;
    report.chi = args.chi;
    report.permutation = QubitPermutation::identity(n);
    report.norm_scale = rec.norm_scale;
    report.orig_height = rec.orig_height;
    report.orig_width = rec.orig_width;
    report.input_sha256 = sha256_hex(bytes);

    const auto t0 = std::chrono::steady_clock::now();
    if (search) {
        SearchOptions opts;
        opts.recompute = args.recompute;
        const SearchResult found = search_optimal_permutation(state, args.chi, opts);
        report.permutation = found.permutation;
        report.visited_nodes = found.visited_nodes;
        report.pushed_nodes = found.pushed_nodes;
        report.frontier_peak = found.frontier_peak;
    }
    const StateVector permuted = apply_permutation(state, report.permutation);
    const MpsEncoding enc = mps_svd(permuted, args.chi, &report.permutation);
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    const std::vector<double> approx = reconstruct(enc.mps);
    report.total_sq = enc.ledger.total_sq;
    report.per_cut = enc.ledger.per_cut;
    report.frobenius_distance = frobenius_distance(permuted.amplitudes(), approx);
    if (args.renormalize) {
        report.frobenius_distance_renormalized =
            frobenius_distance(permuted.amplitudes(), StateVector::normalized(approx).amplitudes());
    }
    write_report(report, args.report);
    if (!args.mps_out.empty()) {
        write_file_bytes(args.mps_out, mps_to_json(StoredMps{enc.mps, rec.norm_scale, rec.orig_height, rec.orig_width}));
    }
    std::cout << "n=" << n << " chi=" << args.chi << " perm=" << report.permutation.to_string()
              << " total_sq=" << report.total_sq << " distance=" << report.frobenius_distance << "\n";
    return 0;
}

int run_reconstruct(const std::string &mps_path, const std::string &out_path) {
    const auto bytes = read_file_bytes(mps_path);
    const StoredMps stored = mps_from_json(std::string(bytes.begin(), bytes.end()));
    const std::vector<double> approx = reconstruct(stored.mps);
    const std::vector<double> original_order = apply_permutation(approx, invert_permutation(stored.mps.perm));
    const ImageBuffer img =
        decode_to_image(original_order, stored.norm_scale, stored.orig_height, stored.orig_width);

    const std::string ext = std::filesystem::path(out_path).extension().string();
    if (ext == ".pgm") {
        write_pgm(out_path, img);
    } else {
        write_vector(out_path, img.pixels, ext == ".csv" ? VectorFormat::Csv : VectorFormat::Raw);
    }
    return 0;
}

BenchOptions bench_options(const BenchArgs &args) {
    BenchOptions opts;
    opts.chis = parse_chi_range(args.chi);
    opts.sample = args.sample;
    opts.seed = args.seed;
    opts.threads = args.threads;
    opts.timing = !args.no_timing;
    return opts;
}

DatasetSlice load_slice(const BenchArgs &args) {
    std::optional<std::filesystem::path> labels;
    if (!args.labels.empty()) {
        labels = args.labels;
    }
    return read_idx_dataset(args.images, labels);
}

int run_bench(const BenchArgs &args) {
    const BenchResult result = run_benchmark(load_slice(args), bench_options(args));
    write_file_bytes(args.out, bench_csv(result.rows));
    std::cerr << result.outcomes.size() << " image runs, " << result.dominance_violations
              << " dominance violations\n";
    return result.dominance_violations == 0 ? 0 : 1;
}

int run_dct(const BenchArgs &args) {
    const BenchResult result = run_dct_compare(load_slice(args), bench_options(args));
    write_file_bytes(args.out, dct_csv(result.rows));
    return 0;
}

int run_swaps(const std::string &perm, const std::string &out) {
    const std::string text = to_text(perm_to_swaps(QubitPermutation::parse(perm)));
    if (out.empty()) {
        std::cout << text;
    } else {
        write_file_bytes(out, text);
    }
    return 0;
}

void add_encode_flags(CLI::App *cmd, EncodeArgs &args) {
    cmd->add_option("--input", args.input, "input file")->required();
    cmd->add_option("--format", args.format, "input format")
        ->required()
        ->check(CLI::IsMember({"idx", "pgm", "csv", "raw"}));
    cmd->add_option("--index", args.index, "image index inside an IDX file");
    cmd->add_option("--chi", args.chi, "bond dimension")->required()->check(CLI::PositiveNumber);
    cmd->add_flag("--renormalize", args.renormalize, "also report the distance after renormalizing");
    cmd->add_flag("--recompute", args.recompute, "replay SVDs instead of storing residuals");
    cmd->add_option("--report", args.report, "JSON report path")->required();
    cmd->add_option("--mps", args.mps_out, "write the MPS as JSON");
}

void add_bench_flags(CLI::App *cmd, BenchArgs &args, bool sampled) {
    cmd->add_option("--images", args.images, "IDX image file")->required();
    cmd->add_option("--labels", args.labels, "IDX label file");
    cmd->add_option("--chi", args.chi, "bond dimensions, a:b inclusive")->required();
    cmd->add_option("--sample", args.sample, "images per class (0 = all)")->required(sampled);
    cmd->add_option("--seed", args.seed, "sampling seed")->required(sampled);
    cmd->add_option("--threads", args.threads, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--no-timing", args.no_timing, "write 0 in timing columns for byte-stable output");
    cmd->add_option("--out", args.out, "CSV output path")->required();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Truncated MPS encoding with optimal qubit ordering"};
    app.require_subcommand(1);

    EncodeArgs search_args;
    EncodeArgs encode_args;
    add_encode_flags(app.add_subcommand("search", "find the best qubit ordering, then encode"), search_args);
    add_encode_flags(app.add_subcommand("encode", "encode in the given qubit ordering"), encode_args);

    std::string mps_in;
    std::string recon_out;
    auto *recon = app.add_subcommand("reconstruct", "rebuild data from a stored MPS");
    recon->add_option("--mps", mps_in, "MPS JSON file")->required();
    recon->add_option("--out", recon_out, "output .pgm, .raw or .csv")->required();

    BenchArgs bench_args;
    BenchArgs dct_args;
    add_bench_flags(app.add_subcommand("bench", "standard vs permuted encoding over a dataset"), bench_args, true);
    add_bench_flags(app.add_subcommand("dct", "standard vs DCT-then-encode over a dataset"), dct_args, false);

    std::string perm_text;
    std::string swaps_out;
    auto *swaps = app.add_subcommand("swaps", "SWAP network realizing a qubit permutation");
    swaps->add_option("--perm", perm_text, "comma-separated permutation")->required();
    swaps->add_option("--out", swaps_out, "output text file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (app.got_subcommand("search")) {
            return run_encode(search_args, true);
        }
        if (app.got_subcommand("encode")) {
            return run_encode(encode_args, false);
        }
        if (app.got_subcommand("reconstruct")) {
            return run_reconstruct(mps_in, recon_out);
        }
        if (app.got_subcommand("bench")) {
            return run_bench(bench_args);
        }
        if (app.got_subcommand("dct")) {
            return run_dct(dct_args);
        }
        return run_swaps(perm_text, swaps_out);
    } catch (const Error &e) {
        std::cerr << "mpsperm: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e.kind());
    }
}
