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

#include "mpsperm/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "mpsperm/error.hpp"

namespace mpsperm {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint32_t read_be32(const std::vector<std::uint8_t> &b, std::size_t at) {
    return (std::uint32_t{b[at]} << 24) | (std::uint32_t{b[at + 1]} << 16) | (std::uint32_t{b[at + 2]} << 8) |
           std::uint32_t{b[at + 3]};
}

void check_magic(const std::vector<std::uint8_t> &bytes, std::uint8_t type_byte, std::uint8_t dims,
                 const char *expected) {
    if (bytes.size() < 4 || bytes[0] != 0 || bytes[1] != 0 || bytes[2] != type_byte || bytes[3] != dims) {
        fail(ErrorKind::Format, std::string("bad IDX magic; expected bytes ") + expected);
    }
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string hex(const unsigned char *data, std::size_t len) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(digits[data[i] >> 4]);
        out.push_back(digits[data[i] & 0xF]);
    }
    return out;
}

// Next whitespace-delimited token of a PNM header, skipping '#' comments.
std::string pnm_token(const std::vector<std::uint8_t> &b, std::size_t &pos) {
    while (pos < b.size()) {
        if (b[pos] == '#') {
            while (pos < b.size() && b[pos] != '\n') {
                ++pos;
            }
        } else if (std::isspace(b[pos])) {
            ++pos;
        } else {
            break;
        }
    }
    std::string tok;
    while (pos < b.size() && !std::isspace(b[pos]) && b[pos] != '#') {
        tok.push_back(static_cast<char>(b[pos++]));
    }
    if (tok.empty()) {
        fail(ErrorKind::Length, "PGM header is truncated");
    }
    return tok;
}

std::size_t pnm_number(const std::vector<std::uint8_t> &b, std::size_t &pos) {
    const std::string tok = pnm_token(b, pos);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        fail(ErrorKind::Format, "bad number '" + tok + "' in PGM header");
    }
    return v;
}

template <typename T>
T get_field(const ordered_json &j, const char *key) {
    if (!j.contains(key)) {
        fail(ErrorKind::Format, std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::Format, std::string("field '") + key + "': " + e.what());
    }
}

ordered_json parse_json(const std::string &text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::Format, std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorKind::Io, "cannot open '" + path.string() + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_bytes(const std::filesystem::path &path, const std::string &bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        fail(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        fail(ErrorKind::Io, "failed writing '" + path.string() + "'");
    }
}

std::vector<ImageBuffer> parse_idx_images(const std::vector<std::uint8_t> &bytes) {
    check_magic(bytes, 0x08, 0x03, "00 00 08 03");
    if (bytes.size() < 16) {
        fail(ErrorKind::Length, "IDX image header is truncated");
    }
    const std::size_t count = read_be32(bytes, 4);
    const std::size_t rows = read_be32(bytes, 8);
    const std::size_t cols = read_be32(bytes, 12);
    if (rows == 0 || cols == 0) {
        fail(ErrorKind::Format, "IDX image extents must be positive");
    }
    const std::size_t per_image = rows * cols;
    if ((bytes.size() - 16) / per_image < count) {
        fail(ErrorKind::Length, "IDX payload holds fewer than the " + std::to_string(count) + " images in its header");
    }
    std::vector<ImageBuffer> images;
    images.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const auto first = bytes.begin() + static_cast<std::ptrdiff_t>(16 + k * per_image);
        images.emplace_back(rows, cols, std::vector<double>(first, first + static_cast<std::ptrdiff_t>(per_image)));
    }
    return images;
}

std::vector<int> parse_idx_labels(const std::vector<std::uint8_t> &bytes) {
    check_magic(bytes, 0x08, 0x01, "00 00 08 01");
    if (bytes.size() < 8) {
        fail(ErrorKind::Length, "IDX label header is truncated");
    }
    const std::size_t count = read_be32(bytes, 4);
    if (bytes.size() - 8 < count) {
        fail(ErrorKind::Length, "IDX payload holds fewer than the " + std::to_string(count) + " labels in its header");
    }
    return {bytes.begin() + 8, bytes.begin() + 8 + static_cast<std::ptrdiff_t>(count)};
}

DatasetSlice read_idx_images(const std::filesystem::path &path) {
    DatasetSlice slice;
    slice.name = path.stem().string();
    slice.images = parse_idx_images(read_file_bytes(path));
    slice.sources.push_back(path);
    return slice;
}

std::vector<int> read_idx_labels(const std::filesystem::path &path) { return parse_idx_labels(read_file_bytes(path)); }

DatasetSlice read_idx_dataset(const std::filesystem::path &images,
                              const std::optional<std::filesystem::path> &labels) {
    DatasetSlice slice = read_idx_images(images);
    if (labels) {
        auto ids = read_idx_labels(*labels);
        require(ids.size() == slice.images.size(), "label count " + std::to_string(ids.size()) +
                                                       " does not match image count " +
                                                       std::to_string(slice.images.size()));
        slice.labels = std::move(ids);
        slice.sources.push_back(*labels);
    }
    return slice;
}

ImageBuffer read_pgm(const std::filesystem::path &path) {
    const auto b = read_file_bytes(path);
    if (b.size() < 2 || b[0] != 'P' || (b[1] != '5' && b[1] != '2')) {
        fail(ErrorKind::Format, "'" + path.string() + "' is not a P5 or P2 graymap");
    }
    const bool binary = b[1] == '5';
    std::size_t pos = 2;
    const std::size_t width = pnm_number(b, pos);
    const std::size_t height = pnm_number(b, pos);
    const std::size_t maxval = pnm_number(b, pos);
    if (width == 0 || height == 0 || maxval == 0 || maxval > 255) {
        fail(ErrorKind::Format, "unsupported PGM header (need positive extents, maxval <= 255)");
    }
    std::vector<double> px(width * height);
    if (binary) {
        ++pos;  // single whitespace after maxval
        if (b.size() < pos + px.size()) {
            fail(ErrorKind::Length, "PGM payload is truncated");
        }
        for (std::size_t i = 0; i < px.size(); ++i) {
            px[i] = b[pos + i];
        }
    } else {
        for (double &v : px) {
            v = static_cast<double>(pnm_number(b, pos));
        }
    }
    return ImageBuffer(height, width, std::move(px));
}

void write_pgm(const std::filesystem::path &path, const ImageBuffer &img) {
    std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    for (double v : img.pixels) {
        const double c = std::clamp(std::round(v), 0.0, 255.0);
        out.push_back(static_cast<char>(static_cast<std::uint8_t>(c)));
    }
    write_file_bytes(path, out);
}

std::vector<double> parse_vector(const std::vector<std::uint8_t> &bytes, VectorFormat format) {
    std::vector<double> out;
    if (format == VectorFormat::Raw) {
        static constexpr char magic[] = "MPSVEC01";
        if (bytes.size() < 8 || std::memcmp(bytes.data(), magic, 8) != 0) {
            fail(ErrorKind::Format, "bad raw vector magic; expected \"MPSVEC01\"");
        }
        if (bytes.size() < 12) {
            fail(ErrorKind::Length, "raw vector header is truncated");
        }
        const std::size_t count = std::uint32_t{bytes[8]} | (std::uint32_t{bytes[9]} << 8) |
                                  (std::uint32_t{bytes[10]} << 16) | (std::uint32_t{bytes[11]} << 24);
        if (bytes.size() - 12 != count * 8) {
            fail(ErrorKind::Length, "raw vector payload does not hold " + std::to_string(count) + " values");
        }
        out.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            std::uint64_t bits = 0;
            for (std::size_t k = 0; k < 8; ++k) {
                bits |= std::uint64_t{bytes[12 + 8 * i + k]} << (8 * k);
            }
            out[i] = std::bit_cast<double>(bits);
        }
        return out;
    }

    const std::string text(bytes.begin(), bytes.end());
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find_first_of(",\n", start);
        const std::string_view tok = trim(std::string_view(text).substr(
            start, (end == std::string::npos ? text.size() : end) - start));
        if (!tok.empty()) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                fail(ErrorKind::Format, "cannot parse '" + std::string(tok) + "' as a number");
            }
            out.push_back(v);
        }
        if (end == std::string::npos) {
            break;
        }
        start = end + 1;
    }
    return out;
}

std::string serialize_vector(const std::vector<double> &values, VectorFormat format) {
    std::string out;
    if (format == VectorFormat::Raw) {
        require(values.size() <= 0xFFFFFFFFu, "raw vector is too long");
        out = "MPSVEC01";
        const auto count = static_cast<std::uint32_t>(values.size());
        for (std::size_t k = 0; k < 4; ++k) {
            out.push_back(static_cast<char>((count >> (8 * k)) & 0xFF));
        }
        for (double v : values) {
            const auto bits = std::bit_cast<std::uint64_t>(v);
            for (std::size_t k = 0; k < 8; ++k) {
                out.push_back(static_cast<char>((bits >> (8 * k)) & 0xFF));
            }
        }
        return out;
    }
    char buf[32];
    for (double v : values) {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
        out.append(buf, ptr);
        out.push_back('\n');
    }
    return out;
}

std::vector<double> read_vector(const std::filesystem::path &path, VectorFormat format) {
    return parse_vector(read_file_bytes(path), format);
}

void write_vector(const std::filesystem::path &path, const std::vector<double> &values, VectorFormat format) {
    write_file_bytes(path, serialize_vector(values, format));
}

std::string mps_to_json(const StoredMps &stored) {
    const Mps &mps = stored.mps;
    ordered_json j;
    j["n"] = mps.num_qubits();
    j["chi"] = mps.chi;
    j["perm"] = mps.perm.map();
    j["norm_scale"] = stored.norm_scale;
    j["orig_shape"] = {stored.orig_height, stored.orig_width};
    ordered_json cores = ordered_json::array();
    for (const auto &core : mps.cores) {
        ordered_json c;
        c["left"] = core.left_bond;
        c["phys"] = core.phys_dim;
        c["right"] = core.right_bond;
        c["data"] = core.data;
        cores.push_back(std::move(c));
    }
    j["cores"] = std::move(cores);
    return j.dump() + "\n";
}

StoredMps mps_from_json(const std::string &text) {
    const ordered_json j = parse_json(text);
    StoredMps out;
    out.mps.chi = get_field<std::size_t>(j, "chi");
    out.mps.perm = QubitPermutation(get_field<std::vector<std::size_t>>(j, "perm"));
    out.norm_scale = get_field<double>(j, "norm_scale");
    const auto shape = get_field<std::vector<std::size_t>>(j, "orig_shape");
    if (shape.size() != 2) {
        fail(ErrorKind::Format, "orig_shape must be [height, width]");
    }
    out.orig_height = shape[0];
    out.orig_width = shape[1];
    if (!j.contains("cores") || !j["cores"].is_array()) {
        fail(ErrorKind::Format, "missing 'cores' array");
    }
    for (const auto &c : j["cores"]) {
        out.mps.cores.push_back(MpsCore{get_field<std::size_t>(c, "left"), get_field<std::size_t>(c, "phys"),
                                        get_field<std::size_t>(c, "right"),
                                        get_field<std::vector<double>>(c, "data")});
    }
    try {
        out.mps.validate();
    } catch (const Error &e) {
        fail(ErrorKind::Format, std::string("malformed MPS: ") + e.what());
    }
    if (get_field<std::size_t>(j, "n") != out.mps.num_qubits()) {
        fail(ErrorKind::Format, "field 'n' disagrees with the core dimensions");
    }
    return out;
}

std::string report_to_json(const RunReport &r) {
    ordered_json j;
    j["n"] = r.n;
    j["chi"] = r.chi;
    j["permutation"] = r.permutation.map();
    j["total_sq"] = r.total_sq;
    j["frobenius_distance"] = r.frobenius_distance;
    j["frobenius_distance_renormalized"] =
        r.frobenius_distance_renormalized ? ordered_json(*r.frobenius_distance_renormalized) : ordered_json();
    ordered_json cuts = ordered_json::array();
    for (const auto &c : r.per_cut) {
        ordered_json e;
        e["cut"] = c.cut_index;
        e["discarded_sq"] = c.discarded_sq;
        cuts.push_back(std::move(e));
    }
    j["per_cut"] = std::move(cuts);
    j["visited_nodes"] = r.visited_nodes;
    j["pushed_nodes"] = r.pushed_nodes;
    j["frontier_peak"] = r.frontier_peak;
    j["wall_ms"] = r.wall_ms;
    j["norm_scale"] = r.norm_scale;
    j["orig_shape"] = {r.orig_height, r.orig_width};
    j["input_sha256"] = r.input_sha256;
    return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string &text) {
    static constexpr const char *keys[] = {"n",          "chi",           "permutation",   "total_sq",
                                           "frobenius_distance", "frobenius_distance_renormalized",
                                           "per_cut",    "visited_nodes", "pushed_nodes",  "frontier_peak",
                                           "wall_ms",    "norm_scale",    "orig_shape",    "input_sha256"};
    const ordered_json j = parse_json(text);
    if (!j.is_object() || j.size() != std::size(keys)) {
        fail(ErrorKind::Format, "report must be an object with " + std::to_string(std::size(keys)) + " fields");
    }
    std::size_t i = 0;
    for (const auto &item : j.items()) {
        if (item.key() != keys[i++]) {
            fail(ErrorKind::Format, "unexpected report field '" + item.key() + "'");
        }
    }
    RunReport r;
    r.n = get_field<std::size_t>(j, "n");
    r.chi = get_field<std::size_t>(j, "chi");
    r.permutation = QubitPermutation(get_field<std::vector<std::size_t>>(j, "permutation"));
    r.total_sq = get_field<double>(j, "total_sq");
    r.frobenius_distance = get_field<double>(j, "frobenius_distance");
    if (!j["frobenius_distance_renormalized"].is_null()) {
        r.frobenius_distance_renormalized = get_field<double>(j, "frobenius_distance_renormalized");
    }
    for (const auto &c : j["per_cut"]) {
        r.per_cut.push_back(CutRecord{get_field<std::size_t>(c, "cut"), {}, get_field<double>(c, "discarded_sq")});
    }
    r.visited_nodes = get_field<std::uint64_t>(j, "visited_nodes");
    r.pushed_nodes = get_field<std::uint64_t>(j, "pushed_nodes");
    r.frontier_peak = get_field<std::uint64_t>(j, "frontier_peak");
    r.wall_ms = get_field<double>(j, "wall_ms");
    r.norm_scale = get_field<double>(j, "norm_scale");
    const auto shape = get_field<std::vector<std::size_t>>(j, "orig_shape");
    if (shape.size() != 2) {
        fail(ErrorKind::Format, "orig_shape must be [height, width]");
    }
    r.orig_height = shape[0];
    r.orig_width = shape[1];
    r.input_sha256 = get_field<std::string>(j, "input_sha256");
    if (r.permutation.size() != r.n) {
        fail(ErrorKind::Format, "permutation length disagrees with n");
    }
    return r;
}

void write_report(const RunReport &report, const std::filesystem::path &path) {
    write_file_bytes(path, report_to_json(report));
}

std::string sha256_hex(const std::vector<std::uint8_t> &bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        fail(ErrorKind::Io, "SHA-256 computation failed");
    }
    return hex(digest, len);
}

}  // namespace mpsperm
