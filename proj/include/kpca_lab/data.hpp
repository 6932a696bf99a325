#ifndef KPCA_LAB_DATA_HPP
#define KPCA_LAB_DATA_HPP

#include "common.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace kpca_lab {

struct LabeledDataset {
    DataMatrix features;
    std::vector<int> labels;
};

/// Seeded random stream with a fixed, platform-independent definition:
/// std::mt19937_64 (its output sequence is pinned by the C++ standard) seeded
/// with splitmix64(seed + stream_id * 0x9E3779B97F4A7C15). Uniforms take the
/// top 53 bits; normals use the cosine branch of Box-Muller,
/// sqrt(-2 ln(1 - u1)) * cos(2 pi u2), consuming two uniforms each.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id)
        : engine_(splitmix64(seed + stream_id * 0x9E3779B97F4A7C15ULL)) {}

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

struct SpheresParams {
    Index total = 1000;
    double r1 = 40.0;
    double r2 = 100.0;
    double noise = 1.0;
    std::uint64_t seed = 0;
};

/// Two noisy concentric spheres. Rows [0, N/2) are class 1 on radius r1, the
/// rest class 2 on radius r2. Each class draws from its own stream; per point
/// the order is theta ~ U[0, pi], phi ~ U[0, 2 pi), then x/y/z noise.
/// Angles (not surface area) are uniform, so points crowd the poles.
inline LabeledDataset gen_two_spheres(const SpheresParams& p) {
    require(p.total > 0 && p.total % 2 == 0, "sphere sample count must be even and positive");
    require(p.r1 > 0.0 && p.r2 > 0.0 && p.r1 != p.r2, "sphere radii must be positive and distinct");
    require(p.noise >= 0.0 && std::isfinite(p.noise), "noise deviation must be >= 0");

    LabeledDataset out;
    out.features.resize(p.total, 3);
    out.labels.resize(static_cast<std::size_t>(p.total));
    const Index half = p.total / 2;
    const double radii[2] = {p.r1, p.r2};
    for (int cls = 0; cls < 2; ++cls) {
        RandomStream rng(p.seed, static_cast<std::uint64_t>(cls));
        for (Index i = 0; i < half; ++i) {
            const Index row = cls * half + i;
            const double theta = std::numbers::pi * rng.uniform();
            const double phi = 2.0 * std::numbers::pi * rng.uniform();
            const double r = radii[cls];
            out.features(row, 0) = r * std::sin(theta) * std::cos(phi);
            out.features(row, 1) = r * std::sin(theta) * std::sin(phi);
            out.features(row, 2) = r * std::cos(theta);
            if (p.noise > 0.0)
                for (Index d = 0; d < 3; ++d) out.features(row, d) += p.noise * rng.normal();
            out.labels[static_cast<std::size_t>(row)] = cls + 1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// CSV: comma-separated numbers, one row per line, no header.

inline DataMatrix parse_csv_matrix(std::istream& in) {
    std::vector<double> values;
    Index cols = -1;
    Index rows = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) {
            if (in.peek() == std::char_traits<char>::eof()) break; // trailing blank line
            throw ParseError("blank line inside matrix", line_no);
        }
        Index count = 0;
        std::size_t start = 0;
        for (;;) {
            const std::size_t comma = line.find(',', start);
            std::string_view cell(line.data() + start, (comma == std::string::npos ? line.size() : comma) - start);
            while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
            while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t')) cell.remove_suffix(1);
            if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size())
                throw ParseError("non-numeric cell '" + std::string(cell) + "' in column " + std::to_string(count + 1),
                                 line_no);
            values.push_back(v);
            ++count;
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (cols < 0)
            cols = count;
        else if (count != cols)
            throw ParseError("ragged row: " + std::to_string(count) + " cells, expected " + std::to_string(cols),
                             line_no);
        ++rows;
    }
    if (rows == 0) throw ParseError("empty CSV matrix");
    DataMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = values[static_cast<std::size_t>(i * cols + j)];
    return m;
}

inline DataMatrix read_csv_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return parse_csv_matrix(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

/// Shortest representation that round-trips (at most 17 significant digits).
inline std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

inline void write_csv_matrix(const DataMatrix& m, std::ostream& out) {
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_real(m(i, j));
        }
        out << '\n';
    }
}

inline void write_csv_matrix(const DataMatrix& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_csv_matrix(m, out);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

/// Integer labels stored as a one-column CSV.
inline std::vector<int> read_labels(const std::filesystem::path& path) {
    const DataMatrix m = read_csv_matrix(path);
    if (m.cols() != 1) throw ParseError(path.string() + ": label file must have exactly one column");
    std::vector<int> labels(static_cast<std::size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i) {
        if (m(i, 0) != std::round(m(i, 0)))
            throw ParseError(path.string() + ": non-integer label", static_cast<std::size_t>(i + 1));
        labels[static_cast<std::size_t>(i)] = static_cast<int>(m(i, 0));
    }
    return labels;
}

inline void write_labels(const std::vector<int>& labels, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (int l : labels) out << l << '\n';
}

// ---------------------------------------------------------------------------
// PGM (P2 ASCII / P5 binary), maxval up to 65535.

struct PgmImage {
    Index width = 0;
    Index height = 0;
    int maxval = 255;
    Vector pixels; // row-major
};

namespace detail {

// Next header token, skipping whitespace and '#' comments.
inline std::string pgm_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    return tok;
}

inline long pgm_number(std::istream& in, const char* what) {
    const std::string tok = pgm_token(in);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
        throw ParseError(std::string("PGM: bad ") + what + " '" + tok + "'");
    return v;
}

} // namespace detail

inline PgmImage parse_pgm(std::istream& in) {
    const std::string magic = detail::pgm_token(in);
    if (magic != "P2" && magic != "P5") throw ParseError("PGM: unsupported magic '" + magic + "'");
    PgmImage img;
    img.width = detail::pgm_number(in, "width");
    img.height = detail::pgm_number(in, "height");
    const long maxval = detail::pgm_number(in, "maxval");
    if (img.width == 0 || img.height == 0) throw ParseError("PGM: zero-sized image");
    if (maxval < 1 || maxval > 65535) throw ParseError("PGM: maxval out of range");
    img.maxval = static_cast<int>(maxval);
    const Index count = img.width * img.height;
    img.pixels.resize(count);
    if (magic == "P2") {
        for (Index i = 0; i < count; ++i) {
            const std::string tok = detail::pgm_token(in);
            if (tok.empty()) throw ParseError("PGM: truncated pixel data at pixel " + std::to_string(i));
            long v = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0 || v > maxval)
                throw ParseError("PGM: bad pixel value '" + tok + "'");
            img.pixels(i) = static_cast<double>(v);
        }
    } else {
        // exactly one whitespace byte separates maxval from the payload; pgm_token consumed it
        const int bytes = maxval < 256 ? 1 : 2;
        std::vector<unsigned char> raw(static_cast<std::size_t>(count * bytes));
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
        if (in.gcount() != static_cast<std::streamsize>(raw.size()))
            throw ParseError("PGM: truncated binary payload");
        for (Index i = 0; i < count; ++i) {
            const auto k = static_cast<std::size_t>(i * bytes);
            const unsigned v = bytes == 1 ? raw[k] : (static_cast<unsigned>(raw[k]) << 8) | raw[k + 1];
            if (v > static_cast<unsigned>(maxval)) throw ParseError("PGM: pixel exceeds maxval");
            img.pixels(i) = static_cast<double>(v);
        }
    }
    return img;
}

inline PgmImage read_pgm_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    return parse_pgm(in);
}

/// Flattened row-major pixel intensities of a PGM file.
inline Vector read_pgm(const std::filesystem::path& path) { return read_pgm_image(path).pixels; }

inline void write_pgm(const PgmImage& img, std::ostream& out, bool binary) {
    out << (binary ? "P5" : "P2") << '\n' << img.width << ' ' << img.height << '\n' << img.maxval << '\n';
    for (Index i = 0; i < img.pixels.size(); ++i) {
        const auto v = static_cast<unsigned>(img.pixels(i));
        if (!binary) {
            out << v << ((i + 1) % img.width == 0 ? '\n' : ' ');
        } else if (img.maxval < 256) {
            out.put(static_cast<char>(v));
        } else {
            out.put(static_cast<char>(v >> 8));
            out.put(static_cast<char>(v & 0xFF));
        }
    }
}

} // namespace kpca_lab

#endif
