#ifndef KPCA_LAB_MODEL_IO_HPP
#define KPCA_LAB_MODEL_IO_HPP

#include "common.hpp"
#include "kpca.hpp"
#include "pca.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <variant>

// Model container, all integers and reals little-endian:
//
//   magic    8 bytes  "KPCALAB\0"
//   version  u32      1
//   kind     u32      1 = PCA, 2 = kernel PCA
//
//   PCA:  u64 D, u64 M, f64 mean[D], f64 basis[D*M] (column-major), f64 eigenvalues[M]
//   KPCA: u32 kernel (0 linear, 1 polynomial, 2 gaussian), u32 degree, f64 offset, f64 sigma,
//         u64 N, u64 D, u64 M, f64 training[N*D] (row-major), f64 coefficients[N*M]
//         (column-major), f64 eigenvalues[M], f64 train_gram[N*N] (row-major)

namespace kpca_lab {

using AnyModel = std::variant<PcaModel, KpcaModel>;

inline constexpr std::array<char, 8> model_magic = {'K', 'P', 'C', 'A', 'L', 'A', 'B', '\0'};
inline constexpr std::uint32_t model_format_version = 1;

namespace detail {

template <typename T>
void put_le(std::ostream& out, T value) {
    std::uint64_t bits = 0;
    if constexpr (std::is_same_v<T, double>)
        bits = std::bit_cast<std::uint64_t>(value);
    else
        bits = static_cast<std::uint64_t>(value);
    for (std::size_t i = 0; i < sizeof(T); ++i) out.put(static_cast<char>((bits >> (8 * i)) & 0xFF));
}

template <typename T>
T get_le(std::istream& in) {
    unsigned char buf[sizeof(T)];
    in.read(reinterpret_cast<char*>(buf), sizeof(T));
    if (in.gcount() != static_cast<std::streamsize>(sizeof(T))) throw ParseError("model file truncated");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) bits |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    if constexpr (std::is_same_v<T, double>)
        return std::bit_cast<double>(bits);
    else
        return static_cast<T>(bits);
}

inline void put_matrix_colmajor(std::ostream& out, const Matrix& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i) put_le(out, m(i, j));
}

inline void put_matrix_rowmajor(std::ostream& out, const Matrix& m) {
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) put_le(out, m(i, j));
}

inline Matrix get_matrix_colmajor(std::istream& in, Index rows, Index cols) {
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) m(i, j) = get_le<double>(in);
    return m;
}

inline Matrix get_matrix_rowmajor(std::istream& in, Index rows, Index cols) {
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = get_le<double>(in);
    return m;
}

inline Index get_dim(std::istream& in) {
    const auto v = get_le<std::uint64_t>(in);
    if (v > (1ULL << 32)) throw ParseError("model file: implausible dimension " + std::to_string(v));
    return static_cast<Index>(v);
}

} // namespace detail

inline void save_model(const AnyModel& model, std::ostream& out) {
    out.write(model_magic.data(), model_magic.size());
    detail::put_le<std::uint32_t>(out, model_format_version);
    if (const auto* pca = std::get_if<PcaModel>(&model)) {
        detail::put_le<std::uint32_t>(out, 1);
        detail::put_le<std::uint64_t>(out, static_cast<std::uint64_t>(pca->input_dim()));
        detail::put_le<std::uint64_t>(out, static_cast<std::uint64_t>(pca->components()));
        detail::put_matrix_colmajor(out, pca->mean);
        detail::put_matrix_colmajor(out, pca->basis);
        detail::put_matrix_colmajor(out, pca->eigenvalues);
        return;
    }
    const auto& k = std::get<KpcaModel>(model);
    detail::put_le<std::uint32_t>(out, 2);
    std::uint32_t kind = 0, degree = 0;
    double offset = 0.0, sigma = 0.0;
    if (const auto* p = std::get_if<PolynomialKernel>(&k.spec)) {
        kind = 1;
        degree = static_cast<std::uint32_t>(p->degree);
        offset = p->offset;
    } else if (const auto* g = std::get_if<GaussianKernel>(&k.spec)) {
        kind = 2;
        sigma = g->sigma;
    }
    detail::put_le(out, kind);
    detail::put_le(out, degree);
    detail::put_le(out, offset);
    detail::put_le(out, sigma);
    detail::put_le<std::uint64_t>(out, static_cast<std::uint64_t>(k.samples()));
    detail::put_le<std::uint64_t>(out, static_cast<std::uint64_t>(k.input_dim()));
    detail::put_le<std::uint64_t>(out, static_cast<std::uint64_t>(k.components()));
    detail::put_matrix_rowmajor(out, k.training);
    detail::put_matrix_colmajor(out, k.coefficients);
    detail::put_matrix_colmajor(out, k.eigenvalues);
    detail::put_matrix_rowmajor(out, k.train_gram);
}

inline AnyModel load_model(std::istream& in) {
    std::array<char, 8> magic{};
    in.read(magic.data(), magic.size());
    if (in.gcount() != 8 || magic != model_magic) throw ParseError("not a kpca_lab model file (bad magic)");
    const auto version = detail::get_le<std::uint32_t>(in);
    if (version != model_format_version)
        throw ParseError("unsupported model format version " + std::to_string(version));
    const auto kind = detail::get_le<std::uint32_t>(in);
    if (kind == 1) {
        PcaModel m;
        const Index d = detail::get_dim(in);
        const Index c = detail::get_dim(in);
        m.mean = detail::get_matrix_colmajor(in, d, 1);
        m.basis = detail::get_matrix_colmajor(in, d, c);
        m.eigenvalues = detail::get_matrix_colmajor(in, c, 1);
        return m;
    }
    if (kind != 2) throw ParseError("unknown model kind " + std::to_string(kind));
    KpcaModel m;
    const auto kernel = detail::get_le<std::uint32_t>(in);
    const auto degree = detail::get_le<std::uint32_t>(in);
    const auto offset = detail::get_le<double>(in);
    const auto sigma = detail::get_le<double>(in);
    switch (kernel) {
    case 0: m.spec = LinearKernel{}; break;
    case 1: m.spec = PolynomialKernel{static_cast<int>(degree), offset}; break;
    case 2: m.spec = GaussianKernel{sigma}; break;
    default: throw ParseError("unknown kernel kind " + std::to_string(kernel));
    }
    try {
        validate(m.spec);
    } catch (const ArgumentError& e) {
        throw ParseError(std::string("model file: ") + e.what());
    }
    const Index n = detail::get_dim(in);
    const Index d = detail::get_dim(in);
    const Index c = detail::get_dim(in);
    m.training = detail::get_matrix_rowmajor(in, n, d);
    m.coefficients = detail::get_matrix_colmajor(in, n, c);
    m.eigenvalues = detail::get_matrix_colmajor(in, c, 1);
    m.train_gram = detail::get_matrix_rowmajor(in, n, n);
    return m;
}

inline void save_model(const AnyModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    save_model(model, out);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

inline AnyModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    return load_model(in);
}

} // namespace kpca_lab

#endif
