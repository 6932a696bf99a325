#ifndef KPCA_LAB_SHAPES_HPP
#define KPCA_LAB_SHAPES_HPP

#include "common.hpp"
#include "data.hpp"
#include "kpca.hpp"
#include "pca.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace kpca_lab {

/// n landmarks stored interleaved as [x1, y1, ..., xn, yn].
class Shape {
public:
    Shape() = default;

    explicit Shape(Vector coords) : coords_(std::move(coords)) {
        if (coords_.size() % 2 != 0) throw InputError("shape vector has odd length " + std::to_string(coords_.size()));
        if (coords_.size() < 6) throw InputError("shape needs at least 3 landmarks");
        if (!coords_.allFinite()) throw InputError("shape has non-finite coordinates");
    }

    Index points() const { return coords_.size() / 2; }
    double x(Index j) const { return coords_(2 * j); }
    double y(Index j) const { return coords_(2 * j + 1); }
    const Vector& coords() const { return coords_; }

    friend bool operator==(const Shape& a, const Shape& b) { return a.coords_ == b.coords_; }

private:
    Vector coords_;
};

/// Point distribution model: mean shape, orthonormal deformation modes
/// (2n x t) and their variances.
struct ShapeModel {
    Vector mean_shape;
    Matrix basis;
    Vector eigenvalues;

    Index modes() const { return basis.cols(); }
};

/// Stacks shapes as rows of an N x 2n matrix.
inline DataMatrix shape_matrix(const std::vector<Shape>& shapes) {
    require(!shapes.empty(), "no shapes given");
    const Index dim = shapes.front().coords().size();
    DataMatrix m(static_cast<Index>(shapes.size()), dim);
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        require(shapes[i].coords().size() == dim, "shape " + std::to_string(i) + " has " +
                                                      std::to_string(shapes[i].points()) + " landmarks, expected " +
                                                      std::to_string(dim / 2));
        m.row(static_cast<Index>(i)) = shapes[i].coords().transpose();
    }
    return m;
}

/// Per shape and per axis, maps [min, max] affinely onto [0, 1].
inline std::vector<Shape> normalize_shapes(const std::vector<Shape>& shapes) {
    require(!shapes.empty(), "normalize_shapes: empty shape list");
    std::vector<Shape> out;
    out.reserve(shapes.size());
    const Index n = shapes.front().points();
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        const Shape& shape = shapes[s];
        require(shape.points() == n, "normalize_shapes: shape " + std::to_string(s) + " has " +
                                         std::to_string(shape.points()) + " landmarks, expected " + std::to_string(n));
        Vector c = shape.coords();
        for (Index axis = 0; axis < 2; ++axis) {
            auto vals = c(Eigen::seqN(axis, n, 2));
            const double lo = vals.minCoeff();
            const double hi = vals.maxCoeff();
            if (!(hi > lo))
                throw InputError("normalize_shapes: shape " + std::to_string(s) + " has zero " +
                                 (axis == 0 ? "x" : "y") + "-range");
            vals = (vals.array() - lo) / (hi - lo);
        }
        out.emplace_back(std::move(c));
    }
    return out;
}

inline ShapeModel shape_model_from_pca(const PcaModel& pca) {
    return {pca.mean, pca.basis, pca.eigenvalues};
}

/// Mean shape plus the top-t eigenvectors of the 1/N deviation covariance.
inline ShapeModel fit_shape_model(const std::vector<Shape>& shapes, Index t) {
    const DataMatrix x = shape_matrix(shapes);
    return shape_model_from_pca(fit_pca(x, t));
}

/// b = P'(x - mean)
inline Vector project_shape(const ShapeModel& model, const Shape& shape) {
    require(shape.coords().size() == model.mean_shape.size(), "project_shape: landmark count mismatch");
    return model.basis.transpose() * (shape.coords() - model.mean_shape);
}

/// Clips each b_k into [-3 sqrt(lambda_k), 3 sqrt(lambda_k)].
inline Vector clamp_deformation(const ShapeModel& model, const Vector& b) {
    require(b.size() == model.modes(), "deformation vector has " + std::to_string(b.size()) + " weights, model has " +
                                           std::to_string(model.modes()) + " modes");
    Vector out = b;
    for (Index k = 0; k < b.size(); ++k) {
        const double limit = 3.0 * std::sqrt(model.eigenvalues(k));
        out(k) = std::clamp(b(k), -limit, limit);
    }
    return out;
}

/// mean + P b, with b optionally clamped first.
inline Shape synthesize(const ShapeModel& model, const Vector& b, bool clamp) {
    require(b.size() == model.modes(), "deformation vector has " + std::to_string(b.size()) + " weights, model has " +
                                           std::to_string(model.modes()) + " modes");
    const Vector w = clamp ? clamp_deformation(model, b) : b;
    return Shape(model.mean_shape + model.basis * w);
}

/// `steps` shapes with b_k (1-based k) evenly spaced over [-3 sqrt(l_k), 3 sqrt(l_k)],
/// endpoints included, all other weights zero.
inline std::vector<Shape> sweep_pca_feature(const ShapeModel& model, Index k, Index steps) {
    require(k >= 1 && k <= model.modes(),
            "feature " + std::to_string(k) + " outside [1, " + std::to_string(model.modes()) + "]");
    require(steps >= 2, "sweep needs at least 2 steps");
    const double limit = 3.0 * std::sqrt(model.eigenvalues(k - 1));
    std::vector<Shape> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (Index s = 0; s < steps; ++s) {
        Vector b = Vector::Zero(model.modes());
        // symmetric formula so the middle step is exactly zero for odd counts
        b(k - 1) = limit * static_cast<double>(2 * s - (steps - 1)) / static_cast<double>(steps - 1);
        out.push_back(synthesize(model, b, false));
    }
    return out;
}

/// Kernel PCA fit on shape vectors (rows of shape_matrix).
inline KpcaModel fit_shape_kpca(const std::vector<Shape>& shapes, const KernelSpec& spec, Index m) {
    return fit_kpca(shape_matrix(shapes), spec, m);
}

/// A pre-image that failed while sweeping; carries the sweep step (0-based).
class SweepDivergenceError : public DivergenceError {
public:
    SweepDivergenceError(const DivergenceError& cause, Index step)
        : DivergenceError("sweep step " + std::to_string(step) + ": " + cause.what(), cause.iteration(),
                          cause.iterate()),
          step_(step) {}

    Index step() const noexcept { return step_; }

private:
    Index step_;
};

struct KpcaSweep {
    Vector feature_means;  // per-component mean of the training features
    Vector feature_stddev; // per-component standard deviation (1/N)
    std::vector<Vector> features;
    std::vector<Shape> shapes;
    std::vector<PreimageResult> runs;

    bool all_converged() const {
        return std::all_of(runs.begin(), runs.end(), [](const PreimageResult& r) { return r.converged; });
    }
};

/// Varies kernel feature k (1-based) over [mean_k - c sd_k, mean_k + c sd_k]
/// in `steps` evenly spaced values, holding the other features at their
/// training means, and reconstructs each feature vector by pre-image.
inline KpcaSweep sweep_kpca_feature(const KpcaModel& model, Index k, double c, Index steps,
                                    const PreimageConfig& cfg = {}) {
    if (!is_gaussian(model.spec))
        throw UnsupportedKernelError("kernel PCA shape sweeps need a gaussian kernel, model uses " +
                                     describe(model.spec));
    require(k >= 1 && k <= model.components(),
            "feature " + std::to_string(k) + " outside [1, " + std::to_string(model.components()) + "]");
    require(c > 0.0, "sweep range factor c must be > 0");
    require(steps >= 2, "sweep needs at least 2 steps");
    require(model.input_dim() % 2 == 0 && model.input_dim() >= 6, "model was not fitted on shape vectors");

    KpcaSweep out;
    const Matrix train_features = kpca_transform(model, model.training);
    out.feature_means = train_features.colwise().mean().transpose();
    out.feature_stddev =
        ((train_features.rowwise() - out.feature_means.transpose()).colwise().squaredNorm() /
         static_cast<double>(train_features.rows()))
            .cwiseSqrt()
            .transpose();

    const double centre = out.feature_means(k - 1);
    const double half_width = c * out.feature_stddev(k - 1);
    for (Index s = 0; s < steps; ++s) {
        Vector y = out.feature_means;
        y(k - 1) = centre + half_width * static_cast<double>(2 * s - (steps - 1)) / static_cast<double>(steps - 1);
        out.features.push_back(std::move(y));
    }

    out.runs.resize(static_cast<std::size_t>(steps));
    parallel_for(steps, [&](Index s) {
        try {
            out.runs[static_cast<std::size_t>(s)] = kpca_preimage(model, out.features[static_cast<std::size_t>(s)], cfg);
        } catch (const DivergenceError& e) {
            throw SweepDivergenceError(e, s);
        }
    });
    for (const auto& r : out.runs) out.shapes.emplace_back(r.z);
    return out;
}

// ---------------------------------------------------------------------------
// PTS landmark files:
//   version: 1
//   n_points: <n>
//   {
//   x y        (n lines)
//   }

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline double parse_real(const std::string& tok, std::size_t line_no) {
    std::string_view v(tok);
    if (!v.empty() && v.front() == '+') v.remove_prefix(1);
    double d = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), d);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(d))
        throw ParseError("expected a number, got '" + tok + "'", line_no);
    return d;
}

} // namespace detail

inline Shape parse_pts(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::vector<std::size_t> numbers;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto toks = detail::split_ws(raw);
        if (toks.empty()) continue;
        lines.push_back(std::move(toks));
        numbers.push_back(line_no);
    }
    std::size_t cur = 0;
    auto expect_line = [&](const char* what) -> const std::vector<std::string>& {
        if (cur >= lines.size()) throw ParseError(std::string("unexpected end of file, expected ") + what, line_no);
        return lines[cur++];
    };
    // "key: value", also accepting "key : value" and "key:value"
    auto header_value = [&](const char* key) {
        const auto& toks = expect_line(key);
        std::string joined;
        for (const auto& t : toks) joined += t;
        const std::string prefix = std::string(key) + ":";
        if (joined.rfind(prefix, 0) != 0 || joined.size() == prefix.size())
            throw ParseError(std::string("expected '") + key + ": <value>'", numbers[cur - 1]);
        if (toks.size() > 3 || (toks.size() == 3 && toks[1] != ":"))
            throw ParseError("trailing content after header", numbers[cur - 1]);
        return joined.substr(prefix.size());
    };

    const std::string version = header_value("version");
    if (version != "1") throw ParseError("unsupported PTS version '" + version + "'", numbers[cur - 1]);
    const std::string count_text = header_value("n_points");
    long n = 0;
    {
        const auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), n);
        if (ec != std::errc() || ptr != count_text.data() + count_text.size() || n < 3)
            throw ParseError("bad n_points '" + count_text + "'", numbers[cur - 1]);
    }
    {
        const auto& open = expect_line("'{'");
        if (open.size() != 1 || open[0] != "{") throw ParseError("expected '{'", numbers[cur - 1]);
    }
    Vector coords(2 * n);
    for (long j = 0; j < n; ++j) {
        const auto& toks = expect_line("a landmark");
        const std::size_t ln = numbers[cur - 1];
        if (toks.size() == 1 && toks[0] == "}")
            throw ParseError("only " + std::to_string(j) + " of " + std::to_string(n) + " landmarks", ln);
        if (toks.size() != 2) throw ParseError("landmark line must hold exactly 'x y'", ln);
        coords(2 * j) = detail::parse_real(toks[0], ln);
        coords(2 * j + 1) = detail::parse_real(toks[1], ln);
    }
    {
        const auto& close = expect_line("'}'");
        if (close.size() != 1 || close[0] != "}") throw ParseError("expected '}'", numbers[cur - 1]);
    }
    if (cur != lines.size()) throw ParseError("content after closing '}'", numbers[cur]);
    return Shape(std::move(coords));
}

inline Shape read_pts(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return parse_pts(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

inline void write_pts(const Shape& shape, std::ostream& out) {
    out << "version: 1\nn_points: " << shape.points() << "\n{\n";
    for (Index j = 0; j < shape.points(); ++j) out << format_real(shape.x(j)) << ' ' << format_real(shape.y(j)) << '\n';
    out << "}\n";
}

inline void write_pts(const Shape& shape, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_pts(shape, out);
}

/// All *.pts files in a directory, sorted by file name.
inline std::vector<std::filesystem::path> list_pts_files(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".pts") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

} // namespace kpca_lab

#endif
