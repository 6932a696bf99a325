// kpca_lab command-line front end.
//
//   kpca_lab gen-spheres  --seed S --out-dir DIR
//   kpca_lab embed        --input X.csv --method pca|kpca --out-dir DIR
//   kpca_lab classify     --train-features F --train-labels L --out-dir DIR
//   kpca_lab preimage     --model model.bin --features Y.csv --out-dir DIR
//   kpca_lab asm-sweep    --pts-dir DIR --method pca|kpca --out-dir DIR
//
// Every subcommand writes manifest.json next to its outputs.

#include "kpca_lab/kpca_lab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace kpca_lab;

namespace {

/// Usage problems detected after CLI11 parsing; exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Completed but something did not converge; exit code 1 after outputs are written.
struct Incomplete {
    std::string reason;
};

class RunManifest {
public:
    RunManifest(std::string subcommand, std::vector<std::string> argv) {
        doc_["subcommand"] = std::move(subcommand);
        doc_["toolkit_version"] = version_string;
        doc_["command_line"] = std::move(argv);
        doc_["parameters"] = json::object();
        doc_["inputs"] = json::object();
        doc_["outputs"] = json::array();
    }

    json& parameters() { return doc_["parameters"]; }
    json& inputs() { return doc_["inputs"]; }
    json& root() { return doc_; }
    void output(const fs::path& p) { doc_["outputs"].push_back(p.filename().string()); }

    void write(const fs::path& dir) {
        output(dir / "manifest.json");
        std::ofstream out(dir / "manifest.json");
        if (!out) throw std::runtime_error("cannot write " + (dir / "manifest.json").string());
        out << doc_.dump(2) << '\n';
    }

private:
    json doc_;
};

void prepare_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw std::runtime_error("cannot create output directory " + dir.string());
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw std::runtime_error("cannot write " + path.string());
}

std::string abs_path(const fs::path& p) { return fs::absolute(p).lexically_normal().string(); }

struct KernelFlags {
    std::string kernel = "gaussian";
    std::string sigma = "auto";
    int degree = 5;
    double offset = 0.0;
    CLI::Option* kernel_opt = nullptr;
    CLI::Option* sigma_opt = nullptr;
    CLI::Option* degree_opt = nullptr;
    CLI::Option* offset_opt = nullptr;

    void add_to(CLI::App* app) {
        kernel_opt = app->add_option("--kernel", kernel, "linear | poly | gaussian")
                         ->check(CLI::IsMember({"linear", "poly", "polynomial", "gaussian"}))
                         ->capture_default_str();
        sigma_opt = app->add_option("--sigma", sigma, "gaussian width, or 'auto' for 5 x mean nearest-neighbour distance")
                        ->capture_default_str();
        degree_opt = app->add_option("--degree", degree, "polynomial degree")->capture_default_str();
        offset_opt = app->add_option("--offset", offset, "polynomial offset c >= 0")->capture_default_str();
    }

    bool any_given() const {
        return kernel_opt->count() || sigma_opt->count() || degree_opt->count() || offset_opt->count();
    }

    /// Resolves the kernel, computing sigma from `x` when requested.
    KernelSpec resolve(const DataMatrix& x, json& params) const {
        const bool poly = kernel == "poly" || kernel == "polynomial";
        if (sigma_opt->count() && kernel != "gaussian")
            throw ArgumentError("--sigma only applies to the gaussian kernel (kernel is " + kernel + ")");
        if ((degree_opt->count() || offset_opt->count()) && !poly)
            throw ArgumentError("--degree/--offset only apply to the polynomial kernel (kernel is " + kernel + ")");
        KernelSpec spec;
        if (kernel == "linear") {
            spec = LinearKernel{};
        } else if (poly) {
            spec = PolynomialKernel{degree, offset};
            params["degree"] = degree;
            params["offset"] = offset;
        } else {
            double s = 0.0;
            if (sigma == "auto") {
                s = select_sigma(x);
                params["sigma_rule"] = "5 * mean nearest-neighbour distance";
            } else {
                try {
                    std::size_t used = 0;
                    s = std::stod(sigma, &used);
                    if (used != sigma.size()) throw std::invalid_argument(sigma);
                } catch (const std::exception&) {
                    throw ArgumentError("--sigma must be a positive number or 'auto', got '" + sigma + "'");
                }
            }
            spec = GaussianKernel{s};
            params["sigma"] = s;
        }
        validate(spec);
        params["kernel"] = describe(spec);
        return spec;
    }
};

// Maps two distinct label values onto +1 (smaller) and -1 (larger).
struct BinaryLabels {
    int positive = 0;
    int negative = 0;

    static BinaryLabels from(const std::vector<int>& labels) {
        std::vector<int> distinct(labels.begin(), labels.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() != 2)
            throw ArgumentError("classification needs exactly two label values, found " +
                                std::to_string(distinct.size()));
        return {distinct[0], distinct[1]};
    }

    std::vector<int> map(const std::vector<int>& labels) const {
        std::vector<int> out;
        out.reserve(labels.size());
        for (int l : labels) {
            if (l != positive && l != negative)
                throw ArgumentError("label " + std::to_string(l) + " not seen in the training labels");
            out.push_back(l == positive ? 1 : -1);
        }
        return out;
    }
};

// ---------------------------------------------------------------------------

void run_gen_spheres(const SpheresParams& p, const fs::path& out_dir, RunManifest& manifest) {
    prepare_dir(out_dir);
    const LabeledDataset ds = gen_two_spheres(p);
    write_csv_matrix(ds.features, out_dir / "features.csv");
    manifest.output(out_dir / "features.csv");
    write_labels(ds.labels, out_dir / "labels.csv");
    manifest.output(out_dir / "labels.csv");
    auto& params = manifest.parameters();
    params["n"] = p.total;
    params["r1"] = p.r1;
    params["r2"] = p.r2;
    params["noise"] = p.noise;
    params["prng"] = "mt19937_64 seeded by splitmix64(seed + class * 0x9E3779B97F4A7C15), Box-Muller cosine branch";
    manifest.root()["seed"] = p.seed;
    manifest.write(out_dir);
    std::cout << "wrote " << p.total << " points to " << out_dir.string() << '\n';
}

struct EmbedFlags {
    fs::path input;
    fs::path labels;
    fs::path model_in;
    fs::path out_dir;
    std::string method = "kpca";
    Index components = 2;
    CLI::Option* method_opt = nullptr;
    CLI::Option* components_opt = nullptr;
    KernelFlags kernel;
};

void run_embed(const EmbedFlags& f, RunManifest& manifest) {
    const DataMatrix x = read_csv_matrix(f.input);
    manifest.inputs()["features"] = abs_path(f.input);
    std::vector<int> labels;
    if (!f.labels.empty()) {
        labels = read_labels(f.labels);
        manifest.inputs()["labels"] = abs_path(f.labels);
        if (static_cast<Index>(labels.size()) != x.rows())
            throw ArgumentError("label file has " + std::to_string(labels.size()) + " rows, features have " +
                                std::to_string(x.rows()));
    }
    auto& params = manifest.parameters();

    AnyModel model;
    if (!f.model_in.empty()) {
        if (f.method_opt->count() || f.components_opt->count() || f.kernel.any_given())
            throw UsageError("--model-in cannot be combined with fitting flags");
        model = load_model(f.model_in);
        manifest.inputs()["model"] = abs_path(f.model_in);
        params["mode"] = "transform";
    } else if (f.method == "pca") {
        if (f.kernel.any_given()) throw ArgumentError("kernel flags do not apply to --method pca");
        const bool dual = x.cols() > x.rows();
        model = dual ? fit_pca_dual(x, f.components) : fit_pca(x, f.components);
        params["mode"] = "fit";
        params["method"] = "pca";
        params["solver"] = dual ? "dual (N x N inner products)" : "covariance";
        params["components"] = f.components;
    } else {
        const KernelSpec spec = f.kernel.resolve(x, params);
        model = fit_kpca(x, spec, f.components);
        params["mode"] = "fit";
        params["method"] = "kpca";
        params["components_requested"] = f.components;
        params["components"] = std::get<KpcaModel>(model).components();
    }

    Matrix features;
    if (const auto* pca = std::get_if<PcaModel>(&model)) {
        if (pca->input_dim() != x.cols()) throw ArgumentError("model dimension does not match input features");
        features = pca_project_rows(*pca, x);
        params["eigenvalues"] = std::vector<double>(pca->eigenvalues.data(), pca->eigenvalues.data() + pca->eigenvalues.size());
    } else {
        const auto& k = std::get<KpcaModel>(model);
        features = kpca_transform(k, x);
        params["eigenvalues"] = std::vector<double>(k.eigenvalues.data(), k.eigenvalues.data() + k.eigenvalues.size());
    }

    prepare_dir(f.out_dir);
    write_csv_matrix(features, f.out_dir / "features.csv");
    manifest.output(f.out_dir / "features.csv");
    if (f.model_in.empty()) {
        save_model(model, f.out_dir / "model.bin");
        manifest.output(f.out_dir / "model.bin");
    }
    if (features.cols() >= 2) {
        write_text(f.out_dir / "scatter.svg", svg::scatter(features, labels));
        manifest.output(f.out_dir / "scatter.svg");
    } else {
        std::cerr << "note: fewer than 2 components, scatter plot skipped\n";
    }
    manifest.write(f.out_dir);
    std::cout << "embedded " << x.rows() << " rows into " << features.cols() << " components\n";
}

struct ClassifyFlags {
    fs::path train_features, train_labels, test_features, test_labels, out_dir;
};

void run_classify(const ClassifyFlags& f, RunManifest& manifest) {
    const DataMatrix xtr = read_csv_matrix(f.train_features);
    const std::vector<int> ltr = read_labels(f.train_labels);
    manifest.inputs()["train_features"] = abs_path(f.train_features);
    manifest.inputs()["train_labels"] = abs_path(f.train_labels);
    if (static_cast<Index>(ltr.size()) != xtr.rows()) throw ArgumentError("training labels/features row mismatch");
    const BinaryLabels mapping = BinaryLabels::from(ltr);
    const LinearClassifier c = fit_linear(xtr, mapping.map(ltr));

    json report;
    report["positive_label"] = mapping.positive;
    report["negative_label"] = mapping.negative;
    report["weights"] = std::vector<double>(c.weights.data(), c.weights.data() + c.weights.size());
    report["train_error"] = error_rate(c, xtr, mapping.map(ltr));
    std::cout << "train_error " << report["train_error"].get<double>() << '\n';
    if (!f.test_features.empty()) {
        const DataMatrix xte = read_csv_matrix(f.test_features);
        const std::vector<int> lte = read_labels(f.test_labels);
        manifest.inputs()["test_features"] = abs_path(f.test_features);
        manifest.inputs()["test_labels"] = abs_path(f.test_labels);
        if (xte.cols() != xtr.cols())
            throw ArgumentError("test features have " + std::to_string(xte.cols()) + " columns, training has " +
                                std::to_string(xtr.cols()));
        if (static_cast<Index>(lte.size()) != xte.rows()) throw ArgumentError("test labels/features row mismatch");
        report["test_error"] = error_rate(c, xte, mapping.map(lte));
        std::cout << "test_error " << report["test_error"].get<double>() << '\n';
    }
    prepare_dir(f.out_dir);
    write_text(f.out_dir / "report.json", report.dump(2) + "\n");
    manifest.output(f.out_dir / "report.json");
    manifest.write(f.out_dir);
}

struct PreimageFlags {
    fs::path model, features, out_dir;
    int max_iter = 1000;
    double tol = 1e-9;
};

std::optional<Incomplete> run_preimage(const PreimageFlags& f, RunManifest& manifest) {
    const AnyModel any = load_model(f.model);
    const auto* model = std::get_if<KpcaModel>(&any);
    if (!model) throw UnsupportedKernelError("pre-images need a kernel PCA model; " + f.model.string() + " holds PCA");
    const DataMatrix y = read_csv_matrix(f.features);
    manifest.inputs()["model"] = abs_path(f.model);
    manifest.inputs()["features"] = abs_path(f.features);
    manifest.parameters()["max_iterations"] = f.max_iter;
    manifest.parameters()["tolerance"] = f.tol;
    if (y.cols() != model->components())
        throw ArgumentError("feature file has " + std::to_string(y.cols()) + " columns, model has " +
                            std::to_string(model->components()) + " components");

    PreimageConfig cfg;
    cfg.max_iterations = f.max_iter;
    cfg.tolerance = f.tol;
    DataMatrix z = DataMatrix::Constant(y.rows(), model->input_dim(), std::numeric_limits<double>::quiet_NaN());
    std::ostringstream report;
    report << "row,iterations,converged,status\n";
    std::vector<Index> failing;
    for (Index i = 0; i < y.rows(); ++i) {
        try {
            const PreimageResult r = kpca_preimage(*model, y.row(i), cfg);
            z.row(i) = r.z.transpose();
            report << i << ',' << r.iterations << ',' << (r.converged ? 1 : 0) << ','
                   << (r.converged ? "converged" : "max_iterations") << '\n';
            if (!r.converged) failing.push_back(i);
        } catch (const DivergenceError& e) {
            report << i << ',' << e.iteration() << ",0,diverged\n";
            failing.push_back(i);
        }
    }
    prepare_dir(f.out_dir);
    write_csv_matrix(z, f.out_dir / "preimages.csv");
    manifest.output(f.out_dir / "preimages.csv");
    write_text(f.out_dir / "convergence.csv", report.str());
    manifest.output(f.out_dir / "convergence.csv");
    manifest.root()["failing_rows"] = failing;
    manifest.write(f.out_dir);
    std::cout << "reconstructed " << y.rows() << " rows, " << failing.size() << " without convergence\n";
    if (failing.empty()) return std::nullopt;
    std::string rows;
    for (Index r : failing) rows += (rows.empty() ? "" : ",") + std::to_string(r);
    return Incomplete{"pre-image did not converge for rows " + rows};
}

struct SweepFlags {
    fs::path pts_dir, roles, out_dir;
    std::string method = "pca";
    std::string sigma = "auto";
    Index feature = 1;
    Index steps = 5;
    double c = 500.0;
    Index m = 10;
    int max_iter = 1000;
    double tol = 1e-9;
    CLI::Option* sigma_opt = nullptr;
    CLI::Option* c_opt = nullptr;
    CLI::Option* m_opt = nullptr;
};

std::optional<Incomplete> run_asm_sweep(const SweepFlags& f, RunManifest& manifest) {
    const auto files = list_pts_files(f.pts_dir);
    if (files.size() < 2) throw ArgumentError("need at least 2 .pts files in " + f.pts_dir.string());
    std::vector<Shape> raw;
    for (const auto& p : files) raw.push_back(read_pts(p));
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].points() != raw.front().points())
            throw ArgumentError(files[i].string() + " has " + std::to_string(raw[i].points()) + " landmarks, " +
                                files.front().string() + " has " + std::to_string(raw.front().points()));
        try {
            normalize_shapes({raw[i]});
        } catch (const InputError& e) {
            throw InputError(files[i].string() + ": degenerate shape (" + e.what() + ")");
        }
    }
    const std::vector<Shape> shapes = normalize_shapes(raw);

    const LandmarkRoleMap roles = f.roles.empty() ? default_bioid_roles() : read_role_map(f.roles);
    validate_roles(roles, shapes.front().points());
    manifest.inputs()["pts_dir"] = abs_path(f.pts_dir);
    manifest.inputs()["pts_files"] = files.size();
    manifest.inputs()["roles"] = f.roles.empty() ? std::string("default BioID-20") : abs_path(f.roles);
    auto& params = manifest.parameters();
    params["method"] = f.method;
    params["feature"] = f.feature;
    params["steps"] = f.steps;

    std::vector<Shape> swept;
    std::optional<Incomplete> incomplete;
    if (f.method == "pca") {
        if (f.sigma_opt->count() || f.c_opt->count() || f.m_opt->count())
            throw ArgumentError("--sigma, --c and --m only apply to --method kpca");
        const Index dim = shapes.front().coords().size();
        const Index t = std::min<Index>(dim, static_cast<Index>(shapes.size()));
        const ShapeModel model = fit_shape_model(shapes, t);
        params["modes"] = t;
        params["eigenvalue"] = model.eigenvalues(std::clamp<Index>(f.feature, 1, t) - 1);
        swept = sweep_pca_feature(model, f.feature, f.steps);
    } else {
        const DataMatrix x = shape_matrix(shapes);
        double sigma = 0.0;
        if (f.sigma == "auto") {
            sigma = select_sigma(x);
        } else {
            try {
                sigma = std::stod(f.sigma);
            } catch (const std::exception&) {
                throw ArgumentError("--sigma must be a positive number or 'auto'");
            }
        }
        const KpcaModel model = fit_kpca(x, GaussianKernel{sigma}, f.m);
        params["sigma"] = sigma;
        params["c"] = f.c;
        params["m_requested"] = f.m;
        params["m"] = model.components();
        params["max_iterations"] = f.max_iter;
        params["tolerance"] = f.tol;
        PreimageConfig cfg;
        cfg.max_iterations = f.max_iter;
        cfg.tolerance = f.tol;
        const KpcaSweep sweep = sweep_kpca_feature(model, f.feature, f.c, f.steps, cfg);
        json runs = json::array();
        for (const auto& r : sweep.runs) runs.push_back({{"iterations", r.iterations}, {"converged", r.converged}});
        manifest.root()["preimages"] = runs;
        swept = sweep.shapes;
        if (!sweep.all_converged()) incomplete = Incomplete{"some sweep pre-images did not converge"};
    }

    prepare_dir(f.out_dir);
    DataMatrix rows(static_cast<Index>(swept.size()), swept.front().coords().size());
    for (std::size_t s = 0; s < swept.size(); ++s) {
        rows.row(static_cast<Index>(s)) = swept[s].coords().transpose();
        char name[32];
        std::snprintf(name, sizeof name, "step_%02zu.svg", s);
        write_text(f.out_dir / name, render_face_svg(swept[s], roles));
        manifest.output(f.out_dir / name);
    }
    write_csv_matrix(rows, f.out_dir / "shapes.csv");
    manifest.output(f.out_dir / "shapes.csv");
    manifest.write(f.out_dir);
    std::cout << "wrote " << swept.size() << " sweep shapes to " << f.out_dir.string() << '\n';
    return incomplete;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kpca_lab: PCA, kernel PCA, Gaussian pre-images and shape models"};
    app.set_version_flag("--version", std::string(version_string));
    app.require_subcommand(1);
    std::vector<std::string> args(argv, argv + argc);

    // gen-spheres
    SpheresParams spheres;
    fs::path spheres_out;
    auto* gen = app.add_subcommand("gen-spheres", "two noisy concentric spheres (CSV features + labels)");
    gen->add_option("--seed", spheres.seed, "PRNG seed")->required();
    gen->add_option("--n", spheres.total, "total points (even)")->capture_default_str();
    gen->add_option("--r1", spheres.r1, "class 1 radius")->capture_default_str();
    gen->add_option("--r2", spheres.r2, "class 2 radius")->capture_default_str();
    gen->add_option("--noise", spheres.noise, "per-coordinate gaussian noise deviation")->capture_default_str();
    gen->add_option("--out-dir", spheres_out, "output directory")->required();

    // embed
    EmbedFlags embed;
    auto* emb = app.add_subcommand("embed", "project a CSV dataset with PCA or kernel PCA");
    emb->add_option("--input", embed.input, "feature CSV")->required()->check(CLI::ExistingFile);
    emb->add_option("--labels", embed.labels, "optional label CSV (colours the scatter plot)")->check(CLI::ExistingFile);
    embed.method_opt = emb->add_option("--method", embed.method, "pca | kpca")
                           ->check(CLI::IsMember({"pca", "kpca"}))
                           ->capture_default_str();
    embed.components_opt = emb->add_option("--components", embed.components, "number of components")
                               ->check(CLI::PositiveNumber)
                               ->capture_default_str();
    emb->add_option("--model-in", embed.model_in, "transform with a previously saved model instead of fitting")
        ->check(CLI::ExistingFile);
    emb->add_option("--out-dir", embed.out_dir, "output directory")->required();
    embed.kernel.add_to(emb);

    // classify
    ClassifyFlags cls;
    auto* clf = app.add_subcommand("classify", "least-squares linear classifier error rates");
    clf->add_option("--train-features", cls.train_features)->required()->check(CLI::ExistingFile);
    clf->add_option("--train-labels", cls.train_labels)->required()->check(CLI::ExistingFile);
    auto* tf = clf->add_option("--test-features", cls.test_features)->check(CLI::ExistingFile);
    auto* tl = clf->add_option("--test-labels", cls.test_labels)->check(CLI::ExistingFile);
    tf->needs(tl);
    tl->needs(tf);
    clf->add_option("--out-dir", cls.out_dir, "output directory")->required();

    // preimage
    PreimageFlags pre;
    auto* pim = app.add_subcommand("preimage", "gaussian kernel PCA pre-images of feature rows");
    pim->add_option("--model", pre.model, "model.bin written by embed")->required()->check(CLI::ExistingFile);
    pim->add_option("--features", pre.features, "feature CSV (one row per pre-image)")->required()->check(CLI::ExistingFile);
    pim->add_option("--max-iter", pre.max_iter)->check(CLI::PositiveNumber)->capture_default_str();
    pim->add_option("--tol", pre.tol)->check(CLI::PositiveNumber)->capture_default_str();
    pim->add_option("--out-dir", pre.out_dir, "output directory")->required();

    // asm-sweep
    SweepFlags sweep;
    auto* asm_cmd = app.add_subcommand("asm-sweep", "vary one shape-model feature and render each step as SVG");
    asm_cmd->add_option("--pts-dir", sweep.pts_dir, "directory of .pts landmark files")->required()->check(CLI::ExistingDirectory);
    asm_cmd->add_option("--method", sweep.method, "pca | kpca")->check(CLI::IsMember({"pca", "kpca"}))->capture_default_str();
    asm_cmd->add_option("--feature", sweep.feature, "1-based feature to vary")->capture_default_str();
    asm_cmd->add_option("--steps", sweep.steps, "number of sweep steps (>= 2)")->capture_default_str();
    sweep.c_opt = asm_cmd->add_option("--c", sweep.c, "kpca range half-width in feature standard deviations")->capture_default_str();
    sweep.m_opt = asm_cmd->add_option("--m", sweep.m, "kpca components used for pre-images")->check(CLI::PositiveNumber)->capture_default_str();
    sweep.sigma_opt = asm_cmd->add_option("--sigma", sweep.sigma, "gaussian width or 'auto'")->capture_default_str();
    asm_cmd->add_option("--roles", sweep.roles, "landmark role map (group = i, j, ...)")->check(CLI::ExistingFile);
    asm_cmd->add_option("--max-iter", sweep.max_iter)->check(CLI::PositiveNumber)->capture_default_str();
    asm_cmd->add_option("--tol", sweep.tol)->check(CLI::PositiveNumber)->capture_default_str();
    asm_cmd->add_option("--out-dir", sweep.out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        std::optional<Incomplete> incomplete;
        if (*gen) {
            RunManifest m("gen-spheres", args);
            run_gen_spheres(spheres, spheres_out, m);
        } else if (*emb) {
            RunManifest m("embed", args);
            run_embed(embed, m);
        } else if (*clf) {
            RunManifest m("classify", args);
            run_classify(cls, m);
        } else if (*pim) {
            RunManifest m("preimage", args);
            incomplete = run_preimage(pre, m);
        } else if (*asm_cmd) {
            RunManifest m("asm-sweep", args);
            incomplete = run_asm_sweep(sweep, m);
        }
        if (incomplete) {
            std::cerr << "error: " << incomplete->reason << '\n';
            return 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
