#include "kpca_lab/data.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;
using namespace kpca_lab;

namespace {

const std::string cli = KPCA_LAB_CLI;
const fs::path faces = fs::path(KPCA_LAB_DATA_DIR) / "faces";

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        root_ = fs::temp_directory_path() /
                ("kpca_lab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(root_);
        fs::create_directories(root_);
    }
    void TearDown() override { fs::remove_all(root_); }

    int run(const std::string& args) const {
        const std::string cmd = "'" + cli + "' " + args + " >'" + (root_ / "stdout.txt").string() + "' 2>'" +
                                (root_ / "stderr.txt").string() + "'";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string stderr_text() const { return slurp(root_ / "stderr.txt"); }

    static std::string slurp(const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    std::string dir(const std::string& name) const { return "'" + (root_ / name).string() + "'"; }
    fs::path path(const std::string& name) const { return root_ / name; }

    fs::path root_;
};

nlohmann::json read_json(const fs::path& p) {
    std::ifstream in(p);
    return nlohmann::json::parse(in);
}

} // namespace

TEST_F(Cli, VersionAndUsage) {
    EXPECT_EQ(run("--version"), 0);
    EXPECT_EQ(run(""), 2);
    EXPECT_EQ(run("gen-spheres --out-dir " + dir("x")), 2);
    EXPECT_EQ(run("frobnicate"), 2);
    EXPECT_EQ(run("embed --help"), 0);
}

TEST_F(Cli, GenSpheresIsDeterministic) {
    ASSERT_EQ(run("gen-spheres --seed 5 --n 10 --out-dir " + dir("a")), 0);
    ASSERT_EQ(run("gen-spheres --seed 5 --n 10 --out-dir " + dir("b")), 0);
    EXPECT_EQ(slurp(path("a/features.csv")), slurp(path("b/features.csv")));
    const DataMatrix x = read_csv_matrix(path("a/features.csv"));
    EXPECT_EQ(x.rows(), 10);
    EXPECT_EQ(x.cols(), 3);
    EXPECT_EQ(read_labels(path("a/labels.csv")), (std::vector<int>{1, 1, 1, 1, 1, 2, 2, 2, 2, 2}));
    const auto m = read_json(path("a/manifest.json"));
    EXPECT_EQ(m["subcommand"], "gen-spheres");
    EXPECT_EQ(m["seed"], 5);
    EXPECT_EQ(m["outputs"], (nlohmann::json::array({"features.csv", "labels.csv", "manifest.json"})));
    EXPECT_EQ(run("gen-spheres --seed 5 --n 11 --out-dir " + dir("c")), 2);
}

TEST_F(Cli, EmbedWithEveryMethod) {
    ASSERT_EQ(run("gen-spheres --seed 1 --n 40 --out-dir " + dir("d")), 0);
    const std::string in = "--input " + dir("d/features.csv") + " --labels " + dir("d/labels.csv");
    ASSERT_EQ(run("embed " + in + " --method pca --out-dir " + dir("pca")), 0);
    ASSERT_EQ(run("embed " + in + " --kernel gaussian --sigma auto --out-dir " + dir("gauss")), 0);
    ASSERT_EQ(run("embed " + in + " --kernel poly --degree 2 --components 3 --out-dir " + dir("poly")), 0);
    EXPECT_EQ(read_csv_matrix(path("pca/features.csv")).cols(), 2);
    EXPECT_EQ(read_csv_matrix(path("gauss/features.csv")).rows(), 40);
    EXPECT_EQ(read_csv_matrix(path("poly/features.csv")).cols(), 3);
    for (const char* d : {"pca", "gauss", "poly"}) {
        EXPECT_TRUE(fs::exists(path(d) / "model.bin")) << d;
        EXPECT_TRUE(fs::exists(path(d) / "scatter.svg")) << d;
        EXPECT_TRUE(fs::exists(path(d) / "manifest.json")) << d;
    }
    EXPECT_GT(read_json(path("gauss/manifest.json"))["parameters"]["sigma"].get<double>(), 0.0);

    ASSERT_EQ(run("embed --input " + dir("d/features.csv") + " --model-in " + dir("gauss/model.bin") + " --out-dir " +
                  dir("again")),
              0);
    EXPECT_EQ(slurp(path("again/features.csv")), slurp(path("gauss/features.csv")));
}

TEST_F(Cli, EmbedArgumentErrors) {
    ASSERT_EQ(run("gen-spheres --seed 1 --n 20 --out-dir " + dir("d")), 0);
    const std::string in = "embed --input " + dir("d/features.csv") + " --out-dir " + dir("o");
    EXPECT_EQ(run(in + " --kernel linear --sigma 2"), 2);
    EXPECT_NE(stderr_text().find("sigma"), std::string::npos);
    EXPECT_EQ(run(in + " --kernel gaussian --degree 3"), 2);
    EXPECT_EQ(run(in + " --components 0"), 2);
    EXPECT_EQ(run(in + " --components 21"), 2);
    EXPECT_EQ(run(in + " --kernel rbf"), 2);
}

TEST_F(Cli, ClassifyIdenticalTrainAndTest) {
    ASSERT_EQ(run("gen-spheres --seed 2 --n 30 --out-dir " + dir("d")), 0);
    const std::string f = dir("d/features.csv"), l = dir("d/labels.csv");
    ASSERT_EQ(run("classify --train-features " + f + " --train-labels " + l + " --test-features " + f +
                  " --test-labels " + l + " --out-dir " + dir("c")),
              0);
    const auto report = read_json(path("c/report.json"));
    EXPECT_EQ(report["train_error"], report["test_error"]);
    EXPECT_EQ(report["positive_label"], 1);
    EXPECT_EQ(run("classify --train-features " + f + " --train-labels " + l + " --test-features " + f +
                  " --out-dir " + dir("e")),
              2);
}

TEST_F(Cli, PreimageReportsNonConvergence) {
    ASSERT_EQ(run("gen-spheres --seed 3 --n 40 --out-dir " + dir("d")), 0);
    ASSERT_EQ(run("embed --input " + dir("d/features.csv") + " --components 8 --out-dir " + dir("e")), 0);
    const std::string base = "preimage --model " + dir("e/model.bin") + " --features " + dir("e/features.csv");
    EXPECT_EQ(run(base + " --out-dir " + dir("ok")), 0);
    EXPECT_EQ(read_csv_matrix(path("ok/preimages.csv")).rows(), 40);
    EXPECT_EQ(run(base + " --max-iter 1 --out-dir " + dir("one")), 1);
    EXPECT_NE(stderr_text().find("row"), std::string::npos);
    EXPECT_NE(slurp(path("one/convergence.csv")).find(",0,max_iterations"), std::string::npos);

    ASSERT_EQ(run("embed --input " + dir("d/features.csv") + " --kernel linear --out-dir " + dir("lin")), 0);
    EXPECT_EQ(run("preimage --model " + dir("lin/model.bin") + " --features " + dir("lin/features.csv") +
                  " --out-dir " + dir("bad")),
              2);
}

TEST_F(Cli, AsmSweepPcaMiddleStepIsMeanShape) {
    ASSERT_EQ(run("asm-sweep --pts-dir '" + faces.string() + "' --method pca --steps 5 --out-dir " + dir("s")), 0);
    for (int s = 0; s < 5; ++s) EXPECT_TRUE(fs::exists(path("s") / ("step_0" + std::to_string(s) + ".svg")));
    const DataMatrix rows = read_csv_matrix(path("s/shapes.csv"));
    ASSERT_EQ(rows.rows(), 5);
    EXPECT_LT((rows.row(2) - 0.5 * (rows.row(0) + rows.row(4))).norm(), 1e-9);
    EXPECT_GT((rows.row(0) - rows.row(4)).norm(), 1e-3);

    ASSERT_EQ(run("asm-sweep --pts-dir '" + faces.string() + "' --method pca --steps 2 --out-dir " + dir("two")), 0);
    EXPECT_EQ(read_csv_matrix(path("two/shapes.csv")).rows(), 2);
    EXPECT_EQ(run("asm-sweep --pts-dir '" + faces.string() + "' --steps 1 --out-dir " + dir("one")), 2);
    EXPECT_EQ(run("asm-sweep --pts-dir '" + faces.string() + "' --c 3 --out-dir " + dir("c")), 2);
}

TEST_F(Cli, AsmSweepKpca) {
    ASSERT_EQ(run("asm-sweep --pts-dir '" + faces.string() + "' --method kpca --c 500 --m 10 --out-dir " + dir("k")),
              0);
    const auto m = read_json(path("k/manifest.json"));
    EXPECT_EQ(m["preimages"].size(), 5u);
    for (const auto& r : m["preimages"]) EXPECT_TRUE(r["converged"].get<bool>());
    EXPECT_EQ(read_csv_matrix(path("k/shapes.csv")).cols(), 40);
}

TEST_F(Cli, AsmSweepRejectsMismatchedLandmarks) {
    fs::create_directories(path("pts"));
    fs::copy_file(faces / "face_000.pts", path("pts/a.pts"));
    fs::copy_file(faces / "face_001.pts", path("pts/b.pts"));
    std::ofstream(path("pts/c.pts")) << "version: 1\nn_points: 3\n{\n0 0\n1 0\n0 1\n}\n";
    EXPECT_EQ(run("asm-sweep --pts-dir " + dir("pts") + " --method pca --out-dir " + dir("o")), 2);
    EXPECT_NE(stderr_text().find("c.pts"), std::string::npos);
}
