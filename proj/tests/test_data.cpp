#include "kpca_lab/data.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace kpca_lab;

TEST(RandomStream, FixedSequence) {
    // splitmix64 reference value for input 0 (from the published algorithm)
    EXPECT_EQ(RandomStream::splitmix64(0), 0xE220A8397B1DCDAFULL);
    RandomStream a(7, 0), b(7, 0), c(7, 1);
    for (int i = 0; i < 10; ++i) {
        const double x = a.uniform();
        EXPECT_EQ(x, b.uniform());
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
    }
    EXPECT_NE(RandomStream(7, 0).uniform(), c.uniform());
}

TEST(RandomStream, NormalMoments) {
    RandomStream rng(123, 0);
    double sum = 0, sq = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double v = rng.normal();
        sum += v;
        sq += v * v;
    }
    EXPECT_NEAR(sum / n, 0.0, 0.01);
    EXPECT_NEAR(sq / n, 1.0, 0.01);
}

TEST(GenTwoSpheres, NoiselessRadii) {
    const LabeledDataset ds = gen_two_spheres({200, 40.0, 100.0, 0.0, 5});
    for (Index i = 0; i < 200; ++i) {
        const double r = ds.features.row(i).norm();
        const double expected = ds.labels[static_cast<std::size_t>(i)] == 1 ? 40.0 : 100.0;
        EXPECT_NEAR(r, expected, 1e-12 * expected);
    }
}

TEST(GenTwoSpheres, SeedDeterminism) {
    const auto a = gen_two_spheres({50, 1.0, 2.0, 0.1, 99});
    const auto b = gen_two_spheres({50, 1.0, 2.0, 0.1, 99});
    const auto c = gen_two_spheres({50, 1.0, 2.0, 0.1, 100});
    EXPECT_EQ(a.features, b.features);
    EXPECT_EQ(a.labels, b.labels);
    EXPECT_NE(a.features, c.features);
}

TEST(GenTwoSpheres, ClassStreamsAreIndependentOfSize) {
    // class 2 draws come from their own stream: the first class-2 points do not
    // depend on how many class-1 points precede them
    const auto small = gen_two_spheres({10, 1.0, 2.0, 0.1, 4});
    const auto large = gen_two_spheres({20, 1.0, 2.0, 0.1, 4});
    EXPECT_EQ(small.features.row(5), large.features.row(10));
    EXPECT_EQ(small.features.row(0), large.features.row(0));
}

TEST(GenTwoSpheres, DefaultParametersMeanOuterRadius) {
    const auto ds = gen_two_spheres({1000, 40.0, 100.0, 1.0, 42});
    int ones = 0, twos = 0;
    double outer = 0.0;
    for (Index i = 0; i < 1000; ++i) {
        if (ds.labels[static_cast<std::size_t>(i)] == 1) {
            ++ones;
        } else {
            ++twos;
            outer += ds.features.row(i).norm();
        }
    }
    EXPECT_EQ(ones, 500);
    EXPECT_EQ(twos, 500);
    EXPECT_GE(outer / 500, 99.0);
    EXPECT_LE(outer / 500, 101.0);
}

TEST(GenTwoSpheres, InvalidParams) {
    EXPECT_THROW(gen_two_spheres({11, 1.0, 2.0, 0.1, 0}), ArgumentError);
    EXPECT_THROW(gen_two_spheres({0, 1.0, 2.0, 0.1, 0}), ArgumentError);
    EXPECT_THROW(gen_two_spheres({10, 1.0, 1.0, 0.1, 0}), ArgumentError);
    EXPECT_THROW(gen_two_spheres({10, -1.0, 1.0, 0.1, 0}), ArgumentError);
    EXPECT_THROW(gen_two_spheres({10, 1.0, 2.0, -0.1, 0}), ArgumentError);
}

TEST(Csv, SingleValue) {
    std::stringstream io;
    write_csv_matrix(DataMatrix::Constant(1, 1, 3.5), io);
    EXPECT_EQ(io.str(), "3.5\n");
    EXPECT_EQ(parse_csv_matrix(io)(0, 0), 3.5);
}

TEST(Csv, ParseErrors) {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_csv_matrix(in);
    };
    EXPECT_THROW(parse(""), ParseError);
    try {
        parse("1,2\n3,4\n5\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    try {
        parse("1,2\n3,abc\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(parse("1,\n"), ParseError);
    EXPECT_THROW(parse("1,2\n\n3,4\n"), ParseError);
}

TEST(Csv, ToleratesSpacesAndCrLf) {
    std::istringstream in(" 1.5 , -2\r\n+3e2,4\n");
    const DataMatrix m = parse_csv_matrix(in);
    EXPECT_EQ(m.rows(), 2);
    EXPECT_EQ(m(0, 0), 1.5);
    EXPECT_EQ(m(1, 0), 300.0);
}

TEST(CsvProperty, RoundTripIsExact) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        const DataMatrix m = oracle::random_matrix(rng, 1 + trial % 5, 1 + trial % 4, std::pow(10.0, trial % 9 - 4));
        std::stringstream io;
        write_csv_matrix(m, io);
        EXPECT_EQ(parse_csv_matrix(io), m);
    }
}

TEST(Csv, FileRoundTripAndLabels) {
    const auto dir = std::filesystem::temp_directory_path() / "kpca_lab_test_data";
    std::filesystem::create_directories(dir);
    const DataMatrix m = (DataMatrix(2, 3) << 1, 2, 3, 4, 5, 6.25).finished();
    write_csv_matrix(m, dir / "m.csv");
    EXPECT_EQ(read_csv_matrix(dir / "m.csv"), m);
    write_labels({1, 2, 2, -1}, dir / "l.csv");
    EXPECT_EQ(read_labels(dir / "l.csv"), (std::vector<int>{1, 2, 2, -1}));
    EXPECT_THROW(read_labels(dir / "m.csv"), ParseError);
    EXPECT_THROW(read_csv_matrix(dir / "missing.csv"), ParseError);
    std::filesystem::remove_all(dir);
}

TEST(Pgm, AsciiDirectRead) {
    std::istringstream in("P2\n# comment\n2 2\n3\n0 1\n2 3\n");
    const PgmImage img = parse_pgm(in);
    EXPECT_EQ(img.width, 2);
    EXPECT_EQ(img.pixels, (Vector(4) << 0, 1, 2, 3).finished());
}

TEST(Pgm, BinaryMatchesAscii) {
    std::string bin = "P5\n2 2\n255\n";
    bin += std::string{char(0), char(1), char(2), char(3)};
    std::istringstream b(bin), a("P2 2 2 255 0 1 2 3");
    EXPECT_EQ(parse_pgm(b).pixels, parse_pgm(a).pixels);
}

TEST(Pgm, SixteenBitBigEndian) {
    std::string bin = "P5 1 2 65535\n";
    bin += std::string{char(0x01), char(0x02), char(0xFF), char(0xFF)};
    std::istringstream in(bin);
    const PgmImage img = parse_pgm(in);
    EXPECT_EQ(img.pixels(0), 258.0);
    EXPECT_EQ(img.pixels(1), 65535.0);
}

TEST(Pgm, FaceSizedImageHas32256Features) {
    PgmImage img;
    img.width = 168;
    img.height = 192;
    img.maxval = 255;
    img.pixels = Vector::LinSpaced(168 * 192, 0, 255).array().round();
    std::stringstream io;
    write_pgm(img, io, true);
    EXPECT_EQ(parse_pgm(io).pixels.size(), 32256);
}

TEST(Pgm, MalformedInputs) {
    for (const std::string text : {"P3 2 2 255 0 0 0 0", "P2 2 x 255", "P2 2 2 255 0 1 2", "P2 2 2 255 0 1 2 300",
                                   "P5 2 2 255\n\x01\x02", "P2 0 2 255", "P2 1 1 70000 0"}) {
        std::istringstream in(text);
        EXPECT_THROW(parse_pgm(in), ParseError) << text;
    }
}

TEST(PgmProperty, WriteReadRoundTrip) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        PgmImage img;
        img.width = 1 + trial % 7;
        img.height = 1 + trial % 5;
        img.maxval = trial % 2 ? 255 : 4095;
        std::uniform_int_distribution<int> px(0, img.maxval);
        img.pixels.resize(img.width * img.height);
        for (Index i = 0; i < img.pixels.size(); ++i) img.pixels(i) = px(rng);
        for (bool binary : {false, true}) {
            std::stringstream io;
            write_pgm(img, io, binary);
            EXPECT_EQ(parse_pgm(io).pixels, img.pixels);
        }
    }
}
