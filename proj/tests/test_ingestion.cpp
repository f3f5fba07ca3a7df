#include "oracles.hpp"
#include "probfrac/csv.hpp"
#include "probfrac/dataset.hpp"
#include "probfrac/error.hpp"
#include "probfrac/image.hpp"

#include <doctest.h>

#include <fstream>

using namespace probfrac;
namespace fs = std::filesystem;

namespace {

void write_bytes(const fs::path& p, const std::string& bytes) {
    std::ofstream out(p, std::ios::binary);
    out << bytes;
}

void make_class(const fs::path& dir, int n, const std::string& ext = ".pgm") {
    fs::create_directories(dir);
    for (int i = 0; i < n; ++i) {
        save_pgm(GrayImage(4, 4, static_cast<std::uint8_t>(i)), dir / ("img" + std::to_string(i) + ext));
    }
}

}  // namespace

TEST_SUITE("ingestion") {

TEST_CASE("2x2 P5 bytes pass through unchanged") {
    oracle::TempDir tmp("pgm");
    write_bytes(tmp / "a.pgm", std::string("P5\n2 2\n255\n") + std::string("\x00\xff\x11\x2a", 4));
    const GrayImage img = load_image(tmp / "a.pgm");
    CHECK(img.width() == 2);
    CHECK(img.height() == 2);
    CHECK(std::vector<std::uint8_t>(img.pixels().begin(), img.pixels().end()) ==
          std::vector<std::uint8_t>{0, 255, 17, 42});
}

TEST_CASE("PGM header comments and 16-bit rasters") {
    oracle::TempDir tmp("pgm16");
    // 65535 / 257 = 255, 514 / 257 = 2, 256 / 257 = 0.
    write_bytes(tmp / "b.pgm", std::string("P5 # comment\n2 # w\n2\n65535\n") +
                                   std::string("\xff\xff\x02\x02\x01\x00\x00\x00", 8));
    const GrayImage img = load_image(tmp / "b.pgm");
    CHECK(img.at(0, 0) == 255);
    CHECK(img.at(1, 0) == 2);
    CHECK(img.at(0, 1) == 0);
    CHECK(img.at(1, 1) == 0);
}

TEST_CASE("PGM errors name the path and the cause") {
    oracle::TempDir tmp("pgmerr");
    write_bytes(tmp / "trunc.pgm", "P5\n4 4\n255\nabc");
    write_bytes(tmp / "maxval.pgm", std::string("P5\n2 2\n100\n") + std::string(4, '\0'));
    write_bytes(tmp / "tiny.pgm", std::string("P5\n1 1\n255\n") + std::string(1, '\0'));
    write_bytes(tmp / "ascii.pgm", "P2\n2 2\n255\n0 0 0 0\n");
    for (const char* name : {"trunc.pgm", "maxval.pgm", "tiny.pgm", "ascii.pgm", "missing.pgm"}) {
        CAPTURE(name);
        try {
            load_image(tmp / name);
            FAIL("expected LoadError");
        } catch (const LoadError& e) {
            CHECK(std::string(e.what()).find(name) != std::string::npos);
        }
    }
    CHECK_THROWS_WITH_AS(load_image(tmp / "tiny.pgm"), doctest::Contains("image too small"), LoadError);
}

TEST_CASE("luminance is BT.601 with round-half-up in integer arithmetic") {
    // 0.299*10 + 0.587*20 + 0.114*30 = 18.15
    CHECK(luminance(10, 20, 30) == 18);
    CHECK(luminance(255, 255, 255) == 255);
    CHECK(luminance(0, 0, 0) == 0);
    // 0.299*1 + 0.587*1 + 0.114*0 = 0.886 -> 1
    CHECK(luminance(1, 1, 0) == 1);
    // 0.299*0 + 0.587*0 + 0.114*5 = 0.57 -> 1; 0.114*4 = 0.456 -> 0
    CHECK(luminance(0, 0, 5) == 1);
    CHECK(luminance(0, 0, 4) == 0);
    // 0.114*250 = 28.5 exactly: ties round up.
    CHECK(luminance(0, 0, 250) == 29);
}

TEST_CASE("PNG gray, RGB and 16-bit inputs") {
    oracle::TempDir tmp("png");
    REQUIRE(oracle::write_png(tmp / "g8.png", 2, 2, 1, 8, {0, 255, 17, 42}));
    const GrayImage g8 = load_image(tmp / "g8.png");
    CHECK(g8 == GrayImage(2, 2, std::vector<std::uint8_t>{0, 255, 17, 42}));

    REQUIRE(oracle::write_png(tmp / "rgb.png", 2, 2, 3, 8, {10, 20, 30, 255, 255, 255, 0, 0, 0, 255, 0, 0}));
    const GrayImage rgb = load_image(tmp / "rgb.png");
    CHECK(rgb.at(0, 0) == 18);
    CHECK(rgb.at(1, 0) == 255);
    CHECK(rgb.at(0, 1) == 0);
    CHECK(rgb.at(1, 1) == luminance(255, 0, 0));

    REQUIRE(oracle::write_png(tmp / "g16.png", 2, 2, 1, 16, {65535, 514, 256, 0}));
    const GrayImage g16 = load_image(tmp / "g16.png");
    CHECK(g16 == GrayImage(2, 2, std::vector<std::uint8_t>{255, 2, 0, 0}));

    // Channels are reduced to 8 bits before the luma weights are applied.
    REQUIRE(oracle::write_png(tmp / "rgb16.png", 2, 2, 3, 16,
                              {2570, 5140, 7710, 0, 0, 0, 65535, 65535, 65535, 0, 0, 0}));
    const GrayImage rgb16 = load_image(tmp / "rgb16.png");
    CHECK(rgb16.at(0, 0) == 18);
    CHECK(rgb16.at(0, 1) == 255);

    REQUIRE(oracle::write_png(tmp / "one.png", 1, 1, 1, 8, {7}));
    CHECK_THROWS_WITH_AS(load_image(tmp / "one.png"), doctest::Contains("image too small"), LoadError);

    write_bytes(tmp / "bad.png", std::string("\x89PNG\r\n\x1a\n", 8) + "garbage");
    CHECK_THROWS_AS(load_image(tmp / "bad.png"), LoadError);
}

TEST_CASE("P5 save/load roundtrip is the identity") {
    oracle::TempDir tmp("roundtrip");
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const GrayImage img = oracle::random_image(2 + static_cast<int>(seed % 7), 3 + static_cast<int>(seed % 5), seed);
        save_pgm(img, tmp / "r.pgm");
        CHECK(load_image(tmp / "r.pgm") == img);
    }
}

TEST_CASE("GrayImage rejects inconsistent shapes") {
    CHECK_THROWS_AS(GrayImage(1, 4, std::uint8_t{0}), ConfigError);
    CHECK_THROWS_AS(GrayImage(2, 2, std::vector<std::uint8_t>(3)), ConfigError);
}

TEST_CASE("scan_dataset enumerates classes and samples in sorted order") {
    oracle::TempDir tmp("scan");
    make_class(tmp / "grass", 10);
    make_class(tmp / "bark", 10, ".PNG");  // extension match is case-insensitive; content is PGM
    write_bytes(tmp / "grass" / "notes.txt", "ignored");
    const DatasetManifest m = scan_dataset(tmp.path(), 5);
    CHECK(m.classes == std::vector<std::string>{"bark", "grass"});
    CHECK(m.samples.size() == 20);
    CHECK(m.class_size(0) == 10);
    CHECK(m.samples.front().label == 0);
    CHECK(m.samples.back().label == 1);
    for (std::size_t i = 1; i < m.samples.size(); ++i) {
        const auto& a = m.samples[i - 1];
        const auto& b = m.samples[i];
        CHECK((a.label < b.label || (a.label == b.label && a.path.filename() < b.path.filename())));
    }
    // Repeated scans agree.
    const DatasetManifest again = scan_dataset(tmp.path(), 5);
    CHECK(manifest_csv(again) == manifest_csv(m));
    CHECK(manifest_csv(m).rfind("path,class\n", 0) == 0);
}

TEST_CASE("scan_dataset errors") {
    oracle::TempDir tmp("scanerr");
    CHECK_THROWS_WITH_AS(scan_dataset(tmp.path()), doctest::Contains("no class directories"), ManifestError);
    make_class(tmp / "only", 6);
    CHECK_THROWS_WITH_AS(scan_dataset(tmp.path()), doctest::Contains("at least 2 classes required"), ManifestError);
    make_class(tmp / "small", 3);
    CHECK_THROWS_WITH_AS(scan_dataset(tmp.path(), 5), doctest::Contains("small"), ManifestError);
    CHECK_NOTHROW(scan_dataset(tmp.path(), 3));
    CHECK_THROWS_AS(scan_dataset(tmp / "missing"), LoadError);
}

TEST_CASE("CSV helpers") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(2.0) == "2");
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("q\"") == "\"q\"\"\"");
    oracle::TempDir tmp("atomic");
    write_file_atomic(tmp / "x.csv", "hello\n");
    CHECK(read_file(tmp / "x.csv") == "hello\n");
    CHECK_FALSE(fs::exists(tmp / "x.csv.tmp"));
}

}
