#include "commands.hpp"
#include "oracles.hpp"
#include "probfrac/csv.hpp"
#include "probfrac/image.hpp"
#include "probfrac/synth.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace probfrac;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("dim on a constant image with alpha -1 prints D = 2") {
    oracle::TempDir tmp("dim");
    save_pgm(GrayImage(64, 64, std::uint8_t{90}), tmp / "flat.pgm");
    const auto r = run({"dim", (tmp / "flat.pgm").string(), "--alpha", "-1", "--scales", "2,4,8"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("delta,t,N_P,u\n", 0) == 0);
    const auto pos = r.out.find("D = ");
    REQUIRE(pos != std::string::npos);
    CHECK(std::abs(std::stod(r.out.substr(pos + 4)) - 2.0) < 1e-9);
    CHECK(r.out.find("D = 2.000000000000") != std::string::npos);
}

TEST_CASE("dim with alpha 0 yields a zero u column") {
    oracle::TempDir tmp("dim0");
    save_pgm(oracle::random_image(40, 40, 3), tmp / "r.pgm");
    const auto r = run({"dim", (tmp / "r.pgm").string(), "--alpha", "0", "--out", (tmp / "c.csv").string()});
    REQUIRE(r.code == 0);
    std::istringstream csv(read_file(tmp / "c.csv"));
    std::string line;
    std::getline(csv, line);
    int rows = 0;
    while (std::getline(csv, line)) {
        CHECK(line.substr(line.rfind(',') + 1) == "0");
        ++rows;
    }
    CHECK(rows == 10);
    CHECK(r.out.rfind("D = ", 0) == 0);
}

TEST_CASE("exit codes") {
    oracle::TempDir tmp("codes");
    CHECK(run({"dim", (tmp / "missing.pgm").string()}).code == cli::kExitIo);
    save_pgm(GrayImage(64, 64, std::uint8_t{1}), tmp / "ok.pgm");
    CHECK(run({"dim", (tmp / "ok.pgm").string(), "--variant", "box"}).code == cli::kExitConfig);
    CHECK(run({"dim", (tmp / "ok.pgm").string(), "--scales", "2,4,40"}).code == cli::kExitConfig);
    CHECK(run({"extract", (tmp / "ok.pgm").string(), "--a0", "0.01"}).code == cli::kExitConfig);
    CHECK(run({"synth", "plasma", "2", "16", "1", "--out-dir", (tmp / "s").string()}).code == cli::kExitConfig);
    CHECK(run({"frobnicate"}).code == cli::kExitConfig);
    CHECK(run({"--help"}).code == cli::kExitOk);
    const auto missing = run({"eval", (tmp / "nowhere").string()});
    CHECK(missing.code == cli::kExitIo);
    CHECK(missing.err.find("nowhere") != std::string::npos);
}

TEST_CASE("eval reports a class that is too small by name") {
    oracle::TempDir tmp("small");
    write_synthetic(SynthKind::blur_noise, 6, 32, 1, tmp / "data" / "cloudy");
    write_synthetic(SynthKind::grating, 3, 32, 1, tmp / "data" / "stripes");
    const auto r = run({"eval", (tmp / "data").string(), "--out-dir", (tmp / "out").string()});
    CHECK(r.code == cli::kExitConfig);
    CHECK(r.err.find("stripes") != std::string::npos);
}

TEST_CASE("extract on a single image and on a dataset") {
    oracle::TempDir tmp("extract");
    write_synthetic(SynthKind::blur_noise, 10, 32, 5, tmp / "data" / "a");
    write_synthetic(SynthKind::checkerboard, 10, 32, 5, tmp / "data" / "b");

    const auto one = run({"extract", (tmp / "data" / "a" / "blur-noise_000.pgm").string()});
    REQUIRE(one.code == 0);
    CHECK(one.out.rfind("source,label,d1,d2,d3,d4,d5,d6,d7,d8\n", 0) == 0);
    CHECK(count_lines(one.out) == 2);

    const auto all = run({"extract", (tmp / "data").string(), "--out", (tmp / "d.csv").string(), "--quiet"});
    REQUIRE(all.code == 0);
    const std::string first = read_file(tmp / "d.csv");
    CHECK(count_lines(first) == 21);
    CHECK(first.find(",a,") != std::string::npos);
    REQUIRE(run({"extract", (tmp / "data").string(), "--out", (tmp / "d.csv").string(), "--threads", "3",
                 "--quiet"})
                .code == 0);
    CHECK(read_file(tmp / "d.csv") == first);

    const auto seven = run({"extract", (tmp / "data").string(), "--t-keep", "7", "--quiet"});
    CHECK(seven.out.rfind("source,label,d1,d2,d3,d4,d5,d6,d7\n", 0) == 0);
}

TEST_CASE("synth is deterministic per seed") {
    oracle::TempDir tmp("synth");
    REQUIRE(run({"synth", "blur-noise", "10", "64", "7", "--out-dir", (tmp / "a").string()}).code == 0);
    REQUIRE(run({"synth", "blur-noise", "10", "64", "7", "--out-dir", (tmp / "b").string()}).code == 0);
    REQUIRE(run({"synth", "blur-noise", "10", "64", "8", "--out-dir", (tmp / "c").string()}).code == 0);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(tmp / "a")) {
        ++files;
        const auto img = load_image(e.path());
        CHECK(img.width() == 64);
        CHECK(img.height() == 64);
        CHECK(read_file(e.path()) == read_file(tmp / "b" / e.path().filename()));
        CHECK(read_file(e.path()) != read_file(tmp / "c" / e.path().filename()));
    }
    CHECK(files == 10);
}

TEST_CASE("eval writes reports and a summary line") {
    oracle::TempDir tmp("eval");
    write_synthetic(SynthKind::blur_noise, 10, 48, 3, tmp / "data" / "blur");
    write_synthetic(SynthKind::checkerboard, 10, 48, 3, tmp / "data" / "board");
    const auto out = tmp / "out";
    const auto r = run({"eval", (tmp / "data").string(), "--out-dir", out.string(), "--quiet",
                        "--sweep-components", "--classifier", "nearest-mean"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find(" \xC2\xB1 ") != std::string::npos);
    CHECK(r.out.find("(5 folds, 20 samples)") != std::string::npos);
    CHECK(count_lines(read_file(out / "folds.csv")) == 6);
    CHECK(read_file(out / "confusion.csv").rfind("expected\\predicted,blur,board\n", 0) == 0);
    CHECK(count_lines(read_file(out / "sweep.csv")) == 9);
    CHECK(count_lines(read_file(out / "descriptors.csv")) == 21);

    const auto other = tmp / "out2";
    REQUIRE(run({"eval", (tmp / "data").string(), "--out-dir", other.string(), "--quiet", "--seed", "7",
                 "--classifier", "nearest-mean"})
                .code == 0);
    const std::string a = read_file(out / "folds.csv");
    const std::string b = read_file(other / "folds.csv");
    CHECK(a.substr(0, a.find('\n')) == b.substr(0, b.find('\n')));
    CHECK(count_lines(a) == count_lines(b));
    const std::string fa = read_file(out / "assignments.csv");
    CHECK(fa.rfind("source,class,fold\nblur/blur-noise_000.pgm,blur,", 0) == 0);
    CHECK(count_lines(fa) == 21);
    CHECK(fa != read_file(other / "assignments.csv"));
}

TEST_CASE("manifest subcommand") {
    oracle::TempDir tmp("manifest");
    write_synthetic(SynthKind::grating, 5, 16, 1, tmp / "data" / "x");
    write_synthetic(SynthKind::grating, 5, 16, 2, tmp / "data" / "y");
    const auto r = run({"manifest", (tmp / "data").string()});
    REQUIRE(r.code == 0);
    CHECK(count_lines(r.out) == 11);
    CHECK(r.out.rfind("path,class\n", 0) == 0);
}

#ifdef PROBFRAC_CLI_PATH
TEST_CASE("installed binary exit codes") {
    oracle::TempDir tmp("binary");
    const std::string exe = PROBFRAC_CLI_PATH;
    auto status = [](const std::string& cmd) {
        const int s = std::system((cmd + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(s);
    };
    CHECK(status(exe + " dim " + (tmp / "none.pgm").string()) == 2);
    CHECK(status(exe + " synth bogus 1 8 1 --out-dir " + tmp.path().string()) == 3);
    CHECK(status(exe + " synth grating 2 16 1 --out-dir " + tmp.path().string()) == 0);
}
#endif

}
