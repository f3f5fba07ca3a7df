#include "probfrac/error.hpp"
#include "probfrac/rng.hpp"
#include "probfrac/synth.hpp"

#include <doctest.h>

#include <set>

using namespace probfrac;

TEST_SUITE("synth") {

TEST_CASE("xoshiro256** reference stream and bounded draws") {
    // State seeded directly is not exposed; check stability of our seeding instead.
    Xoshiro256 a(42), b(42), c(42, 1);
    for (int i = 0; i < 100; ++i) {
        const auto x = a();
        CHECK(x == b());
        (void)c();
    }
    Xoshiro256 r(1);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const auto v = r.below(7);
        CHECK(v < 7);
        seen.insert(v);
        const double u = r.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    CHECK(seen.size() == 7);
    CHECK(Xoshiro256(42)() != Xoshiro256(42, 1)());
}

TEST_CASE("synthesized textures are deterministic and span the gray range") {
    for (auto kind : {SynthKind::blur_noise, SynthKind::grating, SynthKind::checkerboard}) {
        const GrayImage a = synthesize(kind, 64, 7, 3);
        CHECK(a == synthesize(kind, 64, 7, 3));
        CHECK(a != synthesize(kind, 64, 7, 4));
        CHECK(a.width() == 64);
        CHECK(a.max_value() > a.min_value());
    }
    const GrayImage blur = synthesize(SynthKind::blur_noise, 32, 1, 0);
    CHECK(blur.min_value() == 0);
    CHECK(blur.max_value() == 255);
}

TEST_CASE("kind names round-trip and bad parameters are rejected") {
    for (auto kind : {SynthKind::blur_noise, SynthKind::grating, SynthKind::checkerboard}) {
        CHECK(parse_synth_kind(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(parse_synth_kind("perlin"), ConfigError);
    SynthParams p;
    p.sigma = 0.0;
    CHECK_THROWS_AS(synthesize(SynthKind::blur_noise, 16, 1, 0, p), ConfigError);
    p = {};
    p.period = 1;
    CHECK_THROWS_AS(synthesize(SynthKind::grating, 16, 1, 0, p), ConfigError);
    CHECK_THROWS_AS(synthesize(SynthKind::grating, 1, 1, 0), ConfigError);
}

}
