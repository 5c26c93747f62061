#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "falsebottom/bundle.hpp"
#include "support/testutil.hpp"

using namespace falsebottom;

namespace {

GridBundle awkward_bundle() {
    // Values chosen to stress the number formatting: non-terminating binary
    // fractions, extremes, and the sentinel itself.
    Grid<double> sv(3, 4);
    const double cells[12] = {-85.3, 0.1,   -1.0 / 3.0, -999.0,
                              -70.0, -65.5, 1e-17,      -302.25,
                              -999.0, -44.0, 123456.789, -0.0078125};
    for (std::size_t i = 0; i < 12; ++i) sv[i] = cells[i];

    Grid<std::int8_t> along(3, 4, 0), athwart(3, 4, 0);
    along.at(0, 0) = -128;
    along.at(2, 3) = 127;
    athwart.at(1, 1) = -1;

    EchogramMeta meta;
    meta.range_step_m = 0.1875;
    meta.frequency_khz = 38.0;
    meta.ping_interval_s = 2.0 / 3.0;
    meta.sound_speed_ms = 1481.3;
    meta.ping_times = {0, 10'000'000, 20'000'001, 18'446'744'073'709'551'615ull};

    Echogram e(std::move(sv), std::move(meta));
    AngleChannels angles = AngleChannels::for_echogram(std::move(along), std::move(athwart), e);
    SeabedLine seabed({12.5, std::nullopt, 1.0 / 7.0, 4000.0});
    return GridBundle{std::move(e), std::move(angles), std::move(seabed)};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void append_line(const std::filesystem::path& p, const std::string& line) {
    std::ofstream out(p, std::ios::app);
    out << line << '\n';
}

}  // namespace

TEST_CASE("write_bundle then read_bundle is bit-identical") {
    fbtest::TempDir dir("bundle-rt");
    GridBundle original = awkward_bundle();
    write_bundle(dir.path() / "a", original);
    GridBundle back = read_bundle(dir.path() / "a");

    // Defaulted equality compares doubles bitwise, which is exactly the
    // property the text format promises.
    CHECK(back == original);

    SUBCASE("and a second write produces byte-identical files") {
        write_bundle(dir.path() / "b", back);
        for (const char* name : {"meta", "sv", "along", "athwart", "seabed", "ping_times"}) {
            CAPTURE(name);
            CHECK(slurp(dir.path() / "a" / name) == slurp(dir.path() / "b" / name));
        }
    }
}

TEST_CASE("optional files are genuinely optional") {
    fbtest::TempDir dir("bundle-opt");
    std::mt19937 rng(9);
    Echogram e = fbtest::random_echogram(rng, 5, 6);
    AngleChannels angles = AngleChannels::for_echogram(
        fbtest::random_angle_grid(rng, 5, 6), fbtest::random_angle_grid(rng, 5, 6), e);
    GridBundle bundle{std::move(e), std::move(angles), std::nullopt};

    write_bundle(dir.path() / "x", bundle);
    CHECK(!std::filesystem::exists(dir.path() / "x" / "seabed"));
    CHECK(!std::filesystem::exists(dir.path() / "x" / "ping_times"));

    GridBundle back = read_bundle(dir.path() / "x");
    CHECK(!back.seabed.has_value());
    CHECK(back.echogram.ping_times().empty());
    CHECK(back == bundle);
}

TEST_CASE("random bundles survive the round trip") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
        Echogram e = fbtest::random_echogram(rng, rows, cols, 0.2);
        AngleChannels angles = AngleChannels::for_echogram(
            fbtest::random_angle_grid(rng, rows, cols),
            fbtest::random_angle_grid(rng, rows, cols), e);
        GridBundle bundle{std::move(e), std::move(angles), std::nullopt};

        fbtest::TempDir dir("bundle-prop");
        write_bundle(dir.path(), bundle);
        CHECK(read_bundle(dir.path()) == bundle);
    }
}

TEST_CASE("unknown meta keys are ignored") {
    fbtest::TempDir dir("bundle-meta");
    GridBundle bundle = awkward_bundle();
    write_bundle(dir.path() / "x", bundle);
    append_line(dir.path() / "x" / "meta", "future_knob = 3.14");
    append_line(dir.path() / "x" / "meta", "comment = free text with spaces");
    CHECK(read_bundle(dir.path() / "x") == bundle);
}

TEST_CASE("read_bundle rejects broken input") {
    fbtest::TempDir dir("bundle-bad");
    GridBundle bundle = awkward_bundle();

    SUBCASE("missing directory") {
        CHECK_THROWS_AS(read_bundle(dir.path() / "nope"), IoError);
    }
    SUBCASE("missing grid file") {
        write_bundle(dir.path() / "x", bundle);
        std::filesystem::remove(dir.path() / "x" / "along");
        CHECK_THROWS_AS(read_bundle(dir.path() / "x"), IoError);
    }
    SUBCASE("missing required meta key") {
        write_bundle(dir.path() / "x", bundle);
        std::ofstream(dir.path() / "x" / "meta") << "rows = 3\ncols = 4\n";
        CHECK_THROWS_AS(read_bundle(dir.path() / "x"), FormatError);
    }
    SUBCASE("unparsable number in a grid") {
        write_bundle(dir.path() / "x", bundle);
        std::ofstream out(dir.path() / "x" / "sv");
        out << "-60,-61,oops,-63\n-60,-61,-62,-63\n-60,-61,-62,-63\n";
        out.close();
        try {
            read_bundle(dir.path() / "x");
            FAIL("expected FormatError");
        } catch (const FormatError& e) {
            CHECK(e.offset() == 1);  // line number of the bad cell
            CHECK(std::string(e.what()).find("oops") != std::string::npos);
        }
    }
    SUBCASE("short row") {
        write_bundle(dir.path() / "x", bundle);
        std::ofstream out(dir.path() / "x" / "sv");
        out << "-60,-61,-62\n-60,-61,-62,-63\n-60,-61,-62,-63\n";
        out.close();
        CHECK_THROWS_AS(read_bundle(dir.path() / "x"), FormatError);
    }
    SUBCASE("wrong row count") {
        write_bundle(dir.path() / "x", bundle);
        std::ofstream out(dir.path() / "x" / "sv");
        out << "-60,-61,-62,-63\n";
        out.close();
        CHECK_THROWS_AS(read_bundle(dir.path() / "x"), FormatError);
    }
    SUBCASE("seabed field count differs from cols") {
        write_bundle(dir.path() / "x", bundle);
        std::ofstream(dir.path() / "x" / "seabed") << "12.5,*\n";
        CHECK_THROWS_AS(read_bundle(dir.path() / "x"), FormatError);
    }
    SUBCASE("angle count outside -128..127") {
        write_bundle(dir.path() / "x", bundle);
        std::ofstream out(dir.path() / "x" / "along");
        out << "0,0,0,200\n0,0,0,0\n0,0,0,0\n";
        out.close();
        CHECK_THROWS_AS(read_bundle(dir.path() / "x"), FormatError);
    }
}

TEST_CASE("mask text files round-trip") {
    fbtest::TempDir dir("mask-rt");
    std::mt19937 rng(4);
    Mask m = fbtest::random_mask(rng, 7, 9, 0.3);
    write_mask_text(dir.path() / "mask", m);
    CHECK(read_mask_text(dir.path() / "mask") == m);

    SUBCASE("cells other than 0/1 are rejected") {
        std::ofstream(dir.path() / "bad") << "0,1,2\n";
        CHECK_THROWS_AS(read_mask_text(dir.path() / "bad"), FormatError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(read_mask_text(dir.path() / "absent"), IoError);
    }
}
