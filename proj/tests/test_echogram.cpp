#include <doctest.h>

#include <random>

#include "falsebottom/echogram.hpp"
#include "support/testutil.hpp"

using namespace falsebottom;

namespace {

Mask mask_from(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.begin()->size();
    Mask m(r, c, false);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (int v : row) m.set(i, j++, v != 0);
        ++i;
    }
    return m;
}

Grid<double> grid_from(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.begin()->size();
    Grid<double> g(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (double v : row) g.at(i, j++) = v;
        ++i;
    }
    return g;
}

}  // namespace

TEST_CASE("combine_masks ORs cellwise") {
    Mask empty(2, 2, false);
    Mask full(2, 2, true);
    Mask a = mask_from({{1, 0}, {0, 0}});
    Mask b = mask_from({{0, 0}, {0, 1}});

    CHECK(combine_masks(empty, a) == a);
    CHECK(combine_masks(full, a) == full);
    CHECK(combine_masks(a, b) == mask_from({{1, 0}, {0, 1}}));
}

TEST_CASE("combine_masks rejects mismatched shapes, naming both") {
    Mask a(2, 3, false);
    Mask b(3, 2, false);
    CHECK_THROWS_AS(combine_masks(a, b), ShapeError);
    try {
        combine_masks(a, b);
    } catch (const ShapeError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("2x3") != std::string::npos);
        CHECK(msg.find("3x2") != std::string::npos);
    }
}

TEST_CASE("combine_masks is commutative, associative and idempotent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
        Mask a = fbtest::random_mask(rng, rows, cols);
        Mask b = fbtest::random_mask(rng, rows, cols);
        Mask c = fbtest::random_mask(rng, rows, cols);
        CHECK(combine_masks(a, b) == combine_masks(b, a));
        CHECK(combine_masks(combine_masks(a, b), c) == combine_masks(a, combine_masks(b, c)));
        CHECK(combine_masks(a, a) == a);
    }
}

TEST_CASE("apply_mask substitutes the token under the mask only") {
    Echogram e(grid_from({{-60.0, -80.0}}), 0.5, 38.0);

    SUBCASE("all-false mask is the identity") {
        CHECK(apply_mask(e, Mask(1, 2, false), -999.0) == e);
    }
    SUBCASE("all-true mask replaces everything") {
        Echogram out = apply_mask(e, Mask(1, 2, true), -999.0);
        CHECK(out.sv().at(0, 0) == -999.0);
        CHECK(out.sv().at(0, 1) == -999.0);
    }
    SUBCASE("single cell") {
        Echogram out = apply_mask(e, mask_from({{1, 0}}), -999.0);
        CHECK(out.sv().at(0, 0) == -999.0);
        CHECK(out.sv().at(0, 1) == -80.0);
        CHECK(out.range_step_m() == e.range_step_m());
        CHECK(out.frequency_khz() == e.frequency_khz());
    }
    SUBCASE("shape mismatch") {
        CHECK_THROWS_AS(apply_mask(e, Mask(2, 2, false), -999.0), ShapeError);
    }
}

TEST_CASE("apply_mask is idempotent and consistent with mask_stats") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = 2 + rng() % 10, cols = 2 + rng() % 10;
        Echogram e = fbtest::random_echogram(rng, rows, cols, 0.0);  // no -999 cells
        Mask m = fbtest::random_mask(rng, rows, cols, 0.3);
        Echogram once = apply_mask(e, m, -999.0);
        CHECK(apply_mask(once, m, -999.0) == once);

        std::size_t token_cells = 0;
        for (std::size_t i = 0; i < rows * cols; ++i) {
            if (once.sv()[i] == -999.0) ++token_cells;
        }
        CHECK(token_cells == mask_stats(m).count);
    }
}

TEST_CASE("mask_stats counts and fractions") {
    CHECK(mask_stats(Mask(10, 10, false)).count == 0);
    CHECK(mask_stats(Mask(10, 10, false)).fraction == 0.0);
    CHECK(mask_stats(Mask(4, 5, true)).count == 20);
    CHECK(mask_stats(Mask(4, 5, true)).fraction == 1.0);

    MaskStats s = mask_stats(mask_from({{1, 0}, {1, 0}}));
    CHECK(s.count == 2);
    CHECK(s.fraction == 0.5);

    MaskStats empty = mask_stats(Mask());
    CHECK(empty.count == 0);
    CHECK(empty.fraction == 0.0);
}

TEST_CASE("Echogram validates its invariants") {
    Grid<double> ok(2, 2, -70.0);

    CHECK_THROWS_AS(Echogram(ok, 0.0, 38.0), ParameterError);   // range_step
    CHECK_THROWS_AS(Echogram(ok, 0.5, -1.0), ParameterError);   // frequency

    Grid<double> with_nan = ok;
    with_nan.at(0, 1) = std::nan("");
    CHECK_THROWS_AS(Echogram(with_nan, 0.5, 38.0), ParameterError);

    Grid<double> with_sentinel = ok;
    with_sentinel.at(1, 1) = -999.0;
    Echogram e(with_sentinel, 0.5, 38.0);
    CHECK(e.is_valid(0, 0));
    CHECK(!e.is_valid(1, 1));
    CHECK(e.validity().count() == 3);
}

TEST_CASE("Echogram ping times must be one per column and non-decreasing") {
    Grid<double> sv(2, 3, -70.0);
    EchogramMeta meta;
    meta.range_step_m = 0.5;
    meta.frequency_khz = 38.0;

    meta.ping_times = {10, 20};  // wrong length
    CHECK_THROWS_AS(Echogram(sv, meta), ParameterError);

    meta.ping_times = {30, 20, 10};  // decreasing
    CHECK_THROWS_AS(Echogram(sv, meta), ParameterError);

    meta.ping_times = {10, 10, 30};  // ties allowed
    CHECK_NOTHROW(Echogram(sv, meta));
}

TEST_CASE("AngleChannels validity follows the companion echogram") {
    Grid<double> sv(2, 2, -70.0);
    sv.at(0, 1) = -999.0;
    Echogram e(sv, 0.5, 38.0);

    Grid<std::int8_t> along(2, 2, 5);
    Grid<std::int8_t> athwart(2, 2, -5);
    AngleChannels angles = AngleChannels::for_echogram(along, athwart, e);
    CHECK(angles.valid().get(0, 0));
    CHECK(!angles.valid().get(0, 1));

    Grid<std::int8_t> wrong(3, 2, 0);
    CHECK_THROWS_AS(AngleChannels(along, wrong), ShapeError);
    CHECK_THROWS_AS(AngleChannels::for_echogram(wrong, wrong, e), ShapeError);
}

TEST_CASE("SeabedLine rejects nonpositive ranges") {
    CHECK_NOTHROW(SeabedLine({500.0, std::nullopt, 120.5}));
    CHECK_THROWS_AS(SeabedLine({0.0}), ParameterError);
    CHECK_THROWS_AS(SeabedLine({std::optional<double>(-3.0)}), ParameterError);
}
