#include <doctest.h>

#include <random>

#include "falsebottom/alias.hpp"
#include "support/oracles.hpp"

using namespace falsebottom;

namespace {

AliasGeometry survey_geometry() {
    AliasGeometry g;
    g.sound_speed_ms = 1500.0;
    g.ping_interval_s = 2.0;
    g.logging_range_m = 1000.0;
    return g;
}

}  // namespace

TEST_CASE("default maximum range table") {
    auto table = default_max_range_table();
    CHECK(table.at(18) == 7000.0);
    CHECK(table.at(38) == 2800.0);
    CHECK(table.at(70) == 1100.0);
    CHECK(table.at(120) == 850.0);
    CHECK(table.at(200) == 550.0);
}

TEST_CASE("aliased_range folds a deep seabed into the listening window") {
    AliasGeometry g = survey_geometry();

    CHECK(aliased_range(2000.0, g) == 500.0);   // mod(4000, 3000) / 2
    CHECK(aliased_range(1500.0, g) == 0.0);     // exact multiple of the wrap
    CHECK(aliased_range(1600.0, g) == 100.0);   // mod(3200, 3000) / 2

    // the constraint R_L < R_S is enforced
    CHECK_THROWS_AS(aliased_range(900.0, g), DomainError);
    CHECK_THROWS_AS(aliased_range(1000.0, g), DomainError);
}

TEST_CASE("candidate_true_depths enumerates the feasible unfoldings") {
    AliasGeometry g = survey_geometry();

    SUBCASE("the 38 kHz worked example has exactly one candidate") {
        auto depths = candidate_true_depths(500.0, g, 38);
        REQUIRE(depths.size() == 1);
        CHECK(depths[0] == 2000.0);
        CHECK(depths == fbtest::enumerate_candidates(500.0, g, 38));
    }
    SUBCASE("a long-reach frequency yields the whole ladder") {
        auto depths = candidate_true_depths(100.0, g, 18);
        CHECK(depths == std::vector<double>{1600.0, 3100.0, 4600.0, 6100.0});
        CHECK(depths == fbtest::enumerate_candidates(100.0, g, 18));
    }
    SUBCASE("an empty feasible interval yields no candidates") {
        AliasGeometry short_reach = g;
        short_reach.max_range_m[38] = 900.0;  // below the logging range
        CHECK(candidate_true_depths(500.0, short_reach, 38).empty());
    }
    SUBCASE("unknown frequency and out-of-range alias are rejected") {
        CHECK_THROWS_AS(candidate_true_depths(500.0, g, 33), LookupError);
        CHECK_THROWS_AS(candidate_true_depths(-1.0, g, 38), DomainError);
        CHECK_THROWS_AS(candidate_true_depths(1500.0, g, 38), DomainError);  // = wrap
    }
}

TEST_CASE("cross_frequency_plausible refutes out-of-reach candidates") {
    AliasGeometry g = survey_geometry();
    CHECK(!cross_frequency_plausible(2000.0, 70, g));  // 70 kHz cannot reach 2000 m
    CHECK(cross_frequency_plausible(2000.0, 38, g));
    CHECK(cross_frequency_plausible(2000.0, 18, g));
    CHECK_THROWS_AS(cross_frequency_plausible(2000.0, 99, g), LookupError);
}

TEST_CASE("alias range and candidate depths invert each other") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> speed(1400.0, 1550.0);
    std::uniform_real_distribution<double> interval(0.5, 4.0);
    std::uniform_real_distribution<double> logging(200.0, 1200.0);

    for (int trial = 0; trial < 200; ++trial) {
        AliasGeometry g;
        g.sound_speed_ms = speed(rng);
        g.ping_interval_s = interval(rng);
        g.logging_range_m = logging(rng);

        for (int frequency : {18, 38, 70, 120, 200}) {
            const double rmax = g.max_range_m.at(frequency);
            if (rmax <= g.logging_range_m) continue;
            std::uniform_real_distribution<double> depth(
                std::nextafter(g.logging_range_m, rmax), std::nextafter(rmax, 0.0));
            const double seabed = depth(rng);
            const double alias = aliased_range(seabed, g);

            CHECK(alias >= 0.0);
            CHECK(alias < g.wrap_m());

            auto depths = candidate_true_depths(alias, g, frequency);
            bool recovered = false;
            for (std::size_t i = 0; i < depths.size(); ++i) {
                CHECK(depths[i] > g.logging_range_m);
                CHECK(depths[i] < rmax);
                if (i > 0) {
                    CHECK(depths[i] > depths[i - 1]);
                    CHECK(depths[i] - depths[i - 1] == doctest::Approx(g.wrap_m()).epsilon(1e-12));
                }
                if (std::abs(depths[i] - seabed) <= 1e-6) recovered = true;
            }
            CHECK(recovered);
        }
    }
}
