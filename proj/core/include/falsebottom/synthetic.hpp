#pragma once

#include <cstdint>
#include <vector>

#include "falsebottom/bundle.hpp"

namespace falsebottom {

// Generator for echograms with a known, labelled aliased-seabed band. Used
// by the tests and benchmarks; kept in the library so detector changes can
// be scored against the same ground truth everywhere.
//
// The scene is three layers over a sample x ping grid:
//   * a background with Sv jittered around background_sv_db and incoherent
//     angle counts drawn uniformly from [-angle_noise, angle_noise];
//   * a horizontal scattering layer of layer_height rows at layer_sv_db,
//     same incoherent angle counts (a zooplankton-layer stand-in);
//   * a diagonal band of band_height rows running from band_start_row in
//     the first column to band_end_row in the last, at band_sv_db plus
//     jitter, whose along-ship counts form a coherent gradient signature:
//     band_angle_counts magnitude, signed by the band's slope direction,
//     with small jitter. The athwart channel stays incoherent.
//
// Ground truth: `band` marks band cells, `layer` marks layer cells outside
// the band, and `crossing_columns` flags the columns where the band passes
// within window_margin_rows of the layer, where the two cannot be told
// apart and scoring skips false-positive accounting.
struct SyntheticSpec {
    std::size_t rows = 1000;
    std::size_t cols = 1500;
    double range_step_m = 0.5;
    double frequency_khz = 38.0;
    double ping_interval_s = 2.0;
    double sound_speed_ms = 1500.0;

    double background_sv_db = -85.0;
    double background_jitter_db = 3.0;
    int angle_noise = 10;

    std::size_t layer_top_row = 350;
    std::size_t layer_height = 40;
    double layer_sv_db = -65.0;

    std::size_t band_start_row = 200;
    std::size_t band_end_row = 850;
    std::size_t band_height = 60;
    double band_sv_db = -55.0;
    double band_jitter_db = 2.0;
    int band_angle_counts = 40;
    int band_angle_jitter = 3;

    std::size_t window_margin_rows = 18;  // half of the 28-window plus halo

    std::uint32_t seed = 1;
};

struct SyntheticScene {
    GridBundle bundle;
    Mask band;
    Mask layer;
    std::vector<std::uint8_t> crossing_columns;  // 1 where band meets layer
};

SyntheticScene make_synthetic_scene(const SyntheticSpec& spec);

}  // namespace falsebottom
