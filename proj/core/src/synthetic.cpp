#include "falsebottom/synthetic.hpp"

#include <algorithm>
#include <random>

namespace falsebottom {

SyntheticScene make_synthetic_scene(const SyntheticSpec& spec) {
    if (spec.rows == 0 || spec.cols == 0) {
        throw ParameterError("synthetic scene needs at least one sample and one ping");
    }
    if (spec.band_start_row >= spec.rows || spec.band_end_row >= spec.rows) {
        throw ParameterError("band rows fall outside the scene");
    }

    const std::size_t rows = spec.rows;
    const std::size_t cols = spec.cols;
    std::mt19937 rng(spec.seed);
    std::uniform_real_distribution<double> bg_jitter(-spec.background_jitter_db,
                                                     spec.background_jitter_db);
    std::uniform_real_distribution<double> band_jitter(-spec.band_jitter_db,
                                                       spec.band_jitter_db);
    std::uniform_int_distribution<int> angle_noise(-spec.angle_noise, spec.angle_noise);
    std::uniform_int_distribution<int> band_angle_jitter(-spec.band_angle_jitter,
                                                         spec.band_angle_jitter);

    Grid<double> sv(rows, cols, 0.0);
    Grid<std::int8_t> along(rows, cols, 0);
    Grid<std::int8_t> athwart(rows, cols, 0);
    Mask band(rows, cols, false);
    Mask layer(rows, cols, false);
    std::vector<std::uint8_t> crossing(cols, 0);

    const std::size_t layer_bot = std::min(rows, spec.layer_top_row + spec.layer_height);
    // The band climbs or dives linearly across the pings; its coherent
    // along-ship counts carry the sign of that slope, like the phase ramp a
    // second-trip bottom echo leaves behind.
    const bool diving = spec.band_end_row >= spec.band_start_row;
    const int band_sign = diving ? 1 : -1;

    const auto clamp_counts = [](int v) {
        return std::int8_t(std::clamp(v, -128, 127));
    };

    for (std::size_t c = 0; c < cols; ++c) {
        const double frac = cols > 1 ? double(c) / double(cols - 1) : 0.0;
        const double top_f = double(spec.band_start_row) +
                             (double(spec.band_end_row) - double(spec.band_start_row)) * frac;
        const std::size_t band_top = std::size_t(top_f);
        const std::size_t band_bot = std::min(rows, band_top + spec.band_height);

        for (std::size_t r = 0; r < rows; ++r) {
            const bool in_band = r >= band_top && r < band_bot;
            const bool in_layer = r >= spec.layer_top_row && r < layer_bot;
            if (in_band) {
                sv.at(r, c) = spec.band_sv_db + band_jitter(rng);
                along.at(r, c) =
                    clamp_counts(band_sign * spec.band_angle_counts + band_angle_jitter(rng));
                athwart.at(r, c) = std::int8_t(angle_noise(rng));
                band.set(r, c, true);
            } else {
                sv.at(r, c) = (in_layer ? spec.layer_sv_db : spec.background_sv_db) +
                              bg_jitter(rng);
                along.at(r, c) = std::int8_t(angle_noise(rng));
                athwart.at(r, c) = std::int8_t(angle_noise(rng));
                if (in_layer) layer.set(r, c, true);
            }
        }

        // Columns where the band's windowed footprint reaches the layer are
        // ambiguous: a detector cannot separate the two there, so scoring
        // skips them for false positives.
        const std::size_t reach_top =
            band_top > spec.window_margin_rows ? band_top - spec.window_margin_rows : 0;
        const std::size_t reach_bot = band_bot + spec.window_margin_rows;
        if (reach_top < layer_bot && reach_bot > spec.layer_top_row) crossing[c] = 1;
    }

    EchogramMeta meta;
    meta.range_step_m = spec.range_step_m;
    meta.frequency_khz = spec.frequency_khz;
    meta.ping_interval_s = spec.ping_interval_s;
    meta.sound_speed_ms = spec.sound_speed_ms;
    meta.ping_times.resize(cols);
    const auto tick = std::uint64_t(spec.ping_interval_s * 1e7);  // 100 ns units
    for (std::size_t c = 0; c < cols; ++c) meta.ping_times[c] = std::uint64_t(c) * tick;

    return SyntheticScene{
        GridBundle{Echogram(std::move(sv), std::move(meta)),
                   AngleChannels(std::move(along), std::move(athwart)), std::nullopt},
        std::move(band), std::move(layer), std::move(crossing)};
}

}  // namespace falsebottom
