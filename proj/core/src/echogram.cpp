#include "falsebottom/echogram.hpp"

#include <cmath>
#include <utility>

namespace falsebottom {

std::size_t Mask::count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) n += bits_[i] != 0;
    return n;
}

namespace {

void validate_meta(const EchogramMeta& meta, std::size_t cols) {
    if (!(meta.range_step_m > 0.0) || !std::isfinite(meta.range_step_m)) {
        throw ParameterError("range_step_m must be positive, got " +
                             std::to_string(meta.range_step_m));
    }
    if (!(meta.frequency_khz > 0.0) || !std::isfinite(meta.frequency_khz)) {
        throw ParameterError("frequency_khz must be positive, got " +
                             std::to_string(meta.frequency_khz));
    }
    if (std::isnan(meta.no_data)) throw ParameterError("no_data token must not be NaN");
    if (meta.ping_interval_s < 0.0 || !std::isfinite(meta.ping_interval_s)) {
        throw ParameterError("ping_interval_s must be >= 0");
    }
    if (meta.sound_speed_ms < 0.0 || !std::isfinite(meta.sound_speed_ms)) {
        throw ParameterError("sound_speed_ms must be >= 0");
    }
    if (!meta.ping_times.empty()) {
        if (meta.ping_times.size() != cols) {
            throw ParameterError("ping_times has " + std::to_string(meta.ping_times.size()) +
                                 " entries for " + std::to_string(cols) + " pings");
        }
        for (std::size_t i = 1; i < meta.ping_times.size(); ++i) {
            if (meta.ping_times[i] < meta.ping_times[i - 1]) {
                throw ParameterError("ping_times must be non-decreasing (ping " +
                                     std::to_string(i) + ")");
            }
        }
    }
}

void validate_cells(const Grid<double>& sv, double no_data) {
    for (std::size_t i = 0; i < sv.size(); ++i) {
        if (!std::isfinite(sv[i]) && sv[i] != no_data) {
            throw ParameterError("Sv cell " + std::to_string(i) +
                                 " is neither finite nor the no_data token");
        }
    }
}

}  // namespace

Echogram::Echogram(Grid<double> sv, EchogramMeta meta)
    : sv_(std::move(sv)), meta_(std::move(meta)) {
    validate_meta(meta_, sv_.cols());
    validate_cells(sv_, meta_.no_data);
}

Echogram::Echogram(Grid<double> sv, double range_step_m, double frequency_khz, double no_data)
    : Echogram(std::move(sv), EchogramMeta{range_step_m, frequency_khz, no_data, 0.0, 0.0, {}}) {}

Mask Echogram::validity() const {
    Mask m(rows(), cols(), false);
    for (std::size_t i = 0; i < sv_.size(); ++i) m.set_index(i, sv_[i] != meta_.no_data);
    return m;
}

AngleChannels::AngleChannels(Grid<std::int8_t> along, Grid<std::int8_t> athwart)
    : along_(std::move(along)), athwart_(std::move(athwart)) {
    require_same_shape(along_.rows(), along_.cols(), athwart_.rows(), athwart_.cols(),
                       "along channel", "athwart channel");
    valid_ = Mask(along_.rows(), along_.cols(), true);
}

AngleChannels::AngleChannels(Grid<std::int8_t> along, Grid<std::int8_t> athwart, Mask valid)
    : along_(std::move(along)), athwart_(std::move(athwart)), valid_(std::move(valid)) {
    require_same_shape(along_.rows(), along_.cols(), athwart_.rows(), athwart_.cols(),
                       "along channel", "athwart channel");
    require_same_shape(along_.rows(), along_.cols(), valid_.rows(), valid_.cols(),
                       "angle channels", "validity mask");
}

AngleChannels AngleChannels::for_echogram(Grid<std::int8_t> along, Grid<std::int8_t> athwart,
                                          const Echogram& companion) {
    require_same_shape(along.rows(), along.cols(), companion.rows(), companion.cols(),
                       "angle channels", "echogram");
    return AngleChannels(std::move(along), std::move(athwart), companion.validity());
}

SeabedLine::SeabedLine(std::vector<std::optional<double>> range_m)
    : range_m_(std::move(range_m)) {
    for (std::size_t i = 0; i < range_m_.size(); ++i) {
        if (range_m_[i] && (!(*range_m_[i] > 0.0) || !std::isfinite(*range_m_[i]))) {
            throw ParameterError("seabed range for ping " + std::to_string(i) +
                                 " must be positive and finite");
        }
    }
}

Mask combine_masks(const Mask& a, const Mask& b) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "first mask", "second mask");
    Mask out(a.rows(), a.cols(), false);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.set_index(i, a.get_index(i) || b.get_index(i));
    return out;
}

Echogram apply_mask(const Echogram& e, const Mask& m, double token) {
    require_same_shape(e.rows(), e.cols(), m.rows(), m.cols(), "echogram", "mask");
    Grid<double> sv = e.sv();
    for (std::size_t i = 0; i < sv.size(); ++i) {
        if (m.get_index(i)) sv[i] = token;
    }
    return Echogram(std::move(sv), e.meta());
}

MaskStats mask_stats(const Mask& m) {
    MaskStats s;
    s.count = m.count();
    s.fraction = m.size() > 0 ? double(s.count) / double(m.size()) : 0.0;
    return s;
}

}  // namespace falsebottom
