#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "falsebottom/grid.hpp"

namespace falsebottom {

// Sentinel marking removed or missing samples.
inline constexpr double kDefaultNoData = -999.0;

// Boolean grid aligned to an echogram. True = cell classified by whatever
// produced the mask (typically: aliased seabed).
class Mask {
public:
    Mask() = default;

    Mask(std::size_t rows, std::size_t cols, bool fill = false)
        : bits_(rows, cols, fill ? std::uint8_t{1} : std::uint8_t{0}) {}

    explicit Mask(Grid<std::uint8_t> bits) : bits_(std::move(bits)) {}

    std::size_t rows() const { return bits_.rows(); }
    std::size_t cols() const { return bits_.cols(); }
    std::size_t size() const { return bits_.size(); }

    bool get(std::size_t r, std::size_t c) const { return bits_.at(r, c) != 0; }
    void set(std::size_t r, std::size_t c, bool v) { bits_.at(r, c) = v ? 1 : 0; }

    bool get_index(std::size_t i) const { return bits_[i] != 0; }
    void set_index(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }

    const Grid<std::uint8_t>& bits() const { return bits_; }

    std::size_t count() const;
    bool any() const { return count() > 0; }
    bool none() const { return count() == 0; }

    bool same_shape(const Mask& other) const { return bits_.same_shape(other.bits_); }

    friend bool operator==(const Mask&, const Mask&) = default;

private:
    Grid<std::uint8_t> bits_;
};

// Per-column metadata attached to an Echogram. ping_times are opaque
// monotonic timestamps (EK60 ingest stores NT filetime, 100 ns units since
// 1601-01-01); the library never does calendar arithmetic on them.
// ping_interval_s and sound_speed_ms are carried for the alias-range
// prediction workflow; 0 means unknown.
struct EchogramMeta {
    double range_step_m = 0.0;
    double frequency_khz = 0.0;
    double no_data = kDefaultNoData;
    double ping_interval_s = 0.0;
    double sound_speed_ms = 0.0;
    std::vector<std::uint64_t> ping_times;  // empty, or one entry per column

    friend bool operator==(const EchogramMeta&, const EchogramMeta&) = default;
};

// Calibrated volume backscatter on a sample x ping grid, in dB re 1/m.
// Immutable after construction; cells are either finite or exactly the
// no_data sentinel.
class Echogram {
public:
    Echogram(Grid<double> sv, EchogramMeta meta);

    Echogram(Grid<double> sv, double range_step_m, double frequency_khz,
             double no_data = kDefaultNoData);

    const Grid<double>& sv() const { return sv_; }
    std::size_t rows() const { return sv_.rows(); }
    std::size_t cols() const { return sv_.cols(); }

    double range_step_m() const { return meta_.range_step_m; }
    double frequency_khz() const { return meta_.frequency_khz; }
    double no_data() const { return meta_.no_data; }
    double ping_interval_s() const { return meta_.ping_interval_s; }
    double sound_speed_ms() const { return meta_.sound_speed_ms; }
    const std::vector<std::uint64_t>& ping_times() const { return meta_.ping_times; }
    const EchogramMeta& meta() const { return meta_; }

    bool is_valid(std::size_t r, std::size_t c) const {
        return sv_.at(r, c) != meta_.no_data;
    }
    bool is_valid_index(std::size_t i) const { return sv_[i] != meta_.no_data; }

    // Range at the top of a sample row, metres.
    double range_at(std::size_t row) const { return double(row) * meta_.range_step_m; }

    // True where the cell is not the no_data sentinel.
    Mask validity() const;

    friend bool operator==(const Echogram&, const Echogram&) = default;

private:
    Grid<double> sv_;
    EchogramMeta meta_;
};

// Raw split-beam angle counts for an echogram: along-ship (fore/aft phase)
// and athwart-ship (starboard/port phase). Counts stay in raw signed units,
// -128..127; the detection thresholds are calibrated against counts squared,
// not degrees. Validity mirrors the companion echogram: a cell blanked in Sv
// is invalid here too.
class AngleChannels {
public:
    // All cells valid (synthetic data with no gaps).
    AngleChannels(Grid<std::int8_t> along, Grid<std::int8_t> athwart);

    AngleChannels(Grid<std::int8_t> along, Grid<std::int8_t> athwart, Mask valid);

    // Validity derived from the companion echogram's no_data cells.
    static AngleChannels for_echogram(Grid<std::int8_t> along, Grid<std::int8_t> athwart,
                                      const Echogram& companion);

    const Grid<std::int8_t>& along() const { return along_; }
    const Grid<std::int8_t>& athwart() const { return athwart_; }
    const Mask& valid() const { return valid_; }

    std::size_t rows() const { return along_.rows(); }
    std::size_t cols() const { return along_.cols(); }

    friend bool operator==(const AngleChannels&, const AngleChannels&) = default;

private:
    Grid<std::int8_t> along_;
    Grid<std::int8_t> athwart_;
    Mask valid_;
};

// Per-ping detected seabed range in metres; absent where no seabed was
// found within the logging range. Detection itself is out of scope here: a
// line is supplied by upstream tooling, never computed.
class SeabedLine {
public:
    SeabedLine() = default;
    explicit SeabedLine(std::vector<std::optional<double>> range_m);

    std::size_t size() const { return range_m_.size(); }
    const std::optional<double>& at(std::size_t ping) const { return range_m_[ping]; }
    const std::vector<std::optional<double>>& ranges() const { return range_m_; }

    friend bool operator==(const SeabedLine&, const SeabedLine&) = default;

private:
    std::vector<std::optional<double>> range_m_;
};

// Cellwise OR. Shapes must match.
Mask combine_masks(const Mask& a, const Mask& b);

// Replaces cells where m is true with token; axes and metadata unchanged.
Echogram apply_mask(const Echogram& e, const Mask& m, double token = kDefaultNoData);

struct MaskStats {
    std::size_t count = 0;
    double fraction = 0.0;  // count / total cells; 0 for an empty grid
};

MaskStats mask_stats(const Mask& m);

}  // namespace falsebottom
