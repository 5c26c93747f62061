#pragma once

#include <filesystem>
#include <optional>

#include "falsebottom/echogram.hpp"

namespace falsebottom {

// One channel's worth of data: backscatter, split-beam angles and an
// optional seabed line.
struct GridBundle {
    Echogram echogram;
    AngleChannels angles;
    std::optional<SeabedLine> seabed;

    friend bool operator==(const GridBundle&, const GridBundle&) = default;
};

// Portable on-disk interchange format: a directory containing
//
//   meta        key = value lines, in this order: frequency_khz,
//               range_step_m, no_data, ping_interval_s, sound_speed_ms,
//               rows, cols. Unknown keys are ignored on read.
//   sv          rows lines of cols comma-separated numbers, row 0 shallowest
//   along       same layout, integer counts in -128..127
//   athwart     same layout
//   seabed      optional; one line of cols fields, a range in metres or
//               the literal * where no seabed was detected
//   ping_times  optional; one unsigned integer timestamp per line
//
// Numbers are written with shortest round-trip precision, so
// write_bundle followed by read_bundle is bit-identical.
GridBundle read_bundle(const std::filesystem::path& dir);
void write_bundle(const std::filesystem::path& dir, const GridBundle& bundle);

// Mask files use the same textual grid layout with cells 0/1.
Mask read_mask_text(const std::filesystem::path& file);
void write_mask_text(const std::filesystem::path& file, const Mask& mask);

}  // namespace falsebottom
