#pragma once

#include <cstdint>
#include <optional>

#include "falsebottom/echogram.hpp"

namespace falsebottom {

// Tunable parameters of the aliased-seabed detector. The defaults are the
// values calibrated on Southern Ocean survey data; they may need adjusting
// for other vessels and substrates.
struct DetectionConfig {
    int window_along = 28;              // window side for along-ship mean-square
    int window_athwart = 52;            // window side for athwart-ship mean-square
    double t_theta = 702.0;             // along-ship threshold, counts^2
    double t_phi = 282.0;               // athwart-ship threshold, counts^2
    std::optional<double> t_min = -70.0;  // floor for the dynamic Sv threshold, dB
    int connectivity = 4;               // 4 or 8, for region growing
    bool fill_holes = true;
    double token = kDefaultNoData;      // replacement value used by the clean step

    // Throws ParameterError when any field is out of range.
    void validate() const;
};

struct DetectionResult {
    Mask mask;                          // final classification
    std::optional<double> t_used;       // dynamic Sv threshold actually applied, dB;
                                        // absent when the angle mask was empty
    Mask angle_mask;                    // combined angle mask, for diagnostics;
                                        // always a subset of mask
};

// Mean of v^2 over a w x w moving window, computed with summed-area tables
// over v^2 and over the validity count, so each output cell is O(1). The
// window at (i, j) spans rows [i - w/2, i + (w+1)/2 - 1] and the same for
// columns, clipped to the grid; the mean divides by the number of valid
// in-bounds cells. Cells whose window holds no valid cell are NaN.
// threads > 1 splits the output rows across worker threads; the result is
// bitwise identical for any thread count.
Grid<double> mean_square_window(const Grid<std::int8_t>& values, const Mask& valid,
                                int window, int threads = 1);

// Thresholds the windowed mean-square of each angle channel (strict >) and
// ORs the two masks. Cells invalid in the channels never enter the mask.
Mask angle_mask(const AngleChannels& angles, const DetectionConfig& cfg, int threads = 1);

// Median Sv over valid cells selected by m, clamped from below by t_min
// when present. Absent when the selection is empty.
std::optional<double> dynamic_threshold(const Echogram& e, const Mask& m,
                                        std::optional<double> t_min);

// Connected components of {valid cells with Sv > t}; keeps the components
// that intersect m and returns their union ORed with m.
Mask grow_regions(const Echogram& e, const Mask& m, double t, int connectivity);

// Sets every enclosed false region to true. A region is enclosed when it is
// a maximal 4-connected false area with no path of false cells to the grid
// border.
Mask fill_holes(const Mask& m);

// Clears every column whose ping has a detected seabed: an alias needs a
// seabed beyond the logging range, so it cannot share a ping with a true
// bottom detection. Seabed ranges must lie within (0, rows * range_step_m].
Mask exclude_below_seabed(const Mask& m, const SeabedLine& seabed, double range_step_m);

// The full detector: angle mask, dynamic threshold, region growing,
// optional hole filling, optional seabed exclusion. When a seabed line is
// given, the exclusion is applied to the diagnostic angle mask as well so
// that angle_mask stays a subset of mask. no_data cells are never marked.
DetectionResult detect_aliased_seabed(const Echogram& e, const AngleChannels& angles,
                                      const std::optional<SeabedLine>& seabed,
                                      const DetectionConfig& cfg, int threads = 1);

}  // namespace falsebottom
