#pragma once

#include <map>
#include <vector>

#include "falsebottom/error.hpp"

namespace falsebottom {

// Typical maximum seabed detection ranges by frequency (kHz -> m), as
// quoted for standard transducer settings. Overridable configuration, not
// physics: actual reach depends on power, pulse and water properties.
std::map<int, double> default_max_range_table();

// Everything needed to reason about where an aliased echo can come from:
// a seabed return from ping n-1 (or earlier) arrives during ping n's
// listening window, folded back by the two-way travel per ping interval.
struct AliasGeometry {
    double sound_speed_ms = 1500.0;
    double ping_interval_s = 0.0;
    double logging_range_m = 0.0;
    std::map<int, double> max_range_m = default_max_range_table();

    // Range folded into one listening window: c * I_T / 2.
    double wrap_m() const { return sound_speed_ms * ping_interval_s / 2.0; }

    double max_range_for(int frequency_khz) const;  // throws LookupError

    void validate() const;  // throws ParameterError
};

// Apparent range of the alias of a seabed at seabed_range_m:
// mod(2 * R_S, c * I_T) / 2 with the non-negative remainder.
// Requires logging_range_m < seabed_range_m (an alias can only come from a
// seabed beyond the logging range); the R_max side of the constraint is the
// caller's check, per frequency.
double aliased_range(double seabed_range_m, const AliasGeometry& g);

// Inverts the alias equation: all seabed depths r = alias_range_m + k * wrap
// (integer k >= 0) with logging_range < r < max_range[frequency], ascending.
// Requires 0 <= alias_range_m < wrap.
std::vector<double> candidate_true_depths(double alias_range_m, const AliasGeometry& g,
                                          int frequency_khz);

// True iff a seabed at seabed_range_m is within reach of the given
// frequency. False refutes the candidate: a signal at this frequency cannot
// be an alias of that seabed, so it must have another cause.
bool cross_frequency_plausible(double seabed_range_m, int frequency_khz,
                               const AliasGeometry& g);

}  // namespace falsebottom
