#include "falsebottom/alias.hpp"

#include <cmath>
#include <string>

namespace falsebottom {

std::map<int, double> default_max_range_table() {
    // Typical deepest seabed detection per nominal frequency under standard
    // settings: 18 kHz reaches abyssal depths, 200 kHz only the shelf.
    return {{18, 7000.0}, {38, 2800.0}, {70, 1100.0}, {120, 850.0}, {200, 550.0}};
}

double AliasGeometry::max_range_for(int frequency_khz) const {
    const auto it = max_range_m.find(frequency_khz);
    if (it == max_range_m.end()) {
        throw LookupError("no maximum detection range configured for " +
                          std::to_string(frequency_khz) + " kHz");
    }
    return it->second;
}

void AliasGeometry::validate() const {
    if (!(sound_speed_ms > 0.0) || !std::isfinite(sound_speed_ms)) {
        throw ParameterError("sound speed must be positive, got " +
                             std::to_string(sound_speed_ms));
    }
    if (!(ping_interval_s > 0.0) || !std::isfinite(ping_interval_s)) {
        throw ParameterError("ping interval must be positive, got " +
                             std::to_string(ping_interval_s));
    }
    if (logging_range_m < 0.0 || !std::isfinite(logging_range_m)) {
        throw ParameterError("logging range must be >= 0, got " +
                             std::to_string(logging_range_m));
    }
    for (const auto& [khz, range] : max_range_m) {
        if (!(range > 0.0) || !std::isfinite(range)) {
            throw ParameterError("maximum range for " + std::to_string(khz) +
                                 " kHz must be positive");
        }
    }
}

double aliased_range(double seabed_range_m, const AliasGeometry& g) {
    g.validate();
    if (!(seabed_range_m > g.logging_range_m)) {
        throw DomainError("seabed range " + std::to_string(seabed_range_m) +
                          " m must exceed the logging range " +
                          std::to_string(g.logging_range_m) +
                          " m for its echo to alias into a later ping");
    }
    // Two-way travel folded by whole ping intervals, halved back to range.
    return std::fmod(2.0 * seabed_range_m, g.sound_speed_ms * g.ping_interval_s) / 2.0;
}

std::vector<double> candidate_true_depths(double alias_range_m, const AliasGeometry& g,
                                          int frequency_khz) {
    g.validate();
    const double wrap = g.wrap_m();
    if (!(alias_range_m >= 0.0) || !(alias_range_m < wrap)) {
        throw DomainError("alias range " + std::to_string(alias_range_m) +
                          " m must lie in [0, " + std::to_string(wrap) + ") m");
    }
    const double rmax = g.max_range_for(frequency_khz);

    std::vector<double> out;
    for (int k = 0;; ++k) {
        const double depth = alias_range_m + double(k) * wrap;
        if (!(depth < rmax)) break;
        if (depth > g.logging_range_m) out.push_back(depth);
    }
    return out;
}

bool cross_frequency_plausible(double seabed_range_m, int frequency_khz,
                               const AliasGeometry& g) {
    g.validate();
    return seabed_range_m < g.max_range_for(frequency_khz);
}

}  // namespace falsebottom
