#pragma once

// Reference implementations the production code is checked against. These
// stay deliberately naive (double loops, recursion, enumeration) and must
// not share code with the library paths they verify.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "falsebottom/alias.hpp"
#include "falsebottom/detect.hpp"
#include "falsebottom/echogram.hpp"

namespace fbtest {

using falsebottom::AliasGeometry;
using falsebottom::Echogram;
using falsebottom::Grid;
using falsebottom::Mask;

// O(rows * cols * w^2) windowed mean-square with bounds clipping and
// valid-count normalisation. Empty windows give NaN.
inline Grid<double> naive_mean_square(const Grid<std::int8_t>& g, const Mask& valid, int w) {
    const long rows = long(g.rows());
    const long cols = long(g.cols());
    Grid<double> out(g.rows(), g.cols());
    const long lo = w / 2;        // rows [i - w/2, i + (w+1)/2 - 1]
    const long hi = (w + 1) / 2;  // exclusive end offset
    for (long i = 0; i < rows; ++i) {
        for (long j = 0; j < cols; ++j) {
            double sum = 0.0;
            long n = 0;
            for (long r = i - lo; r < i + hi; ++r) {
                for (long c = j - lo; c < j + hi; ++c) {
                    if (r < 0 || r >= rows || c < 0 || c >= cols) continue;
                    if (!valid.get(std::size_t(r), std::size_t(c))) continue;
                    const double v = double(g.at(std::size_t(r), std::size_t(c)));
                    sum += v * v;
                    ++n;
                }
            }
            out.at(std::size_t(i), std::size_t(j)) =
                n > 0 ? sum / double(n) : std::numeric_limits<double>::quiet_NaN();
        }
    }
    return out;
}

namespace detail {

inline void flood_recurse(const Echogram& e, double t, int connectivity,
                          Grid<std::uint8_t>& seen, std::vector<std::size_t>& component,
                          long r, long c) {
    if (r < 0 || r >= long(e.rows()) || c < 0 || c >= long(e.cols())) return;
    const std::size_t idx = std::size_t(r) * e.cols() + std::size_t(c);
    if (seen[idx]) return;
    if (!e.is_valid_index(idx) || !(e.sv()[idx] > t)) return;
    seen[idx] = 1;
    component.push_back(idx);
    flood_recurse(e, t, connectivity, seen, component, r - 1, c);
    flood_recurse(e, t, connectivity, seen, component, r + 1, c);
    flood_recurse(e, t, connectivity, seen, component, r, c - 1);
    flood_recurse(e, t, connectivity, seen, component, r, c + 1);
    if (connectivity == 8) {
        flood_recurse(e, t, connectivity, seen, component, r - 1, c - 1);
        flood_recurse(e, t, connectivity, seen, component, r - 1, c + 1);
        flood_recurse(e, t, connectivity, seen, component, r + 1, c - 1);
        flood_recurse(e, t, connectivity, seen, component, r + 1, c + 1);
    }
}

}  // namespace detail

// Recursive flood-fill reference for grow_regions: label every component of
// {valid, Sv > t}, keep those touching m, OR with m.
inline Mask flood_grow(const Echogram& e, const Mask& m, double t, int connectivity) {
    Mask out = m;
    Grid<std::uint8_t> seen(e.rows(), e.cols(), 0);
    for (std::size_t r = 0; r < e.rows(); ++r) {
        for (std::size_t c = 0; c < e.cols(); ++c) {
            const std::size_t idx = r * e.cols() + c;
            if (seen[idx] || !e.is_valid_index(idx) || !(e.sv()[idx] > t)) continue;
            std::vector<std::size_t> component;
            detail::flood_recurse(e, t, connectivity, seen, component, long(r), long(c));
            bool touches = false;
            for (std::size_t i : component) {
                if (m.get_index(i)) {
                    touches = true;
                    break;
                }
            }
            if (touches) {
                for (std::size_t i : component) out.set_index(i, true);
            }
        }
    }
    return out;
}

// Fixpoint reachability reference for fill_holes: grow the set of
// border-connected false cells one 4-neighbour step at a time until nothing
// changes, then mark everything unreached.
inline Mask fixpoint_fill(const Mask& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Grid<std::uint8_t> reach(rows, cols, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const bool border = r == 0 || c == 0 || r == rows - 1 || c == cols - 1;
            if (border && !m.get(r, c)) reach.at(r, c) = 1;
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                if (reach.at(r, c) || m.get(r, c)) continue;
                const bool touches =
                    (r > 0 && reach.at(r - 1, c)) || (r + 1 < rows && reach.at(r + 1, c)) ||
                    (c > 0 && reach.at(r, c - 1)) || (c + 1 < cols && reach.at(r, c + 1));
                if (touches) {
                    reach.at(r, c) = 1;
                    changed = true;
                }
            }
        }
    }
    Mask out(rows, cols, false);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        if (!reach[i]) out.set_index(i, true);
    }
    return out;
}

// Enumeration reference for candidate_true_depths: step k upward and keep
// depths in the open feasibility interval, double-checking each one folds
// back to the observed alias range.
inline std::vector<double> enumerate_candidates(double alias_m, const AliasGeometry& g,
                                                int frequency_khz) {
    const double wrap = g.wrap_m();
    const double rmax = g.max_range_m.at(frequency_khz);
    std::vector<double> out;
    for (int k = 0;; ++k) {
        const double depth = alias_m + double(k) * wrap;
        if (!(depth < rmax)) break;
        if (depth > g.logging_range_m) {
            const double folded = std::fmod(2.0 * depth, g.sound_speed_ms * g.ping_interval_s) / 2.0;
            if (std::abs(folded - alias_m) <= 1e-9 * std::max(1.0, alias_m)) out.push_back(depth);
        }
    }
    return out;
}

}  // namespace fbtest
