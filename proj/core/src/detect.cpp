#include "falsebottom/detect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

namespace falsebottom {

void DetectionConfig::validate() const {
    if (window_along < 1 || window_athwart < 1) {
        throw ParameterError("window sides must be >= 1 (got " +
                             std::to_string(window_along) + " and " +
                             std::to_string(window_athwart) + ")");
    }
    if (!(t_theta >= 0.0) || !std::isfinite(t_theta) || !(t_phi >= 0.0) ||
        !std::isfinite(t_phi)) {
        throw ParameterError("angle thresholds must be finite and non-negative");
    }
    if (t_min && !std::isfinite(*t_min)) {
        throw ParameterError("threshold floor must be finite when set");
    }
    if (connectivity != 4 && connectivity != 8) {
        throw ParameterError("connectivity must be 4 or 8, got " +
                             std::to_string(connectivity));
    }
    if (!std::isfinite(token)) throw ParameterError("replacement token must be finite");
}

namespace {

// Splits [0, n) into at most `threads` contiguous chunks and runs fn on
// each. The caller's fn must write disjoint output only, keeping results
// independent of the partitioning.
template <typename Fn>
void parallel_rows(std::size_t n, int threads, Fn&& fn) {
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(std::size_t(std::max(threads, 1)), n));
    if (workers == 1) {
        fn(std::size_t(0), n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

Grid<double> mean_square_window(const Grid<std::int8_t>& values, const Mask& valid,
                                int window, int threads) {
    if (window < 1) throw ParameterError("window must be >= 1, got " + std::to_string(window));
    if (values.empty()) throw ParameterError("cannot window an empty grid");
    require_same_shape(values.rows(), values.cols(), valid.rows(), valid.cols(),
                       "value grid", "validity mask");

    const std::size_t rows = values.rows(), cols = values.cols();

    // Summed-area tables over v^2 and over the valid-cell count, one pad row
    // and column of zeros in front. Squares are <= 127^2 and grids are far
    // below 2^40 cells, so the int64 sums are exact and the windowed means
    // match a direct summation bit for bit.
    const std::size_t stride = cols + 1;
    std::vector<std::int64_t> sq((rows + 1) * stride, 0);
    std::vector<std::int64_t> cnt((rows + 1) * stride, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        std::int64_t row_sq = 0, row_cnt = 0;
        const std::size_t above = r * stride, here = (r + 1) * stride;
        for (std::size_t c = 0; c < cols; ++c) {
            if (valid.get(r, c)) {
                const std::int64_t v = values.at(r, c);
                row_sq += v * v;
                row_cnt += 1;
            }
            sq[here + c + 1] = sq[above + c + 1] + row_sq;
            cnt[here + c + 1] = cnt[above + c + 1] + row_cnt;
        }
    }

    // The window at (i, j) spans [i - w/2, i + (w+1)/2 - 1], clipped.
    const long lo = window / 2;
    const long hi = (window + 1) / 2;
    Grid<double> out(rows, cols);
    parallel_rows(rows, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const std::size_t r0 = std::size_t(std::max(long(i) - lo, 0l));
            const std::size_t r1 = std::size_t(std::min(long(i) + hi, long(rows)));
            for (std::size_t j = 0; j < cols; ++j) {
                const std::size_t c0 = std::size_t(std::max(long(j) - lo, 0l));
                const std::size_t c1 = std::size_t(std::min(long(j) + hi, long(cols)));
                const std::int64_t n = cnt[r1 * stride + c1] - cnt[r0 * stride + c1] -
                                       cnt[r1 * stride + c0] + cnt[r0 * stride + c0];
                if (n > 0) {
                    const std::int64_t s = sq[r1 * stride + c1] - sq[r0 * stride + c1] -
                                           sq[r1 * stride + c0] + sq[r0 * stride + c0];
                    out.at(i, j) = double(s) / double(n);
                } else {
                    out.at(i, j) = std::numeric_limits<double>::quiet_NaN();
                }
            }
        }
    });
    return out;
}

Mask angle_mask(const AngleChannels& angles, const DetectionConfig& cfg, int threads) {
    cfg.validate();
    const Grid<double> along_ms =
        mean_square_window(angles.along(), angles.valid(), cfg.window_along, threads);
    const Grid<double> athwart_ms =
        mean_square_window(angles.athwart(), angles.valid(), cfg.window_athwart, threads);

    Mask out(angles.rows(), angles.cols(), false);
    for (std::size_t i = 0; i < out.size(); ++i) {
        // NaN (empty window) compares false on both sides
        const bool hit = along_ms[i] > cfg.t_theta || athwart_ms[i] > cfg.t_phi;
        out.set_index(i, hit && angles.valid().get_index(i));
    }
    return out;
}

std::optional<double> dynamic_threshold(const Echogram& e, const Mask& m,
                                        std::optional<double> t_min) {
    require_same_shape(e.rows(), e.cols(), m.rows(), m.cols(), "echogram", "selection mask");

    std::vector<double> selected;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.get_index(i) && e.is_valid_index(i)) selected.push_back(e.sv()[i]);
    }
    if (selected.empty()) return std::nullopt;

    const std::size_t mid = selected.size() / 2;
    std::nth_element(selected.begin(), selected.begin() + mid, selected.end());
    double median = selected[mid];
    if (selected.size() % 2 == 0) {
        const double below = *std::max_element(selected.begin(), selected.begin() + mid);
        median = (below + median) / 2.0;
    }
    if (t_min && median < *t_min) return *t_min;
    return median;
}

Mask grow_regions(const Echogram& e, const Mask& m, double t, int connectivity) {
    require_same_shape(e.rows(), e.cols(), m.rows(), m.cols(), "echogram", "seed mask");
    if (connectivity != 4 && connectivity != 8) {
        throw ParameterError("connectivity must be 4 or 8, got " +
                             std::to_string(connectivity));
    }

    const std::size_t rows = e.rows(), cols = e.cols();
    auto bright = [&](std::size_t idx) { return e.is_valid_index(idx) && e.sv()[idx] > t; };

    // Breadth-first reachability over bright cells, seeded by bright seed
    // cells: exactly the union of bright components that intersect the seed.
    Mask out = m;
    Grid<std::uint8_t> seen(rows, cols, 0);
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.get_index(i) && bright(i)) {
            seen[i] = 1;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        const std::size_t idx = queue.back();
        queue.pop_back();
        out.set_index(idx, true);
        const std::size_t r = idx / cols, c = idx % cols;
        auto visit = [&](std::size_t nr, std::size_t nc) {
            const std::size_t nidx = nr * cols + nc;
            if (!seen[nidx] && bright(nidx)) {
                seen[nidx] = 1;
                queue.push_back(nidx);
            }
        };
        if (r > 0) visit(r - 1, c);
        if (r + 1 < rows) visit(r + 1, c);
        if (c > 0) visit(r, c - 1);
        if (c + 1 < cols) visit(r, c + 1);
        if (connectivity == 8) {
            if (r > 0 && c > 0) visit(r - 1, c - 1);
            if (r > 0 && c + 1 < cols) visit(r - 1, c + 1);
            if (r + 1 < rows && c > 0) visit(r + 1, c - 1);
            if (r + 1 < rows && c + 1 < cols) visit(r + 1, c + 1);
        }
    }
    return out;
}

Mask fill_holes(const Mask& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (m.size() == 0) return m;

    // Flood the complement from the border (4-connected); anything the
    // flood cannot reach is an enclosed hole and turns true.
    Grid<std::uint8_t> outside(rows, cols, 0);
    std::vector<std::size_t> queue;
    auto push = [&](std::size_t r, std::size_t c) {
        const std::size_t idx = r * cols + c;
        if (!outside[idx] && !m.get_index(idx)) {
            outside[idx] = 1;
            queue.push_back(idx);
        }
    };
    for (std::size_t c = 0; c < cols; ++c) {
        push(0, c);
        push(rows - 1, c);
    }
    for (std::size_t r = 0; r < rows; ++r) {
        push(r, 0);
        push(r, cols - 1);
    }
    while (!queue.empty()) {
        const std::size_t idx = queue.back();
        queue.pop_back();
        const std::size_t r = idx / cols, c = idx % cols;
        if (r > 0) push(r - 1, c);
        if (r + 1 < rows) push(r + 1, c);
        if (c > 0) push(r, c - 1);
        if (c + 1 < cols) push(r, c + 1);
    }

    Mask out(rows, cols, false);
    for (std::size_t i = 0; i < out.size(); ++i) out.set_index(i, !outside[i]);
    return out;
}

Mask exclude_below_seabed(const Mask& m, const SeabedLine& seabed, double range_step_m) {
    if (seabed.size() != m.cols()) {
        throw ShapeError("seabed line has " + std::to_string(seabed.size()) +
                         " pings but the mask has " + std::to_string(m.cols()) + " columns");
    }
    if (!(range_step_m > 0.0)) {
        throw ParameterError("range_step_m must be positive");
    }
    const double deepest = double(m.rows()) * range_step_m;
    Mask out = m;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto& range = seabed.at(c);
        if (!range) continue;
        if (*range > deepest) {
            throw DomainError("seabed at " + std::to_string(*range) + " m in ping " +
                              std::to_string(c) + " lies beyond the grid's " +
                              std::to_string(deepest) + " m");
        }
        for (std::size_t r = 0; r < m.rows(); ++r) out.set(r, c, false);
    }
    return out;
}

DetectionResult detect_aliased_seabed(const Echogram& e, const AngleChannels& angles,
                                      const std::optional<SeabedLine>& seabed,
                                      const DetectionConfig& cfg, int threads) {
    cfg.validate();
    require_same_shape(e.rows(), e.cols(), angles.rows(), angles.cols(), "echogram",
                       "angle channels");

    DetectionResult res;
    res.angle_mask = angle_mask(angles, cfg, threads);

    Mask mask = res.angle_mask;
    if (res.angle_mask.any()) {
        res.t_used = dynamic_threshold(e, res.angle_mask, cfg.t_min);
        if (res.t_used) mask = grow_regions(e, res.angle_mask, *res.t_used, cfg.connectivity);
        if (cfg.fill_holes) mask = fill_holes(mask);

        // Filling may have covered no_data holes; those cells must stay clear.
        for (std::size_t i = 0; i < mask.size(); ++i) {
            if (!e.is_valid_index(i)) {
                mask.set_index(i, false);
                res.angle_mask.set_index(i, false);
            }
        }
    }

    if (seabed) {
        // Apply the exclusion to the diagnostic mask too, so the subset
        // relation between the two masks holds unconditionally.
        mask = exclude_below_seabed(mask, *seabed, e.range_step_m());
        res.angle_mask = exclude_below_seabed(res.angle_mask, *seabed, e.range_step_m());
    }
    res.mask = std::move(mask);
    return res;
}

}  // namespace falsebottom
