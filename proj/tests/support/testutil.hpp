#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "falsebottom/echogram.hpp"

namespace fbtest {

using falsebottom::Echogram;
using falsebottom::Grid;
using falsebottom::Mask;

inline Mask random_mask(std::mt19937& rng, std::size_t rows, std::size_t cols,
                        double p_true = 0.5) {
    std::bernoulli_distribution bit(p_true);
    Mask m(rows, cols, false);
    for (std::size_t i = 0; i < rows * cols; ++i) m.set_index(i, bit(rng));
    return m;
}

inline Grid<std::int8_t> random_angle_grid(std::mt19937& rng, std::size_t rows,
                                           std::size_t cols) {
    std::uniform_int_distribution<int> counts(-128, 127);
    Grid<std::int8_t> g(rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) g[i] = std::int8_t(counts(rng));
    return g;
}

// Sv grid with a given fraction of no_data holes.
inline Echogram random_echogram(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                double p_invalid = 0.1, double no_data = -999.0) {
    std::uniform_real_distribution<double> sv(-95.0, -40.0);
    std::bernoulli_distribution hole(p_invalid);
    Grid<double> g(rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) g[i] = hole(rng) ? no_data : sv(rng);
    falsebottom::EchogramMeta meta;
    meta.range_step_m = 0.5;
    meta.frequency_khz = 38.0;
    meta.no_data = no_data;
    return Echogram(std::move(g), std::move(meta));
}

// NaN-aware elementwise comparison at a relative tolerance.
inline bool grids_close(const Grid<double>& a, const Grid<double>& b, double rel) {
    if (!a.same_shape(b)) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool na = std::isnan(a[i]), nb = std::isnan(b[i]);
        if (na != nb) return false;
        if (na) continue;
        const double diff = std::abs(a[i] - b[i]);
        if (diff > rel * std::max(std::abs(a[i]), std::abs(b[i]))) return false;
    }
    return true;
}

// Unique scratch directory under the system temp dir, removed on
// destruction.
class TempDir {
public:
    explicit TempDir(const std::string& stem) {
        auto base = std::filesystem::temp_directory_path();
        std::random_device rd;
        for (int attempt = 0; attempt < 64; ++attempt) {
            auto candidate = base / (stem + "-" + std::to_string(rd()));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("could not create temp dir under " + base.string());
    }

    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }

    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace fbtest
