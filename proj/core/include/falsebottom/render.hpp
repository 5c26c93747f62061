#pragma once

#include <array>
#include <cstdint>
#include <filesystem>

#include "falsebottom/echogram.hpp"

namespace falsebottom {

enum class Colormap {
    viridis,  // perceptually ordered dark-to-bright ramp
    grey,
};

struct RenderOptions {
    double sv_min = -90.0;  // dB mapped to the bottom of the ramp
    double sv_max = -30.0;  // dB mapped to the top
    Colormap colormap = Colormap::viridis;
    std::array<std::uint8_t, 4> overlay_rgba = {255, 0, 0, 128};  // mask overlay
    std::array<std::uint8_t, 3> no_data_rgb = {128, 128, 128};
    int scale = 1;  // pixel replication factor
};

struct Image {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> rgb;  // 3 bytes per pixel, rows top-down

    Image() = default;
    Image(std::size_t w, std::size_t h) : width(w), height(h), rgb(3 * w * h, 0) {}

    std::uint8_t* pixel(std::size_t x, std::size_t y) { return &rgb[3 * (y * width + x)]; }
    const std::uint8_t* pixel(std::size_t x, std::size_t y) const {
        return &rgb[3 * (y * width + x)];
    }

    friend bool operator==(const Image&, const Image&) = default;
};

// Color of the ramp at t in [0, 1]; t = 1 is the ramp's top color exactly.
std::array<std::uint8_t, 3> colormap_color(Colormap map, double t);

// Maps Sv linearly onto the ramp, clipped at [sv_min, sv_max]; no_data
// cells take no_data_rgb; mask-true cells are alpha-blended with the
// overlay color. Each input cell becomes a scale x scale pixel block, so
// the image is (cols * scale) x (rows * scale) with the shallowest sample
// at the top. The image holds the data area only (no axes), and identical
// inputs give identical bytes.
Image render_echogram(const Echogram& e, const Mask* mask, const RenderOptions& opt);

// 8-bit RGB PNG; deterministic for a fixed image.
void write_png(const std::filesystem::path& file, const Image& img);

}  // namespace falsebottom
