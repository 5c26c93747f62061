#include "falsebottom/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include <png.h>

namespace falsebottom {

namespace {

// Perceptually ordered dark-to-bright anchors, interpolated linearly.
constexpr std::array<std::array<std::uint8_t, 3>, 16> kViridis = {{
    {68, 1, 84},    {72, 26, 108},  {71, 47, 125},  {65, 68, 135},
    {57, 86, 140},  {49, 104, 142}, {42, 120, 142}, {35, 136, 142},
    {31, 152, 139}, {34, 168, 132}, {53, 183, 121}, {84, 197, 104},
    {122, 209, 81}, {165, 219, 54}, {210, 226, 27}, {253, 231, 37},
}};

std::uint8_t lerp_channel(std::uint8_t a, std::uint8_t b, double f) {
    return std::uint8_t(std::lround(double(a) + (double(b) - double(a)) * f));
}

}  // namespace

std::array<std::uint8_t, 3> colormap_color(Colormap map, double t) {
    t = std::clamp(t, 0.0, 1.0);
    if (map == Colormap::grey) {
        const auto v = std::uint8_t(std::lround(255.0 * t));
        return {v, v, v};
    }
    const double pos = t * double(kViridis.size() - 1);
    const std::size_t i = std::min(std::size_t(pos), kViridis.size() - 2);
    const double f = pos - double(i);
    const auto& a = kViridis[i];
    const auto& b = kViridis[i + 1];
    return {lerp_channel(a[0], b[0], f), lerp_channel(a[1], b[1], f),
            lerp_channel(a[2], b[2], f)};
}

Image render_echogram(const Echogram& e, const Mask* mask, const RenderOptions& opt) {
    if (!(opt.sv_min < opt.sv_max)) {
        throw ParameterError("sv_min must be below sv_max");
    }
    if (!std::isfinite(opt.sv_min) || !std::isfinite(opt.sv_max)) {
        throw ParameterError("the Sv display range must be finite");
    }
    if (opt.scale < 1) {
        throw ParameterError("scale must be >= 1, got " + std::to_string(opt.scale));
    }
    if (mask) {
        require_same_shape(e.rows(), e.cols(), mask->rows(), mask->cols(), "echogram",
                           "overlay mask");
    }

    const std::size_t scale = std::size_t(opt.scale);
    Image img(e.cols() * scale, e.rows() * scale);
    const double span = opt.sv_max - opt.sv_min;
    const unsigned alpha = opt.overlay_rgba[3];

    for (std::size_t r = 0; r < e.rows(); ++r) {
        for (std::size_t c = 0; c < e.cols(); ++c) {
            std::array<std::uint8_t, 3> rgb;
            if (!e.is_valid(r, c)) {
                rgb = opt.no_data_rgb;
            } else {
                rgb = colormap_color(opt.colormap, (e.sv().at(r, c) - opt.sv_min) / span);
            }
            if (mask && mask->get(r, c)) {
                for (int k = 0; k < 3; ++k) {
                    const unsigned blended =
                        opt.overlay_rgba[std::size_t(k)] * alpha + rgb[std::size_t(k)] * (255 - alpha);
                    rgb[std::size_t(k)] = std::uint8_t((blended + 127) / 255);
                }
            }
            // replicate into the scale x scale pixel block, row 0 on top
            for (std::size_t dy = 0; dy < scale; ++dy) {
                std::uint8_t* px = img.pixel(c * scale, r * scale + dy);
                for (std::size_t dx = 0; dx < scale; ++dx) {
                    *px++ = rgb[0];
                    *px++ = rgb[1];
                    *px++ = rgb[2];
                }
            }
        }
    }
    return img;
}

void write_png(const std::filesystem::path& file, const Image& img) {
    if (img.width == 0 || img.height == 0) {
        throw ParameterError("cannot encode an empty image");
    }
    if (img.rgb.size() != 3 * img.width * img.height) {
        throw ParameterError("image buffer does not match its dimensions");
    }

    std::FILE* f = std::fopen(file.string().c_str(), "wb");
    if (!f) throw IoError("cannot write " + file.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    std::vector<png_bytep> rows(img.height);
    for (std::size_t y = 0; y < img.height; ++y) {
        rows[y] = const_cast<png_bytep>(img.rgb.data() + 3 * img.width * y);
    }

    if (!png || !info || setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        std::fclose(f);
        throw IoError("PNG encoding failed for " + file.string());
    }

    png_init_io(png, f);
    // pin the compression setup so identical pixels give identical bytes
    // regardless of the linked zlib's defaults
    png_set_compression_level(png, 6);
    png_set_filter(png, 0, PNG_FILTER_NONE);
    png_set_IHDR(png, info, png_uint_32(img.width), png_uint_32(img.height), 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);

    if (std::fclose(f) != 0) throw IoError("short write to " + file.string());
}

}  // namespace falsebottom
