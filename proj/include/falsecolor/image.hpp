#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "falsecolor/color.hpp"
#include "falsecolor/interpolate.hpp"

namespace falsecolor {

/// 8-bit grayscale raster, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;

    friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// 8-bit RGB raster, row-major.
struct ColorImage {
    int width = 0;
    int height = 0;
    std::vector<Rgb8> pixels;

    friend bool operator==(const ColorImage&, const ColorImage&) = default;
};

/// Real-valued raster, row-major; values may be negative.
struct ScalarField {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    friend bool operator==(const ScalarField&, const ScalarField&) = default;
};

/// False-color a grayscale image: pixel k becomes palette entry samples[k].
inline ColorImage apply_palette(const GrayImage& g, const Palette256& p)
{
    ColorImage out{g.width, g.height, {}};
    out.pixels.reserve(g.samples.size());
    for (std::uint8_t s : g.samples) {
        out.pixels.push_back(p.entries[s]);
    }
    return out;
}

/// BT.601 grayscale conversion: sample k = quantize(luminance(pixel k)).
/// This is what common software and printing pipelines do to a color image.
inline GrayImage to_grayscale(const ColorImage& c)
{
    GrayImage out{c.width, c.height, {}};
    out.samples.reserve(c.pixels.size());
    for (const Rgb8& px : c.pixels) {
        out.samples.push_back(static_cast<std::uint8_t>(quantize(luminance(px))));
    }
    return out;
}

/// Affine map of [min, max] onto [0, 255] with round-half-up. A constant
/// field maps to 127 everywhere.
inline GrayImage normalize_field(const ScalarField& f)
{
    GrayImage out{f.width, f.height, {}};
    out.samples.reserve(f.values.size());
    if (f.values.empty()) {
        return out;
    }
    const auto [lo_it, hi_it] = std::minmax_element(f.values.begin(), f.values.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    for (double v : f.values) {
        const int s = lo == hi ? 127 : quantize((v - lo) / (hi - lo) * 255.0);
        out.samples.push_back(static_cast<std::uint8_t>(s));
    }
    return out;
}

/// Signed-data mapping for diverging palettes. With A = max|v| over the
/// field, value v maps to index floor(127.5 * (1 + v/A)), so -A, 0, +A hit
/// entries 0, 127, 255 exactly. An all-zero field maps to index 127.
/// Negating the field sends index i to 255-i or 254-i (the floor eats one
/// level except when 127.5*(1+v/A) lands on an integer).
inline ColorImage apply_signed(const ScalarField& f, const Palette256& p)
{
    double amplitude = 0.0;
    for (double v : f.values) {
        amplitude = std::max(amplitude, std::abs(v));
    }
    ColorImage out{f.width, f.height, {}};
    out.pixels.reserve(f.values.size());
    for (double v : f.values) {
        int idx = 127;
        if (amplitude > 0.0) {
            idx = static_cast<int>(std::floor(127.5 * (1.0 + v / amplitude)));
            idx = std::clamp(idx, 0, 255);
        }
        out.pixels.push_back(p.entries[static_cast<std::size_t>(idx)]);
    }
    return out;
}

struct DiffMetrics {
    int max_abs_diff = 0;
    double rmse = 0.0;
};

/// Per-pixel difference metrics between two equally sized grayscale images.
inline DiffMetrics compare(const GrayImage& a, const GrayImage& b)
{
    if (a.width != b.width || a.height != b.height) {
        throw std::invalid_argument("compare: image dimensions differ");
    }
    DiffMetrics m;
    double sum_sq = 0.0;
    for (std::size_t k = 0; k < a.samples.size(); ++k) {
        const int d = std::abs(int(a.samples[k]) - int(b.samples[k]));
        m.max_abs_diff = std::max(m.max_abs_diff, d);
        sum_sq += double(d) * double(d);
    }
    if (!a.samples.empty()) {
        m.rmse = std::sqrt(sum_sq / double(a.samples.size()));
    }
    return m;
}

} // namespace falsecolor
