#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace falsecolor {

/// Integer RGB triple, each channel in [0, 255]. The unit of all palette math.
struct Rgb8 {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb8&, const Rgb8&) = default;
};

/// Real-valued RGB triple (interpolant output before quantization).
struct RgbF {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;

    friend bool operator==(const RgbF&, const RgbF&) = default;
};

/// Fully materialized 256-entry color table, indexed by color index i in [0, 255].
struct Palette256 {
    std::array<Rgb8, 256> entries{};

    const Rgb8& operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }
    Rgb8& operator[](int i) { return entries[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Palette256&, const Palette256&) = default;
};

// BT.601 luma weights. 0.299 + 0.587 + 0.114 == 1 by construction.
inline constexpr double kLumaR = 0.299;
inline constexpr double kLumaG = 0.587;
inline constexpr double kLumaB = 0.114;

inline double luminance(double r, double g, double b)
{
    return kLumaR * r + kLumaG * g + kLumaB * b;
}

inline double luminance(const Rgb8& c) { return luminance(c.r, c.g, c.b); }
inline double luminance(const RgbF& c) { return luminance(c.r, c.g, c.b); }

/// HSV value: the maximum channel.
inline double value(double r, double g, double b) { return std::max({r, g, b}); }
inline double value(const Rgb8& c) { return value(c.r, c.g, c.b); }
inline double value(const RgbF& c) { return value(c.r, c.g, c.b); }

/// Normalized luminance L' = L * V / 255. Lower than plain luminance for
/// unsaturated colors; local minima of L' along a palette show up as dark bands.
inline double normalized_luminance(double r, double g, double b)
{
    return luminance(r, g, b) * value(r, g, b) / 255.0;
}

inline double normalized_luminance(const Rgb8& c) { return normalized_luminance(c.r, c.g, c.b); }
inline double normalized_luminance(const RgbF& c) { return normalized_luminance(c.r, c.g, c.b); }

/// Hexcone hue in degrees, [0, 360). Absent for achromatic colors (max == min);
/// never reported as 0 so that gray entries cannot inflate a palette's hue range.
inline std::optional<double> hue(double r, double g, double b)
{
    const double mx = std::max({r, g, b});
    const double mn = std::min({r, g, b});
    if (mx == mn) {
        return std::nullopt;
    }
    const double chroma = mx - mn;
    double h = 0.0;
    if (mx == r) {
        h = 60.0 * std::fmod((g - b) / chroma, 6.0);
    } else if (mx == g) {
        h = 60.0 * ((b - r) / chroma + 2.0);
    } else {
        h = 60.0 * ((r - g) / chroma + 4.0);
    }
    if (h < 0.0) {
        h += 360.0;
    }
    if (h >= 360.0) {
        h -= 360.0;
    }
    return h;
}

inline std::optional<double> hue(const Rgb8& c) { return hue(c.r, c.g, c.b); }
inline std::optional<double> hue(const RgbF& c) { return hue(c.r, c.g, c.b); }

/// Dynamic range D = (L_max - L_min) / 255 over the whole palette, in [0, 1].
inline double dynamic_range(const Palette256& p)
{
    double lo = luminance(p.entries[0]);
    double hi = lo;
    for (const Rgb8& c : p.entries) {
        const double l = luminance(c);
        lo = std::min(lo, l);
        hi = std::max(hi, l);
    }
    return (hi - lo) / 255.0;
}

/// Wrap an angular difference into (-180, 180]; ties at 180 resolve positive.
inline double wrap_angle_diff(double d)
{
    d = std::fmod(d, 360.0);
    if (d <= -180.0) {
        d += 360.0;
    } else if (d > 180.0) {
        d -= 360.0;
    }
    return d;
}

/// Unwrap a hue sequence: each consecutive step is taken as the
/// minimal-magnitude angular difference, so a sweep through the 0/360 wrap
/// point accumulates instead of folding back.
inline std::vector<double> unwrap_hues(std::span<const double> hues)
{
    std::vector<double> out;
    out.reserve(hues.size());
    if (hues.empty()) {
        return out;
    }
    out.push_back(hues[0]);
    for (std::size_t k = 1; k < hues.size(); ++k) {
        out.push_back(out.back() + wrap_angle_diff(hues[k] - hues[k - 1]));
    }
    return out;
}

/// Total hue span of the palette in degrees: unwrapped max - min over the
/// entries with defined hue, 0 if fewer than two are chromatic.
inline double hue_range(const Palette256& p)
{
    std::vector<double> hs;
    hs.reserve(256);
    for (const Rgb8& c : p.entries) {
        if (auto h = hue(c)) {
            hs.push_back(*h);
        }
    }
    if (hs.size() < 2) {
        return 0.0;
    }
    const std::vector<double> u = unwrap_hues(hs);
    const auto [lo, hi] = std::minmax_element(u.begin(), u.end());
    return *hi - *lo;
}

/// Per-index record of the palette curves plotted when comparing palettes.
struct CurvePoint {
    int index = 0;
    Rgb8 color{};
    double luminance = 0.0;
    double normalized_luminance = 0.0;
    std::optional<double> hue;
};

using Curves = std::array<CurvePoint, 256>;

inline Curves curves_for(const Palette256& p)
{
    Curves c{};
    for (int i = 0; i < 256; ++i) {
        const Rgb8& e = p[i];
        c[static_cast<std::size_t>(i)] = CurvePoint{
            i, e, luminance(e), normalized_luminance(e), hue(e)};
    }
    return c;
}

} // namespace falsecolor
