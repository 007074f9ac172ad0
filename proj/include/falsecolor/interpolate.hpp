#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "falsecolor/color.hpp"

namespace falsecolor {

/// A designer-fixed (index, color) pair; the interpolation node of a palette spec.
struct ControlPoint {
    int index = 0;
    Rgb8 color{};

    friend bool operator==(const ControlPoint&, const ControlPoint&) = default;
};

enum class Method { Linear, Lagrange };

/// Interpolation method plus ordered control points. Indices must be strictly
/// increasing, start at 0 and end at 255; linear needs >= 2 points, lagrange >= 3.
struct PaletteSpec {
    Method method = Method::Linear;
    std::vector<ControlPoint> points;

    friend bool operator==(const PaletteSpec&, const PaletteSpec&) = default;
};

inline void validate_spec(const PaletteSpec& spec)
{
    const std::size_t min_points = spec.method == Method::Lagrange ? 3 : 2;
    if (spec.points.size() < min_points) {
        throw std::invalid_argument("palette spec: too few control points (" +
                                    std::to_string(spec.points.size()) + ")");
    }
    for (std::size_t k = 0; k < spec.points.size(); ++k) {
        const int idx = spec.points[k].index;
        if (idx < 0 || idx > 255) {
            throw std::invalid_argument("palette spec: control index out of [0,255]");
        }
        if (k > 0 && idx <= spec.points[k - 1].index) {
            throw std::invalid_argument("palette spec: control indices must be strictly increasing");
        }
    }
    if (spec.points.front().index != 0) {
        throw std::invalid_argument("palette spec: first control point must be at index 0");
    }
    if (spec.points.back().index != 255) {
        throw std::invalid_argument("palette spec: last control point must be at index 255");
    }
}

/// Cubic Lagrange interpolant through nodes 0, 85, 170, 255 with fixed values
/// c0, c85, c170, c255. May overshoot [0, 255]; callers clamp afterwards.
inline double lagrange4(double c0, double c85, double c170, double c255, double i)
{
    return -(i - 85.0) * (i - 170.0) * (i - 255.0) / 3684750.0 * c0
           + i * (i - 170.0) * (i - 255.0) / 1228250.0 * c85
           - i * (i - 85.0) * (i - 255.0) / 1228250.0 * c170
           + i * (i - 85.0) * (i - 170.0) / 3684750.0 * c255;
}

/// Quadratic Lagrange interpolant through nodes 0, m, 255 for any interior
/// middle node m.
inline double lagrange3(double c0, double cm, double c255, int m, double i)
{
    if (m <= 0 || m >= 255) {
        throw std::invalid_argument("lagrange3: middle node m must lie strictly inside (0, 255)");
    }
    const double md = m;
    return (i - md) * (i - 255.0) / (255.0 * md) * c0
           + i * (i - 255.0) / (md * (md - 255.0)) * cm
           + i * (i - md) / (255.0 * (255.0 - md)) * c255;
}

/// lagrange3 specialized to the centered middle node m = 127.
inline double lagrange3_mid(double c0, double c127, double c255, double i)
{
    return (i - 127.0) * (i - 255.0) / 32385.0 * c0
           - i * (i - 255.0) / 16256.0 * c127
           + i * (i - 127.0) / 32640.0 * c255;
}

/// One channel's value at one control index.
struct ChannelNode {
    int index = 0;
    double value = 0.0;
};

/// Generic Lagrange basis over arbitrary distinct nodes. Factor-wise products
/// keep node reproduction exact: at i == nodes[k].index every other basis term
/// carries an exact zero factor and the k-th collapses to 1.
inline double lagrange_generic(std::span<const ChannelNode> nodes, double i)
{
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        double basis = 1.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j != k) {
                basis *= (i - nodes[j].index) / double(nodes[k].index - nodes[j].index);
            }
        }
        sum += basis * nodes[k].value;
    }
    return sum;
}

/// Piecewise line function through the nodes; exact at every node.
inline double linear_interp(std::span<const ChannelNode> nodes, double i)
{
    std::size_t k = 0;
    while (k + 2 < nodes.size() && i > nodes[k + 1].index) {
        ++k;
    }
    const ChannelNode& a = nodes[k];
    const ChannelNode& b = nodes[k + 1];
    const double t = (i - a.index) / double(b.index - a.index);
    return a.value + t * (b.value - a.value);
}

/// Clamp an interpolated channel into the representable range: negative values
/// become zero, values above 255 become 255.
inline double clamp(double x)
{
    return std::min(255.0, std::max(0.0, x));
}

/// Round-half-up conversion of a clamped channel to an integer in [0, 255].
inline int quantize(double x)
{
    return static_cast<int>(std::floor(x + 0.5));
}

namespace detail {

inline bool nodes_match(const std::vector<ControlPoint>& pts, std::initializer_list<int> idx)
{
    if (pts.size() != idx.size()) {
        return false;
    }
    auto it = idx.begin();
    for (const ControlPoint& p : pts) {
        if (p.index != *it++) {
            return false;
        }
    }
    return true;
}

inline double interpolate_channel(const PaletteSpec& spec,
                                  std::span<const ChannelNode> nodes, double i)
{
    if (spec.method == Method::Linear) {
        return linear_interp(nodes, i);
    }
    // Closed forms are the live path whenever the node layout admits them;
    // anything else falls back to the generic basis.
    if (nodes.size() == 3) {
        const int m = nodes[1].index;
        if (m == 127) {
            return lagrange3_mid(nodes[0].value, nodes[1].value, nodes[2].value, i);
        }
        return lagrange3(nodes[0].value, nodes[1].value, nodes[2].value, m, i);
    }
    if (nodes.size() == 4 && nodes_match(spec.points, {0, 85, 170, 255})) {
        return lagrange4(nodes[0].value, nodes[1].value, nodes[2].value, nodes[3].value, i);
    }
    return lagrange_generic(nodes, i);
}

} // namespace detail

/// Materialize the clamped, real-valued palette curves (pre-quantization).
inline std::array<RgbF, 256> build_palette_real(const PaletteSpec& spec)
{
    validate_spec(spec);

    std::array<std::vector<ChannelNode>, 3> nodes;
    for (auto& n : nodes) {
        n.reserve(spec.points.size());
    }
    for (const ControlPoint& p : spec.points) {
        nodes[0].push_back({p.index, double(p.color.r)});
        nodes[1].push_back({p.index, double(p.color.g)});
        nodes[2].push_back({p.index, double(p.color.b)});
    }

    std::array<RgbF, 256> out{};
    for (int i = 0; i < 256; ++i) {
        const double x = i;
        out[static_cast<std::size_t>(i)] = RgbF{
            clamp(detail::interpolate_channel(spec, nodes[0], x)),
            clamp(detail::interpolate_channel(spec, nodes[1], x)),
            clamp(detail::interpolate_channel(spec, nodes[2], x)),
        };
    }
    return out;
}

/// Build the 256-entry palette: interpolate each channel independently,
/// clamp, then quantize. Control colors are reproduced bit-exactly.
inline Palette256 build_palette(const PaletteSpec& spec)
{
    const std::array<RgbF, 256> real = build_palette_real(spec);
    Palette256 p;
    for (int i = 0; i < 256; ++i) {
        const RgbF& c = real[static_cast<std::size_t>(i)];
        p[i] = Rgb8{static_cast<std::uint8_t>(quantize(c.r)),
                    static_cast<std::uint8_t>(quantize(c.g)),
                    static_cast<std::uint8_t>(quantize(c.b))};
    }
    return p;
}

} // namespace falsecolor
