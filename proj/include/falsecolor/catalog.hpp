#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "falsecolor/color.hpp"
#include "falsecolor/interpolate.hpp"

namespace falsecolor::catalog {

/// One of the eight corner colors of the 24-bit RGB cube, with its luminance.
struct BasicColor {
    std::string_view name;
    Rgb8 color{};
    double luminance = 0.0;
};

/// The eight basic colors ordered by strictly increasing luminance:
/// black < blue < red < magenta < green < cyan < yellow < white.
inline std::array<BasicColor, 8> basic_colors()
{
    constexpr Rgb8 black{0, 0, 0};
    constexpr Rgb8 blue{0, 0, 255};
    constexpr Rgb8 red{255, 0, 0};
    constexpr Rgb8 magenta{255, 0, 255};
    constexpr Rgb8 green{0, 255, 0};
    constexpr Rgb8 cyan{0, 255, 255};
    constexpr Rgb8 yellow{255, 255, 0};
    constexpr Rgb8 white{255, 255, 255};
    return {{
        {"black", black, luminance(black)},
        {"blue", blue, luminance(blue)},
        {"red", red, luminance(red)},
        {"magenta", magenta, luminance(magenta)},
        {"green", green, luminance(green)},
        {"cyan", cyan, luminance(cyan)},
        {"yellow", yellow, luminance(yellow)},
        {"white", white, luminance(white)},
    }};
}

/// Linear palette over black, red, magenta, cyan, yellow and white (green and
/// blue omitted), each placed at round(luminance). Luminance is piecewise
/// affine in the color index and tracks i within 1 at every entry.
inline PaletteSpec six_point_linear()
{
    PaletteSpec spec;
    spec.method = Method::Linear;
    for (const BasicColor& bc : basic_colors()) {
        if (bc.name == "green" || bc.name == "blue") {
            continue;
        }
        spec.points.push_back(ControlPoint{quantize(bc.luminance), bc.color});
    }
    return spec;
}

/// Stable CLI-facing identifiers of the built-in palettes.
inline std::span<const std::string_view> builtin_names()
{
    static constexpr std::string_view names[] = {
        "gray", "six-linear", "diverging-by", "four-point-demo",
        "rainbow-ref", "demo-dark",
    };
    return names;
}

/// Returns the named built-in palette spec; throws std::invalid_argument for
/// unknown names. "rainbow-ref" and "demo-dark" are deliberate negative
/// references; everything else is grayscale-safe.
inline PaletteSpec builtin(std::string_view name)
{
    if (name == "gray") {
        return PaletteSpec{Method::Linear, {{0, {0, 0, 0}}, {255, {255, 255, 255}}}};
    }
    if (name == "six-linear") {
        return six_point_linear();
    }
    if (name == "diverging-by") {
        // Blue -> gray -> yellow; endpoint luminances 29.07 and 225.93
        // straddle the gray midpoint at 127.
        return PaletteSpec{Method::Lagrange,
                           {{0, {0, 0, 255}}, {127, {127, 127, 127}}, {255, {255, 255, 0}}}};
    }
    if (name == "four-point-demo") {
        return PaletteSpec{Method::Lagrange,
                           {{0, {0, 0, 0}},
                            {85, {0, 0, 255}},
                            {170, {255, 0, 128}},
                            {255, {255, 255, 255}}}};
    }
    if (name == "rainbow-ref") {
        // Classic blue->red rainbow; fails the luminance check by design.
        return PaletteSpec{Method::Linear,
                           {{0, {0, 0, 255}},
                            {64, {0, 255, 255}},
                            {128, {0, 255, 0}},
                            {191, {255, 255, 0}},
                            {255, {255, 0, 0}}}};
    }
    if (name == "demo-dark") {
        // Monotone luminance but a normalized-luminance dip at the
        // near-white gray point: the dark-band pathology.
        return PaletteSpec{Method::Linear,
                           {{0, {0, 0, 0}},
                            {100, {200, 60, 0}},
                            {226, {255, 255, 0}},
                            {234, {230, 230, 230}},
                            {255, {255, 255, 255}}}};
    }
    throw std::invalid_argument("unknown catalog palette: " + std::string(name));
}

} // namespace falsecolor::catalog
