#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "falsecolor/color.hpp"

namespace falsecolor {

enum class ViolationKind { LuminanceDecrease, NormalizedLuminanceDecrease, DarkArea };

/// A single defect: a step against the dominant direction between index and
/// index+1, or a local minimum at index. magnitude is the size of the decrease
/// or the depth of the minimum, always > 0.
struct Violation {
    int index = 0;
    ViolationKind kind = ViolationKind::LuminanceDecrease;
    double magnitude = 0.0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Inclusive index range [first, last].
struct IndexRange {
    int first = 0;
    int last = 0;

    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

enum class Direction { Increasing, Decreasing, Neither };

struct ValidationReport {
    Direction direction = Direction::Neither;
    bool luminance_monotone = false;
    bool normalized_luminance_monotone = false;
    std::vector<Violation> violations;
    double dynamic_range = 0.0;
    double hue_range = 0.0;
    std::vector<IndexRange> dark_areas;
};

namespace detail {

inline std::array<double, 256> luminance_curve(const Palette256& p)
{
    std::array<double, 256> l{};
    for (int i = 0; i < 256; ++i) {
        l[static_cast<std::size_t>(i)] = luminance(p[i]);
    }
    return l;
}

inline std::array<double, 256> normalized_luminance_curve(const Palette256& p)
{
    std::array<double, 256> l{};
    for (int i = 0; i < 256; ++i) {
        l[static_cast<std::size_t>(i)] = normalized_luminance(p[i]);
    }
    return l;
}

// Dominant direction: sign of the endpoint difference, ties read as increasing.
inline bool is_increasing(const std::array<double, 256>& seq)
{
    return seq[255] - seq[0] >= 0.0;
}

// Flag every adjacent pair stepping against the dominant direction by more
// than eps. Plateaus are tolerated in both directions.
inline std::vector<Violation> monotonicity_violations(const std::array<double, 256>& seq,
                                                      double eps, ViolationKind kind)
{
    const bool increasing = is_increasing(seq);
    std::vector<Violation> out;
    for (int i = 0; i < 255; ++i) {
        const double step = seq[static_cast<std::size_t>(i) + 1] - seq[static_cast<std::size_t>(i)];
        const double against = increasing ? -step : step;
        if (against > eps) {
            out.push_back(Violation{i, kind, against});
        }
    }
    return out;
}

} // namespace detail

/// Adjacent luminance steps against the dominant direction, beyond eps.
/// Default eps = 1 absorbs quantization fluctuations; eps = 0 is strict.
inline std::vector<Violation> check_monotone_luminance(const Palette256& p, double eps = 1.0)
{
    return detail::monotonicity_violations(detail::luminance_curve(p), eps,
                                           ViolationKind::LuminanceDecrease);
}

/// Same check over normalized luminance L' = L * V / 255.
inline std::vector<Violation> check_monotone_normalized_luminance(const Palette256& p,
                                                                  double eps = 1.0)
{
    return detail::monotonicity_violations(detail::normalized_luminance_curve(p), eps,
                                           ViolationKind::NormalizedLuminanceDecrease);
}

/// Strict local minima of the normalized-luminance sequence, plateau-aware:
/// a maximal constant run lower than both neighbors counts once and is
/// reported as its index range. Each such minimum shows as a dark band.
inline std::vector<IndexRange> find_dark_areas(const Palette256& p)
{
    const std::array<double, 256> lp = detail::normalized_luminance_curve(p);
    std::vector<IndexRange> out;
    int i = 1;
    while (i < 255) {
        int j = i;
        while (j + 1 <= 255 && lp[static_cast<std::size_t>(j) + 1] == lp[static_cast<std::size_t>(i)]) {
            ++j;
        }
        if (j < 255 && lp[static_cast<std::size_t>(i) - 1] > lp[static_cast<std::size_t>(i)] &&
            lp[static_cast<std::size_t>(j) + 1] > lp[static_cast<std::size_t>(j)]) {
            out.push_back(IndexRange{i, j});
        }
        i = j + 1;
    }
    return out;
}

/// Full grayscale-safety report: both monotonicity checks, dark areas,
/// dynamic range and hue range.
inline ValidationReport validate(const Palette256& p, double eps = 1.0)
{
    const std::array<double, 256> lum = detail::luminance_curve(p);
    const std::array<double, 256> lp = detail::normalized_luminance_curve(p);

    ValidationReport report;
    std::vector<Violation> lum_violations =
        detail::monotonicity_violations(lum, eps, ViolationKind::LuminanceDecrease);
    std::vector<Violation> norm_violations =
        detail::monotonicity_violations(lp, eps, ViolationKind::NormalizedLuminanceDecrease);

    report.luminance_monotone = lum_violations.empty();
    report.normalized_luminance_monotone = norm_violations.empty();
    report.direction = report.luminance_monotone
                           ? (detail::is_increasing(lum) ? Direction::Increasing
                                                         : Direction::Decreasing)
                           : Direction::Neither;
    report.dark_areas = find_dark_areas(p);

    report.violations = std::move(lum_violations);
    report.violations.insert(report.violations.end(), norm_violations.begin(),
                             norm_violations.end());
    for (const IndexRange& r : report.dark_areas) {
        const double floor_value = lp[static_cast<std::size_t>(r.first)];
        const double depth = std::min(lp[static_cast<std::size_t>(r.first) - 1],
                                      lp[static_cast<std::size_t>(r.last) + 1]) -
                             floor_value;
        report.violations.push_back(Violation{r.first, ViolationKind::DarkArea, depth});
    }

    report.dynamic_range = dynamic_range(p);
    report.hue_range = hue_range(p);
    return report;
}

} // namespace falsecolor
