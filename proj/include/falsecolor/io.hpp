#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "falsecolor/color.hpp"
#include "falsecolor/image.hpp"
#include "falsecolor/interpolate.hpp"

namespace falsecolor::io {

/// Malformed input document. line() is 1-based; 0 means the error is not tied
/// to a single line (truncated binary payload, wrong total row count, ...).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line)
    {
    }

    int line() const { return line_; }

private:
    int line_;
};

/// Fixed three-decimal formatting with '.' separator, locale-independent.
inline std::string format_fixed3(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

namespace detail {

// Split into lines; accepts both "\n" and "\r\n" endings.
inline std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = nl == std::string_view::npos ? text.substr(pos)
                                                             : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        if (nl == std::string_view::npos) {
            break;
        }
        pos = nl + 1;
    }
    // A trailing newline produces one empty phantom line; drop it.
    if (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    return lines;
}

inline std::vector<std::string_view> split_fields(std::string_view line, char sep)
{
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t c = line.find(sep, pos);
        if (c == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, c - pos));
        pos = c + 1;
    }
    return fields;
}

inline std::vector<std::string_view> split_whitespace(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
            ++pos;
        }
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t') {
            ++end;
        }
        if (end > pos) {
            tokens.push_back(line.substr(pos, end - pos));
        }
        pos = end;
    }
    return tokens;
}

inline int parse_int(std::string_view token, int line, const char* what)
{
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("expected integer ") + what + ", got \"" +
                                   std::string(token) + "\"");
    }
    return v;
}

inline int parse_channel(std::string_view token, int line)
{
    const int v = parse_int(token, line, "channel value");
    if (v < 0 || v > 255) {
        throw ParseError(line, "channel value " + std::to_string(v) + " out of [0,255]");
    }
    return v;
}

inline double parse_real(std::string_view token, int line)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(v)) {
        throw ParseError(line, "expected finite real number, got \"" + std::string(token) + "\"");
    }
    return v;
}

inline bool is_comment_or_blank(std::string_view line)
{
    for (char ch : line) {
        if (ch == '#') {
            return true;
        }
        if (ch != ' ' && ch != '\t') {
            return false;
        }
    }
    return true;
}

} // namespace detail

// --- palette spec files -----------------------------------------------------
//
//   # optional comments
//   method linear|lagrange
//   point <index> <R> <G> <B>      (ascending indices, 0 first, 255 last)

inline PaletteSpec read_spec(std::string_view text)
{
    const std::vector<std::string_view> lines = detail::split_lines(text);

    PaletteSpec spec;
    bool have_method = false;
    int first_point_line = 0;
    int last_point_line = 0;

    for (std::size_t k = 0; k < lines.size(); ++k) {
        const int lineno = static_cast<int>(k) + 1;
        if (detail::is_comment_or_blank(lines[k])) {
            continue;
        }
        const std::vector<std::string_view> tok = detail::split_whitespace(lines[k]);
        if (tok[0] == "method") {
            if (have_method) {
                throw ParseError(lineno, "duplicate method line");
            }
            if (!spec.points.empty()) {
                throw ParseError(lineno, "method line must come before point lines");
            }
            if (tok.size() != 2) {
                throw ParseError(lineno, "expected \"method linear\" or \"method lagrange\"");
            }
            if (tok[1] == "linear") {
                spec.method = Method::Linear;
            } else if (tok[1] == "lagrange") {
                spec.method = Method::Lagrange;
            } else {
                throw ParseError(lineno, "unknown method \"" + std::string(tok[1]) + "\"");
            }
            have_method = true;
        } else if (tok[0] == "point") {
            if (!have_method) {
                throw ParseError(lineno, "missing method line before first point");
            }
            if (tok.size() != 5) {
                throw ParseError(lineno, "expected \"point <index> <R> <G> <B>\"");
            }
            const int idx = detail::parse_int(tok[1], lineno, "point index");
            if (idx < 0 || idx > 255) {
                throw ParseError(lineno, "point index " + std::to_string(idx) + " out of [0,255]");
            }
            if (!spec.points.empty() && idx <= spec.points.back().index) {
                throw ParseError(lineno, "point indices must be strictly increasing");
            }
            const int r = detail::parse_channel(tok[2], lineno);
            const int g = detail::parse_channel(tok[3], lineno);
            const int b = detail::parse_channel(tok[4], lineno);
            spec.points.push_back(ControlPoint{
                idx, Rgb8{std::uint8_t(r), std::uint8_t(g), std::uint8_t(b)}});
            if (first_point_line == 0) {
                first_point_line = lineno;
            }
            last_point_line = lineno;
        } else {
            throw ParseError(lineno, "unknown directive \"" + std::string(tok[0]) + "\"");
        }
    }

    if (!have_method) {
        throw ParseError(0, "missing method line");
    }
    const std::size_t min_points = spec.method == Method::Lagrange ? 3 : 2;
    if (spec.points.size() < min_points) {
        throw ParseError(last_point_line,
                         "too few points: " + std::to_string(spec.points.size()) + " given, " +
                             std::to_string(min_points) + " required");
    }
    if (spec.points.front().index != 0) {
        throw ParseError(first_point_line, "first point must be at index 0");
    }
    if (spec.points.back().index != 255) {
        throw ParseError(last_point_line, "last point must be at index 255");
    }
    return spec;
}

inline std::string write_spec(const PaletteSpec& spec)
{
    std::string out = spec.method == Method::Lagrange ? "method lagrange\n" : "method linear\n";
    for (const ControlPoint& p : spec.points) {
        out += "point " + std::to_string(p.index) + ' ' + std::to_string(p.color.r) + ' ' +
               std::to_string(p.color.g) + ' ' + std::to_string(p.color.b) + '\n';
    }
    return out;
}

// --- materialized palette CSV -----------------------------------------------

inline std::string write_palette_csv(const Palette256& p)
{
    std::string out = "i,R,G,B\n";
    for (int i = 0; i < 256; ++i) {
        const Rgb8& c = p[i];
        out += std::to_string(i) + ',' + std::to_string(c.r) + ',' + std::to_string(c.g) +
               ',' + std::to_string(c.b) + '\n';
    }
    return out;
}

inline Palette256 read_palette_csv(std::string_view text)
{
    const std::vector<std::string_view> lines = detail::split_lines(text);
    if (lines.empty() || lines[0] != "i,R,G,B") {
        throw ParseError(1, "expected header \"i,R,G,B\"");
    }

    Palette256 p;
    int next = 0;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const int lineno = static_cast<int>(k) + 1;
        if (lines[k].empty()) {
            continue;
        }
        if (next > 255) {
            throw ParseError(lineno, "expected 256 entries, found more");
        }
        const std::vector<std::string_view> f = detail::split_fields(lines[k], ',');
        if (f.size() != 4) {
            throw ParseError(lineno, "expected 4 fields \"i,R,G,B\"");
        }
        const int idx = detail::parse_int(f[0], lineno, "index");
        if (idx != next) {
            throw ParseError(lineno, "index " + std::to_string(idx) + " out of order, expected " +
                                         std::to_string(next));
        }
        p[next] = Rgb8{std::uint8_t(detail::parse_channel(f[1], lineno)),
                       std::uint8_t(detail::parse_channel(f[2], lineno)),
                       std::uint8_t(detail::parse_channel(f[3], lineno))};
        ++next;
    }
    if (next != 256) {
        throw ParseError(0, "expected 256 entries, found " + std::to_string(next));
    }
    return p;
}

// --- curves CSV ---------------------------------------------------------------

/// Header "i,R,G,B,L,Lnorm,hue"; L, Lnorm and hue carry three decimals; the
/// hue field is left empty for achromatic entries.
inline std::string write_curves_csv(const Curves& curves)
{
    std::string out = "i,R,G,B,L,Lnorm,hue\n";
    for (const CurvePoint& cp : curves) {
        out += std::to_string(cp.index) + ',' + std::to_string(cp.color.r) + ',' +
               std::to_string(cp.color.g) + ',' + std::to_string(cp.color.b) + ',' +
               format_fixed3(cp.luminance) + ',' + format_fixed3(cp.normalized_luminance) + ',';
        if (cp.hue) {
            out += format_fixed3(*cp.hue);
        }
        out += '\n';
    }
    return out;
}

// --- PNM rasters ----------------------------------------------------------------
//
// Readers accept ASCII (P2/P3) and binary (P5/P6) with '#' header comments and
// require maxval 255. Writers always emit the binary variant, byte-exactly:
// "P5\n<w> <h>\n255\n" + payload.

namespace detail {

inline bool is_pnm_space(char c)
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

struct PnmCursor {
    std::string_view data;
    std::size_t pos = 0;

    void skip_space_and_comments()
    {
        while (pos < data.size()) {
            if (is_pnm_space(data[pos])) {
                ++pos;
            } else if (data[pos] == '#') {
                while (pos < data.size() && data[pos] != '\n') {
                    ++pos;
                }
            } else {
                break;
            }
        }
    }

    long next_int(const char* what)
    {
        skip_space_and_comments();
        long v = 0;
        const auto [ptr, ec] = std::from_chars(data.data() + pos, data.data() + data.size(), v);
        if (ec != std::errc{} || ptr == data.data() + pos) {
            throw ParseError(0, std::string("malformed PNM: expected ") + what);
        }
        pos = static_cast<std::size_t>(ptr - data.data());
        return v;
    }
};

struct PnmHeader {
    bool binary = false;
    int width = 0;
    int height = 0;
    std::size_t payload_pos = 0;
};

inline PnmHeader read_pnm_header(std::string_view data, char ascii_magic, char binary_magic)
{
    if (data.size() < 2 || data[0] != 'P' ||
        (data[1] != ascii_magic && data[1] != binary_magic)) {
        throw ParseError(0, "unsupported PNM magic");
    }
    PnmCursor cur{data, 2};
    const long w = cur.next_int("width");
    const long h = cur.next_int("height");
    const long maxval = cur.next_int("maxval");
    if (w <= 0 || h <= 0 || w > 1 << 20 || h > 1 << 20 ||
        static_cast<long long>(w) * h > 1LL << 31) {
        throw ParseError(0, "PNM dimensions out of range");
    }
    if (maxval != 255) {
        throw ParseError(0, "unsupported maxval " + std::to_string(maxval) + " (must be 255)");
    }
    PnmHeader hdr;
    hdr.binary = data[1] == binary_magic;
    hdr.width = static_cast<int>(w);
    hdr.height = static_cast<int>(h);
    if (hdr.binary) {
        // Exactly one whitespace byte separates the header from the payload.
        if (cur.pos >= data.size() || !is_pnm_space(data[cur.pos])) {
            throw ParseError(0, "malformed PNM header: missing payload separator");
        }
        hdr.payload_pos = cur.pos + 1;
    } else {
        hdr.payload_pos = cur.pos;
    }
    return hdr;
}

inline std::vector<std::uint8_t> read_pnm_payload(std::string_view data, const PnmHeader& hdr,
                                                  std::size_t count)
{
    std::vector<std::uint8_t> out;
    out.reserve(count);
    if (hdr.binary) {
        if (data.size() - hdr.payload_pos < count) {
            throw ParseError(0, "truncated PNM payload");
        }
        const char* raw = data.data() + hdr.payload_pos;
        out.assign(raw, raw + count);
    } else {
        PnmCursor cur{data, hdr.payload_pos};
        for (std::size_t k = 0; k < count; ++k) {
            cur.skip_space_and_comments();
            if (cur.pos >= data.size()) {
                throw ParseError(0, "truncated PNM payload");
            }
            const long v = cur.next_int("sample");
            if (v < 0 || v > 255) {
                throw ParseError(0, "PNM sample " + std::to_string(v) + " out of [0,255]");
            }
            out.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return out;
}

} // namespace detail

inline GrayImage read_pgm(std::string_view data)
{
    const detail::PnmHeader hdr = detail::read_pnm_header(data, '2', '5');
    const std::size_t count = std::size_t(hdr.width) * std::size_t(hdr.height);
    return GrayImage{hdr.width, hdr.height, detail::read_pnm_payload(data, hdr, count)};
}

inline std::string write_pgm(const GrayImage& img)
{
    std::string out = "P5\n" + std::to_string(img.width) + ' ' + std::to_string(img.height) +
                      "\n255\n";
    if (!img.samples.empty()) {
        out.append(reinterpret_cast<const char*>(img.samples.data()), img.samples.size());
    }
    return out;
}

inline ColorImage read_ppm(std::string_view data)
{
    const detail::PnmHeader hdr = detail::read_pnm_header(data, '3', '6');
    const std::size_t count = 3 * std::size_t(hdr.width) * std::size_t(hdr.height);
    const std::vector<std::uint8_t> raw = detail::read_pnm_payload(data, hdr, count);
    ColorImage img{hdr.width, hdr.height, {}};
    img.pixels.reserve(count / 3);
    for (std::size_t k = 0; k < count; k += 3) {
        img.pixels.push_back(Rgb8{raw[k], raw[k + 1], raw[k + 2]});
    }
    return img;
}

inline std::string write_ppm(const ColorImage& img)
{
    std::string out = "P6\n" + std::to_string(img.width) + ' ' + std::to_string(img.height) +
                      "\n255\n";
    out.reserve(out.size() + 3 * img.pixels.size());
    for (const Rgb8& px : img.pixels) {
        out.push_back(static_cast<char>(px.r));
        out.push_back(static_cast<char>(px.g));
        out.push_back(static_cast<char>(px.b));
    }
    return out;
}

// --- scalar field CSV -----------------------------------------------------------

/// Rectangular comma-separated grid of decimal reals, one row per line.
inline ScalarField read_field_csv(std::string_view text)
{
    const std::vector<std::string_view> lines = detail::split_lines(text);

    ScalarField field;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const int lineno = static_cast<int>(k) + 1;
        if (lines[k].empty()) {
            continue;
        }
        const std::vector<std::string_view> cells = detail::split_fields(lines[k], ',');
        if (field.width == 0) {
            field.width = static_cast<int>(cells.size());
        } else if (static_cast<int>(cells.size()) != field.width) {
            throw ParseError(lineno, "ragged row: " + std::to_string(cells.size()) +
                                         " cells, expected " + std::to_string(field.width));
        }
        for (std::string_view cell : cells) {
            field.values.push_back(detail::parse_real(cell, lineno));
        }
        ++field.height;
    }
    if (field.width == 0 || field.height == 0) {
        throw ParseError(0, "empty scalar field");
    }
    return field;
}

} // namespace falsecolor::io
