// falsecolor: build, validate and apply false-color palettes whose luminance
// varies monotonically with the color index, so grayscale reproduction
// (printers, e-ink) preserves the encoded data.
//
// Exit codes: 0 success / palette valid, 1 validation found violations,
// 2 usage, parse or I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <falsecolor/falsecolor.hpp>

namespace {

using namespace falsecolor;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) {
        throw std::runtime_error("failed reading " + path);
    }
    return std::move(ss).str();
}

void write_file(const std::string& path, std::string_view bytes)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::runtime_error("failed writing " + path);
    }
}

const char* kind_name(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::LuminanceDecrease: return "luminance_decrease";
    case ViolationKind::NormalizedLuminanceDecrease: return "normalized_luminance_decrease";
    case ViolationKind::DarkArea: return "dark_area";
    }
    return "?";
}

const char* direction_name(Direction d)
{
    switch (d) {
    case Direction::Increasing: return "increasing";
    case Direction::Decreasing: return "decreasing";
    case Direction::Neither: return "neither";
    }
    return "?";
}

int run_build(const std::string& spec_path, const std::string& out_path)
{
    const PaletteSpec spec = io::read_spec(read_file(spec_path));
    if (spec.method == Method::Lagrange && spec.points.size() > 4) {
        std::cerr << "warning: " << spec.points.size()
                  << "-point Lagrange interpolation is prone to local minima; "
                     "consider the linear method\n";
    }
    const Palette256 palette = build_palette(spec);
    write_file(out_path, io::write_palette_csv(palette));
    std::cout << "D=" << io::format_fixed3(dynamic_range(palette))
              << " hue_range=" << io::format_fixed3(hue_range(palette)) << "\n";
    return 0;
}

int run_validate(const std::string& palette_path, double eps, bool strict)
{
    const Palette256 palette = io::read_palette_csv(read_file(palette_path));
    const ValidationReport report = validate(palette, strict ? 0.0 : eps);

    std::cout << "direction: " << direction_name(report.direction) << "\n";
    std::cout << "luminance_monotone: " << (report.luminance_monotone ? "yes" : "no") << "\n";
    std::cout << "normalized_luminance_monotone: "
              << (report.normalized_luminance_monotone ? "yes" : "no") << "\n";
    std::cout << "dynamic_range: " << io::format_fixed3(report.dynamic_range) << "\n";
    std::cout << "hue_range: " << io::format_fixed3(report.hue_range) << "\n";
    std::cout << "violations: " << report.violations.size() << "\n";
    for (const Violation& v : report.violations) {
        std::cout << "  i=" << v.index << ' ' << kind_name(v.kind)
                  << " magnitude=" << io::format_fixed3(v.magnitude) << "\n";
    }
    std::cout << "dark_areas: " << report.dark_areas.size() << "\n";
    for (const IndexRange& r : report.dark_areas) {
        std::cout << "  [" << r.first << ", " << r.last << "]\n";
    }
    return report.luminance_monotone && report.normalized_luminance_monotone ? 0 : 1;
}

int run_apply(const std::string& palette_path, const std::string& input_path,
              const std::string& out_path)
{
    const Palette256 palette = io::read_palette_csv(read_file(palette_path));
    const GrayImage gray = io::read_pgm(read_file(input_path));
    write_file(out_path, io::write_ppm(apply_palette(gray, palette)));
    return 0;
}

int run_apply_signed(const std::string& palette_path, const std::string& input_path,
                     const std::string& out_path)
{
    const Palette256 palette = io::read_palette_csv(read_file(palette_path));
    const ScalarField field = io::read_field_csv(read_file(input_path));
    write_file(out_path, io::write_ppm(apply_signed(field, palette)));
    return 0;
}

int run_grayscale(const std::string& input_path, const std::string& out_path)
{
    const ColorImage color = io::read_ppm(read_file(input_path));
    write_file(out_path, io::write_pgm(to_grayscale(color)));
    return 0;
}

int run_compare(const std::string& a_path, const std::string& b_path)
{
    const GrayImage a = io::read_pgm(read_file(a_path));
    const GrayImage b = io::read_pgm(read_file(b_path));
    const DiffMetrics m = compare(a, b);
    std::cout << "max_abs_diff=" << m.max_abs_diff << " rmse=" << io::format_fixed3(m.rmse)
              << "\n";
    return 0;
}

int run_curves(const std::string& palette_path, const std::string& out_path)
{
    const Palette256 palette = io::read_palette_csv(read_file(palette_path));
    write_file(out_path, io::write_curves_csv(curves_for(palette)));
    return 0;
}

int run_catalog(bool list, const std::string& name, const std::string& out_path)
{
    if (list) {
        for (std::string_view n : catalog::builtin_names()) {
            std::cout << n << "\n";
        }
        return 0;
    }
    if (name.empty() || out_path.empty()) {
        throw std::runtime_error("catalog: need --list, or --name together with --out");
    }
    write_file(out_path, io::write_spec(catalog::builtin(name)));
    return 0;
}

int run_swatch(const std::string& palette_path, const std::string& out_path, int height)
{
    const Palette256 palette = io::read_palette_csv(read_file(palette_path));
    ColorImage strip{256, height, {}};
    strip.pixels.reserve(256 * static_cast<std::size_t>(height));
    for (int row = 0; row < height; ++row) {
        for (int i = 0; i < 256; ++i) {
            strip.pixels.push_back(palette[i]);
        }
    }
    write_file(out_path, io::write_ppm(strip));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"False-color palettes with monotone luminance for grayscale-safe figures"};
    app.require_subcommand(1);

    std::string build_spec, build_out;
    CLI::App* build = app.add_subcommand("build", "Materialize a 256-entry palette CSV from a spec file");
    build->add_option("--spec", build_spec, "palette spec file")->required();
    build->add_option("--out", build_out, "output palette CSV")->required();

    std::string val_palette;
    double val_eps = 1.0;
    bool val_strict = false;
    CLI::App* val = app.add_subcommand("validate", "Check a palette for monotone (normalized) luminance");
    val->add_option("--palette", val_palette, "palette CSV")->required();
    val->add_option("--epsilon", val_eps, "tolerated adjacent decrease (default 1.0)")
        ->check(CLI::NonNegativeNumber);
    val->add_flag("--strict", val_strict, "strict mode: epsilon = 0");

    std::string apply_palette_path, apply_in, apply_out;
    CLI::App* apply = app.add_subcommand("apply", "False-color a PGM image");
    apply->add_option("--palette", apply_palette_path, "palette CSV")->required();
    apply->add_option("--input", apply_in, "input PGM image")->required();
    apply->add_option("--out", apply_out, "output PPM image")->required();

    std::string sig_palette, sig_in, sig_out;
    CLI::App* sig = app.add_subcommand("apply-signed",
                                       "False-color a signed scalar field (CSV), zero at the palette midpoint");
    sig->add_option("--palette", sig_palette, "palette CSV")->required();
    sig->add_option("--input", sig_in, "input scalar-field CSV")->required();
    sig->add_option("--out", sig_out, "output PPM image")->required();

    std::string gs_in, gs_out;
    CLI::App* gs = app.add_subcommand("grayscale", "Convert a PPM image to BT.601 grayscale");
    gs->add_option("--input", gs_in, "input PPM image")->required();
    gs->add_option("--out", gs_out, "output PGM image")->required();

    std::string cmp_a, cmp_b;
    CLI::App* cmp = app.add_subcommand("compare", "Pixelwise difference between two PGM images");
    cmp->add_option("--a", cmp_a, "first PGM image")->required();
    cmp->add_option("--b", cmp_b, "second PGM image")->required();

    std::string cur_palette, cur_out;
    CLI::App* cur = app.add_subcommand("curves", "Export per-index luminance/hue curves as CSV");
    cur->add_option("--palette", cur_palette, "palette CSV")->required();
    cur->add_option("--out", cur_out, "output curves CSV")->required();

    bool cat_list = false;
    std::string cat_name, cat_out;
    CLI::App* cat = app.add_subcommand("catalog", "List built-in palettes or export one as a spec file");
    cat->add_flag("--list", cat_list, "print all built-in palette names");
    cat->add_option("--name", cat_name, "built-in palette name");
    cat->add_option("--out", cat_out, "output spec file");

    std::string sw_palette, sw_out;
    int sw_height = 32;
    CLI::App* sw = app.add_subcommand("swatch", "Render a 256-wide color strip of a palette");
    sw->add_option("--palette", sw_palette, "palette CSV")->required();
    sw->add_option("--out", sw_out, "output PPM image")->required();
    sw->add_option("--height", sw_height, "strip height in pixels (default 32)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*build) return run_build(build_spec, build_out);
        if (*val) return run_validate(val_palette, val_eps, val_strict);
        if (*apply) return run_apply(apply_palette_path, apply_in, apply_out);
        if (*sig) return run_apply_signed(sig_palette, sig_in, sig_out);
        if (*gs) return run_grayscale(gs_in, gs_out);
        if (*cmp) return run_compare(cmp_a, cmp_b);
        if (*cur) return run_curves(cur_palette, cur_out);
        if (*cat) return run_catalog(cat_list, cat_name, cat_out);
        if (*sw) return run_swatch(sw_palette, sw_out, sw_height);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
