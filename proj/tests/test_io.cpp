#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>
#include <string>

#include <falsecolor/catalog.hpp>
#include <falsecolor/io.hpp>

using namespace falsecolor;

namespace {

int error_line(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const io::ParseError& e) {
        return e.line();
    }
    return -1;
}

GrayImage random_gray(std::mt19937& rng)
{
    std::uniform_int_distribution<int> dim(1, 16);
    std::uniform_int_distribution<int> s(0, 255);
    GrayImage g{dim(rng), dim(rng), {}};
    for (int k = 0; k < g.width * g.height; ++k) {
        g.samples.push_back(std::uint8_t(s(rng)));
    }
    return g;
}

ColorImage random_color(std::mt19937& rng)
{
    std::uniform_int_distribution<int> dim(1, 16);
    std::uniform_int_distribution<int> s(0, 255);
    ColorImage c{dim(rng), dim(rng), {}};
    for (int k = 0; k < c.width * c.height; ++k) {
        c.pixels.push_back(Rgb8{std::uint8_t(s(rng)), std::uint8_t(s(rng)), std::uint8_t(s(rng))});
    }
    return c;
}

} // namespace

TEST_CASE("read_spec parses a minimal gray spec", "[io]")
{
    const PaletteSpec spec = io::read_spec("method linear\npoint 0 0 0 0\npoint 255 255 255 255");
    CHECK(spec.method == Method::Linear);
    REQUIRE(spec.points.size() == 2);
    CHECK(spec.points[0] == ControlPoint{0, {0, 0, 0}});
    CHECK(spec.points[1] == ControlPoint{255, {255, 255, 255}});
}

TEST_CASE("read_spec tolerates comments, blank lines and CRLF", "[io]")
{
    const std::string text =
        "# a palette\r\n"
        "\r\n"
        "method lagrange\r\n"
        "   # indented comment\r\n"
        "point 0   0 0 255\r\n"
        "point 127 127 127 127\r\n"
        "point 255 255 255 0\r\n";
    const PaletteSpec spec = io::read_spec(text);
    CHECK(spec.method == Method::Lagrange);
    CHECK(spec.points.size() == 3);
    CHECK(spec.points[1].index == 127);
}

TEST_CASE("read_spec reports errors with line numbers", "[io]")
{
    CHECK(error_line([] { io::read_spec("point 0 0 0 0\npoint 255 1 1 1"); }) == 1);
    CHECK(error_line([] { io::read_spec("method linear\npoint 10 300 0 0\npoint 255 1 1 1"); }) == 2);
    CHECK(error_line([] {
              io::read_spec("method linear\npoint 0 0 0 0\npoint 0 1 1 1\npoint 255 1 1 1");
          }) == 3);
    CHECK(error_line([] { io::read_spec("method linear\npoint 0 0 0 0\npoint 254 1 1 1"); }) == 3);
    CHECK(error_line([] { io::read_spec("method linear\npoint 5 0 0 0\npoint 255 1 1 1"); }) == 2);
    CHECK(error_line([] { io::read_spec("method linear\npoint 0 0 0 0\npoint 255 1 one 1"); }) == 3);
    CHECK(error_line([] { io::read_spec("method cubic\npoint 0 0 0 0"); }) == 1);
    CHECK(error_line([] { io::read_spec("method linear\nmethod linear\npoint 0 0 0 0"); }) == 2);
    CHECK(error_line([] { io::read_spec("method lagrange\npoint 0 0 0 0\npoint 255 1 1 1"); }) == 3);
    CHECK_THROWS_AS(io::read_spec(""), io::ParseError);
}

TEST_CASE("spec files round-trip through write_spec", "[io]")
{
    for (std::string_view name : catalog::builtin_names()) {
        const PaletteSpec spec = catalog::builtin(name);
        CHECK(io::read_spec(io::write_spec(spec)) == spec);
    }
}

TEST_CASE("palette CSV writes one indexed row per entry", "[io]")
{
    const Palette256 gray = build_palette(catalog::builtin("gray"));
    const std::string csv = io::write_palette_csv(gray);
    CHECK(csv.starts_with("i,R,G,B\n0,0,0,0\n"));
    CHECK(csv.find("\n5,5,5,5\n") != std::string::npos);
    CHECK(csv.ends_with("\n255,255,255,255\n"));
}

TEST_CASE("palette CSV round-trips bit-exactly", "[io]")
{
    std::mt19937 rng(51);
    std::uniform_int_distribution<int> s(0, 255);
    for (int trial = 0; trial < 20; ++trial) {
        Palette256 p;
        for (int i = 0; i < 256; ++i) {
            p[i] = Rgb8{std::uint8_t(s(rng)), std::uint8_t(s(rng)), std::uint8_t(s(rng))};
        }
        const std::string csv = io::write_palette_csv(p);
        CHECK(io::read_palette_csv(csv) == p);
        CHECK(io::write_palette_csv(io::read_palette_csv(csv)) == csv);
    }
}

TEST_CASE("palette CSV readers reject malformed tables", "[io]")
{
    const Palette256 gray = build_palette(catalog::builtin("gray"));
    std::string csv = io::write_palette_csv(gray);

    // drop the last row -> 255 entries
    std::string truncated = csv.substr(0, csv.find("\n255,") + 1);
    CHECK_THROWS_WITH(io::read_palette_csv(truncated),
                      Catch::Matchers::ContainsSubstring("expected 256 entries"));

    CHECK_THROWS_AS(io::read_palette_csv("i,R,G,B\n"), io::ParseError);
    CHECK_THROWS_AS(io::read_palette_csv("R,G,B\n"), io::ParseError);
    CHECK_THROWS_AS(io::read_palette_csv(csv + "256,0,0,0\n"), io::ParseError);

    std::string out_of_order = csv;
    out_of_order.replace(out_of_order.find("\n5,5,5,5\n"), 9, "\n6,5,5,5\n");
    CHECK_THROWS_WITH(io::read_palette_csv(out_of_order),
                      Catch::Matchers::ContainsSubstring("out of order"));

    std::string out_of_range = csv;
    out_of_range.replace(out_of_range.find("\n5,5,5,5\n"), 9, "\n5,5,999,5\n");
    CHECK_THROWS_WITH(io::read_palette_csv(out_of_range),
                      Catch::Matchers::ContainsSubstring("out of [0,255]"));
}

TEST_CASE("curves CSV has fixed three-decimal formatting", "[io]")
{
    const Curves gray = curves_for(build_palette(catalog::builtin("gray")));
    const std::string csv = io::write_curves_csv(gray);
    CHECK(csv.starts_with("i,R,G,B,L,Lnorm,hue\n"));
    CHECK(csv.find("\n100,100,100,100,100.000,39.216,\n") != std::string::npos);
    // achromatic entries leave the hue field empty
    CHECK(csv.find("\n0,0,0,0,0.000,0.000,\n") != std::string::npos);

    Palette256 red;
    red.entries.fill(Rgb8{255, 0, 0});
    const std::string red_csv = io::write_curves_csv(curves_for(red));
    CHECK(red_csv.find("\n0,255,0,0,76.245,76.245,0.000\n") != std::string::npos);
}

TEST_CASE("PGM readers accept ASCII and binary, writers emit binary", "[io]")
{
    const GrayImage one = io::read_pgm("P2\n1 1\n255\n255");
    CHECK(one.width == 1);
    CHECK(one.height == 1);
    CHECK(one.samples == std::vector<std::uint8_t>{255});

    const GrayImage img{2, 3, {0, 10, 20, 30, 40, 255}};
    const std::string bytes = io::write_pgm(img);
    CHECK(bytes.starts_with("P5\n2 3\n255\n"));
    CHECK(bytes.size() == std::string("P5\n2 3\n255\n").size() + 6);
    CHECK(io::read_pgm(bytes) == img);
}

TEST_CASE("PNM headers allow comments; odd inputs are rejected", "[io]")
{
    const GrayImage g = io::read_pgm("P2 # magic\n# size next\n2 1\n# maxval\n255\n7 8");
    CHECK(g.width == 2);
    CHECK(g.samples == std::vector<std::uint8_t>{7, 8});

    CHECK_THROWS_WITH(io::read_pgm("P5\n1 1\n65535\n"),
                      Catch::Matchers::ContainsSubstring("maxval"));
    CHECK_THROWS_WITH(io::read_pgm("P7\n1 1\n255\nx"),
                      Catch::Matchers::ContainsSubstring("magic"));
    CHECK_THROWS_WITH(io::read_pgm("P6\n1 1\n255\nxxx"),
                      Catch::Matchers::ContainsSubstring("magic"));
    CHECK_THROWS_WITH(io::read_pgm("P5\n2 2\n255\nab"),
                      Catch::Matchers::ContainsSubstring("truncated"));
    CHECK_THROWS_WITH(io::read_pgm("P2\n1 2\n255\n4"),
                      Catch::Matchers::ContainsSubstring("truncated"));
    CHECK_THROWS_WITH(io::read_pgm("P2\n1 1\n255\n300"),
                      Catch::Matchers::ContainsSubstring("out of [0,255]"));
    CHECK_THROWS_WITH(io::read_pgm("P2\n0 4\n255\n"),
                      Catch::Matchers::ContainsSubstring("dimensions"));
    CHECK_THROWS_WITH(io::read_pgm("P2\n-3 4\n255\n"),
                      Catch::Matchers::ContainsSubstring("dimensions"));
    CHECK_THROWS_WITH(io::read_pgm("P5\n2000000 2000000\n255\n"),
                      Catch::Matchers::ContainsSubstring("dimensions"));
}

TEST_CASE("PPM parses both variants and round-trips", "[io]")
{
    const ColorImage c = io::read_ppm("P3\n2 1\n255\n255 0 0  0 0 255\n");
    REQUIRE(c.pixels.size() == 2);
    CHECK(c.pixels[0] == Rgb8{255, 0, 0});
    CHECK(c.pixels[1] == Rgb8{0, 0, 255});

    std::mt19937 rng(52);
    for (int trial = 0; trial < 50; ++trial) {
        const ColorImage img = random_color(rng);
        const std::string bytes = io::write_ppm(img);
        CHECK(io::read_ppm(bytes) == img);
        CHECK(io::write_ppm(io::read_ppm(bytes)) == bytes);
    }
    for (int trial = 0; trial < 50; ++trial) {
        const GrayImage img = random_gray(rng);
        const std::string bytes = io::write_pgm(img);
        CHECK(io::read_pgm(bytes) == img);
        CHECK(io::write_pgm(io::read_pgm(bytes)) == bytes);
    }
}

TEST_CASE("binary PNM payloads may contain header-like bytes", "[io]")
{
    // '#', '\n' and digits inside the payload must pass through untouched.
    const GrayImage img{3, 2, {'#', '\n', '2', ' ', '5', 0}};
    CHECK(io::read_pgm(io::write_pgm(img)) == img);
}

TEST_CASE("scalar-field CSV parses rectangular grids of reals", "[io]")
{
    const ScalarField f = io::read_field_csv("0,0.5\n-0.5,1");
    CHECK(f.width == 2);
    CHECK(f.height == 2);
    CHECK(f.values == std::vector<double>{0.0, 0.5, -0.5, 1.0});

    const ScalarField sci = io::read_field_csv("-1e-3,2.5E2\n7,0\n");
    CHECK(sci.values[0] == -1e-3);
    CHECK(sci.values[1] == 250.0);

    const ScalarField crlf = io::read_field_csv("1,2\r\n3,4\r\n");
    CHECK(crlf.height == 2);

    CHECK(error_line([] { io::read_field_csv("1,2\n3"); }) == 2);
    CHECK(error_line([] { io::read_field_csv("1,x\n3,4"); }) == 1);
    CHECK_THROWS_AS(io::read_field_csv(""), io::ParseError);
    CHECK_THROWS_AS(io::read_field_csv("1,inf\n2,3"), io::ParseError);
}
