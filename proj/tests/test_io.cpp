#include "sgc/errors.hpp"
#include "sgc/families.hpp"
#include "sgc/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace sgc;

namespace {

// Line number of the ParseError raised by parsing `text`, or 0 if none.
std::size_t graph_error_line(const std::string& text)
{
    try {
        io::parse_graph(text, "g.sg");
    }
    catch (const ParseError& e) {
        CHECK(e.source() == "g.sg");
        return e.line();
    }
    return 0;
}

std::size_t coloring_error_line(const std::string& text)
{
    try {
        io::parse_coloring(text, "c.col");
    }
    catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("graph text form")
{
    auto g = io::parse_graph("# unbalanced triangle\nsigned 3 3\ne 0 1 -\n\ne 0 2 +\ne 1 2 +\n");
    CHECK(g == circuit(3, {0}));
    CHECK(io::format_graph(g) == "signed 3 3\ne 0 1 -\ne 0 2 +\ne 1 2 +\n");
    CHECK(io::parse_graph("signed 4 0\n").order() == 4);
}

TEST_CASE("graph parse errors carry the offending line")
{
    CHECK(graph_error_line("") == 1);
    CHECK(graph_error_line("graph 3 1\n") == 1);
    CHECK(graph_error_line("signed 3 1\ne 1 1 +\n") == 2);
    CHECK(graph_error_line("signed 3 2\ne 0 1 +\n# dup\ne 0 1 -\n") == 4);
    CHECK(graph_error_line("signed 3 1\ne 0 3 +\n") == 2);
    CHECK(graph_error_line("signed 3 1\ne -1 2 +\n") == 2);
    CHECK(graph_error_line("signed 3 1\ne 2 1 +\n") == 2);
    CHECK(graph_error_line("signed 3 1\ne 0 1 x\n") == 2);
    CHECK(graph_error_line("signed 3 1\ne 0 one +\n") == 2);
    CHECK(graph_error_line("signed 3 2\ne 0 1 +\n") == 1);
    CHECK(graph_error_line("signed 3 1\nv 0 1 +\n") == 2);

    try {
        io::parse_graph("signed 3 2\ne 0 1 +\ne 0 1 -\n", "x.sg");
        FAIL("expected a parse error");
    }
    catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("first on line 2") != std::string::npos);
        CHECK(std::string(e.what()).rfind("x.sg:3:", 0) == 0);
    }
}

TEST_CASE("coloring text form")
{
    auto kd = io::parse_coloring("kd 4 2\n0 1\n2 3\n1 1\n");
    REQUIRE(std::holds_alternative<KDColoring>(kd));
    CHECK(std::get<KDColoring>(kd) == KDColoring(4, 2, {1, 1, 3}));

    auto r = io::parse_coloring("r 2\n0 1/2\n1 2/4\n2 3/2\n");
    REQUIRE(std::holds_alternative<RColoring>(r));
    CHECK(std::get<RColoring>(r) == RColoring(Ratio(2), {Ratio(1, 2), Ratio(1, 2), Ratio(3, 2)}));
    CHECK(io::format_coloring(r) == "r 2/1\n0 1/2\n1 1/2\n2 3/2\n");
}

TEST_CASE("coloring parse errors")
{
    CHECK(coloring_error_line("") == 1);
    CHECK(coloring_error_line("kd 4\n0 1\n") == 1);
    CHECK(coloring_error_line("kd 4 2\n0 1\n0 2\n") == 3);
    CHECK(coloring_error_line("kd 4 2\n0 1\n2 1\n") == 1);
    CHECK(coloring_error_line("kd 4 2\n0 x\n") == 2);
    CHECK(coloring_error_line("r 5/2\n0 1/0\n") == 2);
    CHECK(coloring_error_line("kd 4 2\n0 7\n") != 0);
    CHECK(coloring_error_line("kd 3 2\n0 0\n") != 0);
}

TEST_CASE("emit then parse is the identity")
{
    std::mt19937_64 rng(61);
    for (int i = 0; i < 300; ++i) {
        const int n = static_cast<int>(rng() % 9);
        auto g = random_signed(n, 0.5, 0.5, rng());
        CHECK(io::parse_graph(io::format_graph(g)) == g);

        const Int k = static_cast<Int>(rng() % 20) + 2;
        std::vector<Int> cs(static_cast<std::size_t>(n));
        for (auto& c : cs) c = static_cast<Int>(rng() % static_cast<std::uint64_t>(k));
        io::AnyColoring kd = KDColoring(k, 1, cs);
        CHECK(std::get<KDColoring>(io::parse_coloring(io::format_coloring(kd))) == std::get<KDColoring>(kd));

        std::vector<Ratio> fs;
        for (Int c : cs) fs.emplace_back(c, 3);
        io::AnyColoring rc = RColoring(Ratio(k, 3) < Ratio(2) ? Ratio(2) + Ratio(k, 3) : Ratio(k, 3), fs);
        CHECK(std::get<RColoring>(io::parse_coloring(io::format_coloring(rc))) == std::get<RColoring>(rc));
    }
}

TEST_CASE("files")
{
    const auto dir = std::filesystem::temp_directory_path() / "sgc_test_io";
    std::filesystem::create_directories(dir);
    const auto path = dir / "g.sg";
    {
        std::ofstream out(path);
        io::write_graph(out, circuit(5, {1}));
    }
    CHECK(io::read_graph(path) == circuit(5, {1}));
    CHECK_THROWS_AS(io::read_graph(dir / "missing.sg"), Error);
    std::filesystem::remove_all(dir);
}
