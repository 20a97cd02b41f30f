#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "rap/classify.hpp"
#include "rap/graphs.hpp"

using namespace rap;

namespace {
const Cyclo xi = Cyclo::root(3);

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}
}

TEST_CASE("psum_graph") {
    auto g = psum_graph(std::vector<ComplexF>{{0, 0}, {0.25, 0}, {-0.25, 0}, {0.25, 0}, {-0.25, 0}});
    CHECK(g.vertices.size() == 3);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    g = psum_graph(std::vector<ComplexF>(5, ComplexF(2, 1)));
    CHECK(g.vertices.size() == 1);
    CHECK(g.edges.empty());

    const Cyclo a = (Cyclo(3) * xi).inv() * Cyclo::root(7);
    const PolySpec<Cyclo> p({a, a * xi * xi, a * xi});
    const auto s = psum_sequence(p, 30);
    g = psum_graph(s);
    const double rad = std::sqrt(3.0) / 9;
    int origin = 0;
    for (const auto& v : g.vertices) {
        if (std::abs(v) < 1e-12) {
            ++origin;
            continue;
        }
        CHECK(std::abs(v) == doctest::Approx(rad).epsilon(1e-12));
    }
    CHECK(origin == 1);
}

TEST_CASE("render_svg") {
    const auto one = render_svg(psum_graph(std::vector<ComplexF>{{1, 1}}));
    CHECK(count(one, "<circle") == 1);
    CHECK(count(one, "<line") == 0);

    const auto three = render_svg(psum_graph(std::vector<ComplexF>{{0, 0}, {0.25, 0}, {-0.25, 0}}), {}, "a<b&c");
    CHECK(count(three, "<circle") == 3);
    CHECK(count(three, "<line") == 2);
    CHECK(three.find("a&lt;b&amp;c") != std::string::npos);
    CHECK(three.rfind("</svg>") != std::string::npos);
}

TEST_CASE("figure items") {
    CHECK(parse_figure("Fig3") == Figure::Fig3);
    CHECK_THROWS_AS(parse_figure("fig9"), Error);

    const auto f2 = figure_items(Figure::Fig2);
    REQUIRE(f2.size() == 7);
    CHECK(f2[2].period == 12);
    const std::vector<ComplexF> block{{0, 0},  {1.0 / 3, 0}, {0, -2.0 / 3}, {-2.0 / 3, 0}, {0, 1.0 / 3}, {0, 0},
                                      {0, 0},  {-1.0 / 3, 0}, {0, 2.0 / 3}, {2.0 / 3, 0},  {0, -1.0 / 3}, {0, 0}};
    for (int i = 0; i < 12; ++i) CHECK(std::abs(f2[2].seq[f2[2].preperiod + i] - block[i]) < 1e-12);

    const auto f3 = figure_items(Figure::Fig3);
    REQUIRE(f3.size() == 7);
    const double r3 = std::sqrt(3.0);
    const std::vector<ComplexF> first{{0, 0}, {0, 1 / (3 * r3)}, {3.0 / 18, -r3 / 18}, {-3.0 / 18, -r3 / 18}};
    for (int i = 0; i < 4; ++i) CHECK(std::abs(f3[2].seq[i] - first[i]) < 1e-12);

    const auto f6 = figure_items(Figure::Fig6);
    REQUIRE(f6.size() == 3);
    CHECK(f6[0].period == 4);
    CHECK(std::abs(f6[0].parameter - ComplexF(0.25, 0)) < 1e-15);
}

TEST_CASE("figure_family writes one file per item") {
    const auto dir = std::filesystem::temp_directory_path() / "rap_graph_test";
    std::filesystem::remove_all(dir);
    const auto files = figure_family(Figure::Fig6, dir);
    REQUIRE(files.size() == 3);
    CHECK(files[0].filename() == "fig6_1.svg");
    std::ifstream in(files[0]);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().starts_with("<?xml"));
    std::filesystem::remove_all(dir);
}
