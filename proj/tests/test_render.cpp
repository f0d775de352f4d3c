#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "kwall/render.hpp"
#include "test_support.hpp"

using kwall::Error;
using kwall::ErrorCode;
using kwall::Format;
using kwall::ProductArrangement;

namespace {

const kwall::Registry& registry() {
    static const kwall::Registry reg = kwall::load_registry();
    return reg;
}

ProductArrangement from_registry(std::vector<std::string> ids) { return kwall::build_product(registry(), ids); }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct SvgLine {
    int axis;
    std::string value;
    double x1, y1, x2, y2;
};

std::vector<SvgLine> wall_lines(const std::string& svg) {
    static const std::regex re(
        R"re(<line class="wall" data-axis="(\d)" data-index="\d+" data-value="([0-9/]+)" x1="([0-9.]+)" y1="([0-9.]+)" x2="([0-9.]+)" y2="([0-9.]+)"/>)re");
    std::vector<SvgLine> out;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        out.push_back({std::stoi(m[1]), m[2], std::stod(m[3]), std::stod(m[4]), std::stod(m[5]), std::stod(m[6])});
    }
    return out;
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST(Svg, MatchesGoldenFile) {
    const std::string svg = kwall::emit_figure(from_registry({"dp3", "dp4"}));
    EXPECT_EQ(svg, slurp(KWALL_GOLDEN_DIR "/dp3_dp4.svg"));
}

TEST(Svg, WallLinesSitAtScaledFractions) {
    const std::string svg = kwall::render_svg(from_registry({"dp3", "dp4"}));
    const auto lines = wall_lines(svg);
    ASSERT_EQ(lines.size(), 10u);
    const std::vector<std::pair<int, int>> xs{{2, 11}, {4, 13}, {2, 5}, {10, 19}, {2, 3}};
    const std::vector<std::pair<int, int>> ys{{1, 7}, {1, 4}, {1, 3}, {1, 2}, {5, 8}};
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& v = lines[i];
        const double expected = 60.0 + 720.0 * xs[i].first / xs[i].second;
        EXPECT_EQ(v.axis, 0);
        EXPECT_EQ(v.value, std::to_string(xs[i].first) + "/" + std::to_string(xs[i].second));
        EXPECT_NEAR(v.x1, expected, 5e-7);
        EXPECT_NEAR(v.x2, expected, 5e-7);
        EXPECT_DOUBLE_EQ(v.y1, 60.0);
        EXPECT_DOUBLE_EQ(v.y2, 780.0);

        const auto& h = lines[5 + i];
        const double expected_y = 60.0 + 720.0 * (1.0 - static_cast<double>(ys[i].first) / ys[i].second);
        EXPECT_EQ(h.axis, 1);
        EXPECT_EQ(h.value, std::to_string(ys[i].first) + "/" + std::to_string(ys[i].second));
        EXPECT_NEAR(h.y1, expected_y, 5e-7);
        EXPECT_NEAR(h.y2, expected_y, 5e-7);
        EXPECT_DOUBLE_EQ(h.x1, 60.0);
        EXPECT_DOUBLE_EQ(h.x2, 780.0);
    }
    // Tick labels carry the exact fractions.
    for (const auto& t : {">2/11<", ">4/13<", ">2/5<", ">10/19<", ">2/3<", ">1/7<", ">1/4<", ">1/3<", ">1/2<", ">5/8<"})
        EXPECT_EQ(count(svg, t), 1u) << t;
}

TEST(Svg, Deterministic) {
    const auto arr = from_registry({"dp3", "dp4"});
    const auto fold = kwall::fold_symmetric(from_registry({"dp3", "dp3"}), {{0, 1}});
    EXPECT_EQ(kwall::render_svg(arr), kwall::render_svg(from_registry({"dp3", "dp4"})));
    EXPECT_EQ(kwall::render_svg(from_registry({"dp3", "dp3"}), &fold),
              kwall::render_svg(from_registry({"dp3", "dp3"}), &fold));
}

TEST(Svg, EmptyProductIsBareBox) {
    const auto svg = kwall::emit_figure(kwall::build_product({}));
    EXPECT_EQ(count(svg, "class=\"wall\""), 0u);
    EXPECT_EQ(count(svg, "class=\"box\""), 1u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Svg, FoldedSquareAnnotatesMirrorCells) {
    const auto arr = from_registry({"dp3", "dp3"});
    const auto fold = kwall::fold_symmetric(arr, {{0, 1}});
    const auto svg = kwall::render_svg(arr, &fold);
    EXPECT_EQ(count(svg, "class=\"mirror\""), 1u);
    EXPECT_EQ(count(svg, "class=\"orbit\""), 36u);
    // Chamber (i, j) and its mirror (j, i) share an orbit label.
    static const std::regex re(R"re(<text class="orbit" data-orbit="(\d+)")re");
    std::vector<int> labels;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
        labels.push_back(std::stoi((*it)[1]));
    ASSERT_EQ(labels.size(), 36u);
    std::set<int> distinct(labels.begin(), labels.end());
    EXPECT_EQ(distinct.size(), 21u);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(labels[i * 6 + j], labels[j * 6 + i]);
}

TEST(Svg, TooManyFactors) {
    try {
        kwall::render_svg(from_registry({"dp3", "dp3", "dp3"}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::unsupported_dimension);
    }
    EXPECT_THROW(kwall::emit_figure(from_registry({"dp3"})), Error);
}

TEST(Ascii, IntervalHasOneMarkerPerWall) {
    const auto text = kwall::render(from_registry({"dp3"}), Format::ascii);
    const auto axis = text.substr(text.find('\n') + 1);
    const auto line = axis.substr(0, axis.find('\n'));
    EXPECT_EQ(count(line, "|"), 5u);
    for (const auto& w : {"2/11", "4/13", "2/5", "10/19", "2/3"}) EXPECT_NE(text.find(w), std::string::npos);
}

TEST(Ascii, GridForTwoFactors) {
    const auto text = kwall::render_ascii(from_registry({"dp3", "dp4"}));
    EXPECT_NE(text.find("36 chambers"), std::string::npos);
    std::istringstream in(text);
    std::string row;
    std::size_t wall_rows = 0;
    while (std::getline(in, row))
        if (count(row, "+") == 7) ++wall_rows;
    EXPECT_EQ(wall_rows, 7u);  // top, bottom and five interior walls
    EXPECT_THROW(kwall::render_ascii(from_registry({"dp3", "dp3", "dp3"})), Error);
}

TEST(Json, EmptyProductHasOneCell) {
    const auto doc = kwall::json::parse(kwall::render(kwall::build_product({}), Format::json));
    EXPECT_EQ(doc["dimension"], 0);
    ASSERT_EQ(doc["cells"].size(), 1u);
    EXPECT_EQ(doc["cells"][0]["codim"], 0);
    EXPECT_EQ(doc["cell_counts"], kwall::json::parse("[1]"));
}

TEST(Json, CountsAndFoldSection) {
    const auto arr = from_registry({"dp3", "dp3"});
    const auto fold = kwall::fold_symmetric(arr, {{0, 1}});
    const auto doc = kwall::arrangement_json(arr, &fold);
    EXPECT_EQ(doc["cell_counts"], kwall::json::parse("[36,60,25]"));
    EXPECT_EQ(doc["cells"].size(), 121u);
    EXPECT_EQ(doc["fold"]["orbit_counts"], kwall::json::parse("[21,30,15]"));
    EXPECT_EQ(doc["fold"]["burnside_counts"], kwall::json::parse(R"(["21","30","15"])"));
    EXPECT_EQ(doc["fold"]["group_order"], "2");
}
