#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "v1ss/chart.hpp"
#include "v1ss/error.hpp"

using namespace v1ss;

TEST_CASE("collapse examples") {
  CHECK(collapse({0, 0, 0}) == AdamsBidegree{0, 0});
  CHECK(collapse({0, 2, 1}) == AdamsBidegree{1, 3});
  CHECK(collapse({1, 2, 0}) == AdamsBidegree{1, 2});
  for (int n = 1; n <= 5; ++n) CHECK(collapse({1, 1 << (n + 2), 1}) == AdamsBidegree{2, (1 << (n + 2)) + 1});
  CHECK(collapse({1, 8, 1}).stem() == 7);
}

TEST_CASE("property: collapse is additive") {
  testing::Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    Multidegree a{rng.uniform(-9, 9), rng.uniform(-99, 99), rng.uniform(-9, 9)};
    Multidegree b{rng.uniform(-9, 9), rng.uniform(-99, 99), rng.uniform(-9, 9)};
    auto x = collapse(a), y = collapse(b), z = collapse(a + b);
    REQUIRE(z.s == x.s + y.s);
    REQUIRE(z.t == x.t + y.t);
  }
}

TEST_CASE("chart formats") {
  CHECK(parse_chart_format("svg") == ChartFormat::Svg);
  CHECK(parse_chart_format("txt") == ChartFormat::Txt);
  CHECK_THROWS_AS(parse_chart_format("png"), UnsupportedFormat);
}

namespace {

ChartDoc sample() {
  ChartDoc doc;
  doc.title = "sample <E4>";
  doc.viewport = {0, 6, 0, 4};
  doc.groups = {{0, "a"}, {1, "b"}, {9, "c"}};
  doc.dots = {{0, 0, "1", 0}, {1, 1, "h11", 0}, {1, 1, "other", 1}, {2, 2, "h11^2", 9}, {40, 1, "far", 0}};
  doc.lines = {{0, 0, 1, 1, LineKind::H11}, {0, 0, 2, 1, LineKind::V1}, {0, 0, 40, 1, LineKind::V1}};
  return doc;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("text chart shows multiplicities") {
  auto txt = render_txt(sample());
  CHECK(txt.find("sample <E4>\n") == 0);
  CHECK(txt.find(" 0 |1......\n") != std::string::npos);
  CHECK(txt.find(" 1 |.2.....\n") != std::string::npos);
  CHECK(txt.find(" 2 |..1....\n") != std::string::npos);
  CHECK(txt.find(" 4 |.......\n") != std::string::npos);
}

TEST_CASE("svg chart is deterministic and clipped") {
  auto doc = sample();
  auto a = render(doc, ChartFormat::Svg);
  std::reverse(doc.dots.begin(), doc.dots.end());
  auto b = render(doc, ChartFormat::Svg);
  CHECK(a == b);
  CHECK(a.rfind("<?xml", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(count(a, "<circle") == 4 + 3);  // dots in view + legend
  CHECK(count(a, "stroke-dasharray") == 1);
  CHECK(a.find("&lt;E4&gt;") != std::string::npos);
  CHECK(a.find("far") == std::string::npos);
  // group 9 wraps onto group 1's colour: two dots, two legend entries
  CHECK(count(a, "#d62728") == 4);
}

TEST_CASE("chart from a computed page") {
  auto alphabet = testing::small_e2_alphabet(2);
  ComputedPage page;
  page.name = "E";
  DegreeRecord one{{0, 0, 0}, 1, 1, 0, 1, {Polynomial::one(alphabet)}};
  DegreeRecord h{{1, 2, 0}, 1, 1, 0, 1, {parse("h(1,1)", alphabet)}};
  DegreeRecord v{{0, 2, 1}, 1, 1, 0, 1, {parse("v1", alphabet)}};
  page.degrees.emplace(one.degree, one);
  page.degrees.emplace(h.degree, h);
  page.degrees.emplace(v.degree, v);
  auto doc = chart_from_page(page, *alphabet, "t", {});
  CHECK(doc.dots.size() == 3);
  CHECK(doc.lines.size() == 2);
  auto txt = render_txt(doc);
  CHECK(txt.find(" 1 |.11") != std::string::npos);
}
