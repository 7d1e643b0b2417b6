#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "wdom/chambers.hpp"
#include "wdom/render.hpp"

using namespace wdom;

namespace {

std::string read_fixture(const std::string& name) {
  const std::string path = std::string(WDOM_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing fixture ", path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Text payloads of the <text> elements carrying the given class.
std::set<std::string> svg_texts(const std::string& svg, const std::string& cls) {
  std::set<std::string> out;
  const std::string marker = "<text class=\"" + cls + "\"";
  std::size_t at = 0;
  while ((at = svg.find(marker, at)) != std::string::npos) {
    const std::size_t open = svg.find('>', at);
    const std::size_t close = svg.find("</text>", open);
    out.insert(svg.substr(open + 1, close - open - 1));
    at = close;
  }
  return out;
}

}  // namespace

TEST_CASE("ascii render of a single crossing") {
  CHECK(render_ascii(make_word(2, {1}), {1, 2}) ==
        "1 --\\ /-- 2\n"
        "     X\n"
        "2 --/ \\-- 1\n");
}

TEST_CASE("ascii render of the empty word") {
  CHECK(render_ascii(make_word(3, {}), {1, 2, 3}) ==
        "1 ---- 1\n"
        "\n"
        "2 ---- 2\n"
        "\n"
        "3 ---- 3\n");
}

TEST_CASE("ascii render matches the golden three-line diagram") {
  CHECK(render_ascii(make_word(3, {1, 2, 1}), {1, 2, 3}) == read_fixture("d31.txt"));
}

TEST_CASE("svg render matches the golden four-line diagram") {
  CHECK(render_svg(make_word(4, {1, 2, 1, 3, 1, 2, 1}), {1, 2, 3, 4}) ==
        read_fixture("d42.svg"));
}

TEST_CASE("rendering is deterministic") {
  const Word w = make_word(4, {1, 2, 1, 3, 1, 2, 1});
  CHECK(render_ascii(w, {1, 2, 3, 4}) == render_ascii(w, {1, 2, 3, 4}));
  CHECK(render_svg(w, {1, 2, 3, 4}) == render_svg(w, {1, 2, 3, 4}));
}

TEST_CASE("svg chamber labels equal the chamber sets minus the empty set") {
  for (const Word& w : {make_word(3, {1, 2, 1}), make_word(4, {1, 2, 1, 3, 1, 2, 1}),
                        make_word(3, {1, 2, 1, 2})}) {
    const TrackOrder left = identity_order(w.n);
    const std::set<std::string> drawn = svg_texts(render_svg(w, left), "chamber");
    std::set<std::string> expected;
    for (const auto& grade : chamber_sets(w, left).sets_by_cardinality()) {
      for (const auto& set : grade) {
        if (!set.empty()) expected.insert(format_order(set));
      }
    }
    CHECK(drawn == expected);
  }
}

TEST_CASE("svg boundary labels read the sweep columns") {
  const Word w = make_word(3, {1, 2, 1});
  const std::string svg = render_svg(w, {1, 2, 3});
  const auto labels = svg_texts(svg, "wire-label");
  CHECK(labels == std::set<std::string>{"1", "2", "3"});
  // Right boundary is the reversal: the "3" label appears on both margins.
  CHECK(svg.find("</svg>\n") == svg.size() - 7);
}

TEST_CASE("svg honours the chamber label switch and n=1") {
  const Word w = make_word(3, {1, 2, 1});
  RenderOptions options;
  options.show_chamber_labels = false;
  CHECK(svg_texts(render_svg(w, {1, 2, 3}, options), "chamber").empty());

  const std::string single = render_svg(make_word(1, {}), {1});
  CHECK(single.find("<text") == std::string::npos);
  CHECK(single.find("<polyline") != std::string::npos);

  options.track_gap = 0;
  CHECK_THROWS_AS(render_svg(w, {1, 2, 3}, options), InputError);
}
