#pragma once

// Adams chart coordinates and deterministic SVG / text rendering.

#include <string>
#include <string_view>
#include <vector>

#include "v1ss/dga.hpp"
#include "v1ss/window.hpp"

namespace v1ss {

struct AdamsBidegree {
  int s = 0;
  int t = 0;
  int stem() const { return t - s; }
  friend auto operator<=>(const AdamsBidegree&, const AdamsBidegree&) = default;
};

/// (s, t, u) -> (s + u, t + u).
constexpr AdamsBidegree collapse(const Multidegree& d) { return {d.s + d.u, d.t + d.u}; }

struct ChartDot {
  int stem = 0;
  int filtration = 0;
  std::string label;
  int group = 0;
};

enum class LineKind { H11, V1 };

struct ChartLine {
  int stem0 = 0, filtration0 = 0;
  int stem1 = 0, filtration1 = 0;
  LineKind kind = LineKind::H11;
};

struct ChartGroup {
  int id = 0;
  std::string label;
};

struct Viewport {
  int stem_min = 0, stem_max = 24;
  int filtration_min = 0, filtration_max = 12;
  bool contains(int stem, int filtration) const {
    return stem_min <= stem && stem <= stem_max && filtration_min <= filtration &&
           filtration <= filtration_max;
  }
};

struct ChartDoc {
  std::string title;
  Viewport viewport;
  std::vector<ChartGroup> groups;
  std::vector<ChartDot> dots;
  std::vector<ChartLine> lines;
};

enum class ChartFormat { Svg, Txt };
/// "svg" or "txt"; throws UnsupportedFormat otherwise.
ChartFormat parse_chart_format(std::string_view name);

/// One dot per basis class of every computed degree inside the viewport;
/// h11 and v1 lines between occupied degrees.
ChartDoc chart_from_page(const ComputedPage& page, const Alphabet& alphabet, std::string title,
                         const Viewport& viewport);

std::string render_svg(const ChartDoc& doc);
/// One cell per (stem, filtration), multiplicity digit or '.'.
std::string render_txt(const ChartDoc& doc);
std::string render(const ChartDoc& doc, ChartFormat format);

}  // namespace v1ss
