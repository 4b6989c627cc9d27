#include "v1ss/chart.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "v1ss/error.hpp"

namespace v1ss {

namespace {

constexpr int kCell = 24;
constexpr int kMargin = 40;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::vector<ChartDot> sorted_dots(const ChartDoc& doc) {
  std::vector<ChartDot> dots;
  for (const auto& d : doc.dots)
    if (doc.viewport.contains(d.stem, d.filtration)) dots.push_back(d);
  std::sort(dots.begin(), dots.end(), [](const ChartDot& a, const ChartDot& b) {
    return std::tie(a.stem, a.filtration, a.group, a.label) < std::tie(b.stem, b.filtration, b.group, b.label);
  });
  return dots;
}

}  // namespace

ChartFormat parse_chart_format(std::string_view name) {
  if (name == "svg") return ChartFormat::Svg;
  if (name == "txt") return ChartFormat::Txt;
  throw UnsupportedFormat("chart format must be svg or txt, got '" + std::string(name) + "'");
}

ChartDoc chart_from_page(const ComputedPage& page, const Alphabet& alphabet, std::string title,
                         const Viewport& viewport) {
  ChartDoc doc;
  doc.title = std::move(title);
  doc.viewport = viewport;
  doc.groups.push_back({0, page.name});
  std::set<std::pair<int, int>> occupied;
  for (const auto& [d, rec] : page.degrees) {
    auto a = collapse(d);
    if (!viewport.contains(a.stem(), a.s)) continue;
    if (!rec.representatives.empty()) {
      for (const auto& r : rec.representatives) doc.dots.push_back({a.stem(), a.s, format(r), 0});
    } else {
      for (std::size_t i = 0; i < rec.homology_dim; ++i) doc.dots.push_back({a.stem(), a.s, to_string(d), 0});
    }
    if (rec.homology_dim || !rec.representatives.empty()) occupied.insert({a.stem(), a.s});
  }
  const bool has_h11 = alphabet.find("h(1,1)").has_value();
  for (auto [stem, f] : occupied) {
    if (has_h11 && occupied.count({stem + 1, f + 1})) doc.lines.push_back({stem, f, stem + 1, f + 1, LineKind::H11});
    if (occupied.count({stem + 2, f + 1})) doc.lines.push_back({stem, f, stem + 2, f + 1, LineKind::V1});
  }
  return doc;
}

std::string render_svg(const ChartDoc& doc) {
  const auto& vp = doc.viewport;
  const int cols = vp.stem_max - vp.stem_min + 1;
  const int rows = vp.filtration_max - vp.filtration_min + 1;
  const int width = 2 * kMargin + cols * kCell;
  const int height = 2 * kMargin + rows * kCell;
  auto x_of = [&](int stem) { return kMargin + (stem - vp.stem_min) * kCell + kCell / 2; };
  auto y_of = [&](int f) { return height - kMargin - (f - vp.filtration_min) * kCell - kCell / 2; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<title>" << escape(doc.title) << "</title>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n"
     << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int c = 0; c <= cols; ++c) {
    int x = kMargin + c * kCell;
    os << "<line x1=\"" << x << "\" y1=\"" << kMargin << "\" x2=\"" << x << "\" y2=\"" << height - kMargin
       << "\"/>\n";
  }
  for (int r = 0; r <= rows; ++r) {
    int y = kMargin + r * kCell;
    os << "<line x1=\"" << kMargin << "\" y1=\"" << y << "\" x2=\"" << width - kMargin << "\" y2=\"" << y
       << "\"/>\n";
  }
  os << "</g>\n<g font-family=\"monospace\" font-size=\"10\" fill=\"black\">\n";
  for (int stem = vp.stem_min; stem <= vp.stem_max; stem += 2)
    os << "<text x=\"" << x_of(stem) - 3 << "\" y=\"" << height - kMargin + 14 << "\">" << stem << "</text>\n";
  for (int f = vp.filtration_min; f <= vp.filtration_max; f += 2)
    os << "<text x=\"" << kMargin - 20 << "\" y=\"" << y_of(f) + 3 << "\">" << f << "</text>\n";
  os << "<text x=\"" << kMargin << "\" y=\"" << kMargin - 16 << "\" font-size=\"12\">" << escape(doc.title)
     << "</text>\n</g>\n";

  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  for (const auto& l : doc.lines) {
    if (!vp.contains(l.stem0, l.filtration0) || !vp.contains(l.stem1, l.filtration1)) continue;
    os << "<line x1=\"" << x_of(l.stem0) << "\" y1=\"" << y_of(l.filtration0) << "\" x2=\"" << x_of(l.stem1)
       << "\" y2=\"" << y_of(l.filtration1) << '"';
    if (l.kind == LineKind::V1) os << " stroke-dasharray=\"3,2\"";
    os << "/>\n";
  }
  os << "</g>\n";

  auto dots = sorted_dots(doc);
  std::map<std::pair<int, int>, int> count, seen;
  for (const auto& d : dots) ++count[{d.stem, d.filtration}];
  constexpr int kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);
  os << "<g stroke=\"none\">\n";
  for (const auto& d : dots) {
    auto key = std::make_pair(d.stem, d.filtration);
    int n = count[key];
    int i = seen[key]++;
    int x = x_of(d.stem) + (2 * i - (n - 1)) * 3;
    const char* color = kPalette[((d.group % kPaletteSize) + kPaletteSize) % kPaletteSize];
    os << "<circle cx=\"" << x << "\" cy=\"" << y_of(d.filtration) << "\" r=\"3\" fill=\"" << color
       << "\"><title>" << escape(d.label) << "</title></circle>\n";
  }
  os << "</g>\n";

  if (!doc.groups.empty()) {
    os << "<g font-family=\"monospace\" font-size=\"10\">\n";
    int y = kMargin;
    for (const auto& g : doc.groups) {
      const char* color = kPalette[((g.id % kPaletteSize) + kPaletteSize) % kPaletteSize];
      os << "<circle cx=\"" << width - kMargin + 8 << "\" cy=\"" << y << "\" r=\"3\" fill=\"" << color << "\"/>"
         << "<text x=\"" << width - kMargin + 14 << "\" y=\"" << y + 3 << "\">" << escape(g.label) << "</text>\n";
      y += 12;
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_txt(const ChartDoc& doc) {
  const auto& vp = doc.viewport;
  std::map<std::pair<int, int>, int> count;
  for (const auto& d : sorted_dots(doc)) ++count[{d.stem, d.filtration}];
  std::ostringstream os;
  os << doc.title << '\n';
  for (int f = vp.filtration_max; f >= vp.filtration_min; --f) {
    os << (f < 10 && f >= 0 ? " " : "") << f << " |";
    for (int stem = vp.stem_min; stem <= vp.stem_max; ++stem) {
      auto it = count.find({stem, f});
      char c = '.';
      if (it != count.end()) c = it->second > 9 ? '+' : static_cast<char>('0' + it->second);
      os << c;
    }
    os << '\n';
  }
  os << "   +" << std::string(static_cast<std::size_t>(vp.stem_max - vp.stem_min + 1), '-') << '\n';
  os << "    stem " << vp.stem_min << ".." << vp.stem_max << '\n';
  return os.str();
}

std::string render(const ChartDoc& doc, ChartFormat format) {
  return format == ChartFormat::Svg ? render_svg(doc) : render_txt(doc);
}

}  // namespace v1ss
