#include "v1ss/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "v1ss/cobar.hpp"
#include "v1ss/error.hpp"
#include "v1ss/table.hpp"
#include "v1ss/verify.hpp"

namespace fs = std::filesystem;

namespace v1ss {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

constexpr const char* kCacheVersion = "v1ss-cache-1";

struct RunConfig {
  int t_max = 64;
  int s_max = 12;
  int v1_min = -16;
  int v1_max = 16;
  int workers = 0;
  std::string out = "out";
  bool no_cache = false;

  std::string spectrum = "M";
  int page = 4;
  std::string format;
  std::string comodule = "EndM";
  int ext_s_max = 8;
  int ext_t_min = -1;
  int ext_t_max = 16;
  int p_max = 12;
  int q_max = 64;
  bool decomposition = false;

  TruncationWindow window() const { return TruncationWindow::standard(t_max, s_max, v1_min, v1_max); }
  ExecPolicy policy() const { return ExecPolicy{workers}; }
};

struct Outputs {
  std::vector<std::pair<std::string, std::string>> files;
  std::string summary;
  int exit_code = 0;
};

void add_window_metadata(DimensionTable& t, const RunConfig& c, const PageSet& pages) {
  t.metadata["t_max"] = std::to_string(c.t_max);
  t.metadata["s_max"] = std::to_string(c.s_max);
  t.metadata["v1_min"] = std::to_string(c.v1_min);
  t.metadata["v1_max"] = std::to_string(c.v1_max);
  t.metadata["h_cap"] = std::to_string(pages.h_cap());
}

const AlphabetPtr& page_alphabet(const PageSet& pages, SpectrumTag tag, int r) {
  switch (tag) {
    case SpectrumTag::S: return pages.e2_s().alphabet;
    case SpectrumTag::M: return pages.e2_m().alphabet;
    case SpectrumTag::EndM: return r == 4 ? pages.e3_endm().alphabet : pages.e2_endm().alphabet;
  }
  return pages.e2_m().alphabet;
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (auto a : allowed)
    if (f == a) return;
  throw UnsupportedFormat("format '" + f + "' is not available for this subcommand");
}

std::string ext_of(const std::string& format) { return "." + format; }

Outputs do_page(const RunConfig& c) {
  auto format = c.format.empty() ? std::string("tsv") : c.format;
  require_format(format, {"tsv", "json", "svg", "txt"});
  auto tag = parse_spectrum(c.spectrum);
  PageSet pages(c.window());
  auto page = build_page(pages, tag, c.page, c.policy());
  std::string stem = "page_" + to_string(tag) + "_E" + std::to_string(c.page);
  Outputs out;
  if (format == "svg" || format == "txt") {
    auto doc = chart_from_page(page, *page_alphabet(pages, tag, c.page),
                               "E" + std::to_string(c.page) + "(" + to_string(tag) + ")", Viewport{});
    out.files.emplace_back(stem + ext_of(format), render(doc, parse_chart_format(format)));
  } else {
    DimensionTable t;
    add_window_metadata(t, c, pages);
    t.metadata["spectrum"] = to_string(tag);
    t.metadata["page"] = std::to_string(c.page);
    t.metadata["conditional_on_conjecture"] = c.page >= 3 && tag != SpectrumTag::S ? "true" : "false";
    t.metadata["trusted_degrees"] = std::to_string(page.degrees.size());
    for (const auto& [d, rec] : page.degrees) t.add(d, c.page == 2 ? rec.basis_dim : rec.homology_dim);
    t.sort();
    out.files.emplace_back(stem + ext_of(format), format == "json" ? to_json(t) : to_tsv(t));
  }
  out.summary = stem + ": " + std::to_string(page.degrees.size()) + " degrees";
  return out;
}

Outputs do_ext(const RunConfig& c) {
  auto format = c.format.empty() ? std::string("tsv") : c.format;
  require_format(format, {"tsv", "json"});
  Comodule com = c.comodule == "EndM" ? Comodule::endomorphisms()
                 : c.comodule == "M"  ? Comodule::moore()
                 : c.comodule == "S"  ? Comodule::trivial()
                                      : throw UnknownLabel("unknown comodule '" + c.comodule + "'");
  auto t = ext_dimensions(com, c.ext_s_max, {c.ext_t_min, c.ext_t_max}, c.policy());
  t.metadata["coalgebra"] = "F2[xi1]/(xi1^4)";
  Outputs out;
  out.files.emplace_back("ext_" + c.comodule + ext_of(format), format == "json" ? to_json(t) : to_tsv(t));
  out.summary = "ext " + c.comodule + ": " + std::to_string(t.rows.size()) + " bidegrees";
  return out;
}

Outputs do_mahowald(const RunConfig& c) {
  if (!c.format.empty()) require_format(c.format, {"tsv"});
  MahowaldComplex mc(c.p_max, c.q_max);
  auto bases = mc.zbh_bases(c.policy());
  std::string lines;
  for (const auto& l : export_homology(bases)) lines += l + "\n";
  std::ostringstream dims;
  dims << "# p_max=" << c.p_max << "\n# q_max=" << c.q_max << "\np\tq\tbasis\tz\tb\th\n";
  for (const auto& b : bases)
    dims << b.degree.p << '\t' << b.degree.q << '\t' << b.basis.size() << '\t' << b.cycles.size() << '\t'
         << b.boundaries.size() << '\t' << b.homology.size() << '\n';
  Outputs out;
  out.files.emplace_back("mahowald_homology.txt", lines);
  out.files.emplace_back("mahowald_dims.tsv", dims.str());
  out.summary = "mahowald: " + std::to_string(bases.size()) + " bidegrees";
  return out;
}

Outputs do_verify(const RunConfig& c) {
  if (!c.format.empty()) require_format(c.format, {"json"});
  PageSet pages(c.window());
  auto rep = run_verification(pages, c.policy());
  Outputs out;
  out.files.emplace_back("verify_report.json", to_json(rep));
  std::ostringstream s;
  for (const auto& chk : rep.checks)
    s << (chk.status == Status::Fail ? "[FAIL] " : chk.status == Status::Pass ? "[PASS] " : "[INSUFFICIENT] ")
      << chk.name << " checked=" << chk.checked << " failed=" << chk.failed << " insufficient=" << chk.insufficient
      << (chk.conditional ? " (conditional)" : "") << "\n";
  s << (rep.passed() ? "all checks passed" : "verification failed");
  out.summary = s.str();
  out.exit_code = rep.passed() ? 0 : 1;
  return out;
}

Decomposition decomposition_for(const RunConfig& c, const PageSet& pages) {
  auto table = claims_mahowald_table(pages, c.policy());
  return mahowald_decomposition_check(pages, table, {}, c.policy());
}

Outputs do_decompose(const RunConfig& c) {
  auto format = c.format.empty() ? std::string("tsv") : c.format;
  require_format(format, {"tsv", "json", "svg", "txt"});
  PageSet pages(c.window());
  auto dec = decomposition_for(c, pages);
  auto sum = summarize(dec);
  Outputs out;
  std::string content;
  if (format == "tsv") {
    content = decomposition_tsv(dec);
  } else if (format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : dec.rows)
      rows.push_back({{"claim", "decomposition"},
                      {"degree", {r.at.s, r.at.t}},
                      {"lhs", r.lhs},
                      {"rhs", r.rhs},
                      {"status", to_string(r.status)}});
    content = nlohmann::ordered_json{{"conditional_on_conjecture", true}, {"rows", rows}}.dump(1) + "\n";
  } else {
    content = render(dec.chart, parse_chart_format(format));
  }
  out.files.emplace_back("decomposition" + ext_of(format), content);
  out.summary = "decomposition: " + std::to_string(sum.checked) + " covered, " + std::to_string(sum.failed) +
                " failed, " + std::to_string(sum.insufficient) + " insufficient (conditional)";
  out.exit_code = sum.failed ? 1 : 0;
  return out;
}

Outputs do_chart(const RunConfig& c) {
  auto format = c.format.empty() ? std::string("svg") : c.format;
  auto fmt = parse_chart_format(format);
  PageSet pages(c.window());
  Outputs out;
  if (c.decomposition) {
    out.files.emplace_back("chart_decomposition" + ext_of(format), render(decomposition_for(c, pages).chart, fmt));
  } else {
    auto tag = parse_spectrum(c.spectrum);
    auto page = build_page(pages, tag, c.page, c.policy());
    auto doc = chart_from_page(page, *page_alphabet(pages, tag, c.page),
                               "E" + std::to_string(c.page) + "(" + to_string(tag) + ")", Viewport{});
    out.files.emplace_back("chart_" + to_string(tag) + "_E" + std::to_string(c.page) + ext_of(format),
                           render(doc, fmt));
  }
  out.summary = "chart written";
  return out;
}

std::string cache_key(const std::string& cmd, const RunConfig& c) {
  std::ostringstream s;
  s << kCacheVersion << ";cmd=" << cmd << ";t_max=" << c.t_max << ";s_max=" << c.s_max << ";v1=" << c.v1_min
    << ".." << c.v1_max << ";spectrum=" << c.spectrum << ";page=" << c.page << ";format=" << c.format
    << ";comodule=" << c.comodule << ";ext=" << c.ext_s_max << "," << c.ext_t_min << "," << c.ext_t_max
    << ";p=" << c.p_max << ";q=" << c.q_max << ";dec=" << c.decomposition;
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a(s.str());
  return hex.str();
}

std::optional<Outputs> load_cache(const fs::path& dir) {
  if (!fs::exists(dir / "manifest.json")) return std::nullopt;
  try {
    auto m = nlohmann::json::parse(read_file(dir / "manifest.json"));
    Outputs out;
    out.exit_code = m.at("exit_code").get<int>();
    out.summary = m.at("summary").get<std::string>();
    for (const auto& f : m.at("files")) {
      auto name = f.get<std::string>();
      out.files.emplace_back(name, read_file(dir / name));
    }
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_cache(const fs::path& dir, const Outputs& o) {
  nlohmann::ordered_json m;
  m["exit_code"] = o.exit_code;
  m["summary"] = o.summary;
  m["files"] = nlohmann::ordered_json::array();
  for (const auto& [name, content] : o.files) {
    write_file_atomic(dir / name, content);
    m["files"].push_back(name);
  }
  // manifest last: a cache entry is complete once it exists
  write_file_atomic(dir / "manifest.json", m.dump(1) + "\n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"v1-periodic spectral sequence pages, checks and charts", "v1ss"};
  app.set_config("--config", "", "key=value configuration file");
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--t-max", c.t_max, "largest internal degree t")->capture_default_str();
  app.add_option("--s-max", c.s_max, "largest filtration s")->capture_default_str();
  app.add_option("--v1-min", c.v1_min, "smallest v1 exponent and u")->capture_default_str();
  app.add_option("--v1-max", c.v1_max, "largest v1 exponent and u")->capture_default_str();
  app.add_option("--workers", c.workers, "worker threads, 0 for the OpenMP default")->capture_default_str();
  app.add_option("--out", c.out, "output directory")->capture_default_str();
  app.add_flag("--no-cache", c.no_cache, "recompute even when a cached result exists");
  app.add_option("--format", c.format, "svg, txt, json or tsv");

  auto page = app.add_subcommand("page", "dimension table or chart of one page");
  page->add_option("--spectrum", c.spectrum, "S, M or EndM")->capture_default_str();
  page->add_option("--page", c.page, "2, 3 or 4")->capture_default_str();
  auto ext = app.add_subcommand("ext", "cobar Ext dimensions over F2[xi1]/(xi1^4)");
  ext->add_option("--comodule", c.comodule, "S, M or EndM")->capture_default_str();
  ext->add_option("--ext-s-max", c.ext_s_max)->capture_default_str();
  ext->add_option("--ext-t-min", c.ext_t_min)->capture_default_str();
  ext->add_option("--ext-t-max", c.ext_t_max)->capture_default_str();
  auto mah = app.add_subcommand("mahowald", "Z, B and H of the Mahowald complex");
  mah->add_option("--p-max", c.p_max)->capture_default_str();
  mah->add_option("--q-max", c.q_max)->capture_default_str();
  app.add_subcommand("verify", "run every check and write a report");
  app.add_subcommand("decompose", "E4(M) against the bo/bu pattern sum");
  auto chart = app.add_subcommand("chart", "SVG or text chart");
  chart->add_option("--spectrum", c.spectrum, "S, M or EndM")->capture_default_str();
  chart->add_option("--page", c.page, "2, 3 or 4")->capture_default_str();
  chart->add_flag("--decomposition", c.decomposition, "chart the bo/bu decomposition");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    c.window().validate();
    const fs::path out_dir(c.out);
    const fs::path cache_dir = out_dir / ".cache" / cache_key(cmd, c);
    std::optional<Outputs> result;
    if (!c.no_cache) result = load_cache(cache_dir);
    if (!result) {
      if (cmd == "page") result = do_page(c);
      else if (cmd == "ext") result = do_ext(c);
      else if (cmd == "mahowald") result = do_mahowald(c);
      else if (cmd == "verify") result = do_verify(c);
      else if (cmd == "decompose") result = do_decompose(c);
      else result = do_chart(c);
      if (!c.no_cache) store_cache(cache_dir, *result);
    }
    for (const auto& [name, content] : result->files) {
      write_file_atomic(out_dir / name, content);
      out << "wrote " << (out_dir / name).string() << "\n";
    }
    out << result->summary << "\n";
    return result->exit_code;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidWindow& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownLabel& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedPage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedFormat& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace v1ss
