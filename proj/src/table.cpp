#include "v1ss/table.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "v1ss/error.hpp"

namespace v1ss {

void DimensionTable::sort() {
  std::sort(rows.begin(), rows.end(), [](const DimensionRow& a, const DimensionRow& b) {
    return std::tie(a.s, a.t, a.u) < std::tie(b.s, b.t, b.u);
  });
}

std::optional<std::size_t> DimensionTable::lookup(int s, int t, std::optional<int> u) const {
  for (const auto& r : rows)
    if (r.s == s && r.t == t && r.u == u) return r.dim;
  return std::nullopt;
}

std::string to_tsv(const DimensionTable& table) {
  std::ostringstream out;
  for (const auto& [k, v] : table.metadata) out << "# " << k << '=' << v << '\n';
  out << (table.trigraded ? "s\tt\tu\tdim\n" : "s\tt\tdim\n");
  for (const auto& r : table.rows) {
    out << r.s << '\t' << r.t << '\t';
    if (table.trigraded) out << r.u.value_or(0) << '\t';
    out << r.dim << '\n';
  }
  return out.str();
}

DimensionTable parse_tsv(std::string_view text) {
  DimensionTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.starts_with("#")) {
      auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("metadata line without '='", line_no);
      auto key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(' '));
      table.metadata[key] = line.substr(eq + 1);
      continue;
    }
    if (!header_seen) {
      header_seen = true;
      if (line == "s\tt\tu\tdim") {
        table.trigraded = true;
        continue;
      }
      if (line == "s\tt\tdim") {
        table.trigraded = false;
        continue;
      }
      throw ParseError("unexpected column header", line_no);
    }
    std::istringstream fields(line);
    DimensionRow r;
    int u = 0;
    if (table.trigraded) {
      fields >> r.s >> r.t >> u >> r.dim;
      r.u = u;
    } else {
      fields >> r.s >> r.t >> r.dim;
    }
    if (!fields || !(fields >> std::ws).eof()) throw ParseError("malformed record", line_no);
    table.rows.push_back(r);
  }
  return table;
}

std::string to_json(const DimensionTable& table) {
  nlohmann::ordered_json doc;
  doc["metadata"] = table.metadata;
  doc["grading"] = table.trigraded ? "stu" : "st";
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : table.rows) {
    nlohmann::ordered_json row{{"s", r.s}, {"t", r.t}};
    if (r.u) row["u"] = *r.u;
    row["dim"] = r.dim;
    rows.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

DimensionTable parse_json(std::string_view text) {
  DimensionTable table;
  try {
    auto doc = nlohmann::json::parse(text);
    table.metadata = doc.at("metadata").get<std::map<std::string, std::string>>();
    table.trigraded = doc.at("grading").get<std::string>() == "stu";
    for (const auto& row : doc.at("rows")) {
      DimensionRow r{row.at("s").get<int>(), row.at("t").get<int>(), std::nullopt,
                     row.at("dim").get<std::size_t>()};
      if (row.contains("u")) r.u = row.at("u").get<int>();
      table.rows.push_back(r);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  }
  return table;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace v1ss
