#pragma once

// Per-degree dimension records and their text/JSON forms.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "v1ss/window.hpp"

namespace v1ss {

struct DimensionRow {
  int s = 0;
  int t = 0;
  std::optional<int> u;
  std::size_t dim = 0;

  friend bool operator==(const DimensionRow&, const DimensionRow&) = default;
};

struct DimensionTable {
  std::map<std::string, std::string> metadata;
  /// False for bigraded tables (cobar Ext); records then carry no u.
  bool trigraded = true;
  std::vector<DimensionRow> rows;

  void add(const Multidegree& d, std::size_t dim) { rows.push_back({d.s, d.t, d.u, dim}); }
  void add(int s, int t, std::size_t dim) { rows.push_back({s, t, std::nullopt, dim}); }
  /// Lexicographic by (s, t, u).
  void sort();
  std::optional<std::size_t> lookup(int s, int t, std::optional<int> u = std::nullopt) const;

  friend bool operator==(const DimensionTable&, const DimensionTable&) = default;
};

/// "# key=value" header lines, then one "s t u dim" (or "s t dim") record per line.
std::string to_tsv(const DimensionTable& table);
DimensionTable parse_tsv(std::string_view text);

std::string to_json(const DimensionTable& table);
DimensionTable parse_json(std::string_view text);

/// Writes through a temporary sibling and renames it into place. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
/// Throws IoError.
std::string read_file(const std::filesystem::path& path);

}  // namespace v1ss
