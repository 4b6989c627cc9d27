#include "v1ss/cobar.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "v1ss/error.hpp"

namespace v1ss {

namespace {

template <typename T>
void cancel_pairs(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  std::vector<T> out;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2) out.push_back(v[i]);
    i = j;
  }
  v = std::move(out);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

// ---------------------------------------------------------------- coalgebra

std::vector<std::pair<int, int>> QuotientCoalgebra::diagonal(int k) const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= k; ++i)
    if ((i & ~k) == 0) out.emplace_back(i, k - i);  // Lucas: C(k,i) odd
  return out;
}

std::vector<std::pair<int, int>> QuotientCoalgebra::reduced_diagonal(int k) const {
  auto d = diagonal(k);
  std::erase_if(d, [](const auto& p) { return p.first == 0 || p.second == 0; });
  return d;
}

std::optional<int> QuotientCoalgebra::product(int i, int j) const {
  if (i + j >= height) return std::nullopt;
  return i + j;
}

bool QuotientCoalgebra::coassociative() const {
  using Triple = std::tuple<int, int, int>;
  for (int k = 0; k < height; ++k) {
    std::vector<Triple> left, right;
    for (auto [a, b] : diagonal(k)) {
      for (auto [x, y] : diagonal(a)) left.emplace_back(x, y, b);
      for (auto [x, y] : diagonal(b)) right.emplace_back(a, x, y);
    }
    cancel_pairs(left);
    cancel_pairs(right);
    if (left != right) return false;
  }
  return true;
}

// ---------------------------------------------------------------- comodules

Comodule::Comodule(std::string name, std::vector<Cell> cells,
                   std::vector<std::vector<CoactionTerm>> coaction, QuotientCoalgebra coalgebra)
    : name_(std::move(name)), coalgebra_(coalgebra), cells_(std::move(cells)), coaction_(std::move(coaction)) {
  if (coaction_.size() != cells_.size()) throw Error("coaction must be given on every cell");
  for (auto& terms : coaction_) {
    for (const auto& t : terms)
      if (t.cell >= cells_.size() || t.xi_power < 0 || t.xi_power >= coalgebra_.height)
        throw Error("coaction term out of range in " + name_);
    cancel_pairs(terms);
  }
}

Comodule Comodule::trivial() { return Comodule("F2", {{"1", 0}}, {{{0, 0}}}); }

Comodule Comodule::moore() {
  return Comodule("M", {{"x0", 0}, {"x1", 1}}, {{{0, 0}}, {{0, 1}, {1, 0}}});
}

Comodule Comodule::dual_moore() {
  return Comodule("DM", {{"y-1", -1}, {"y0", 0}}, {{{0, 0}}, {{0, 1}, {1, 0}}});
}

Comodule Comodule::tensor(const Comodule& a, const Comodule& b, std::string name) {
  std::vector<Cell> cells;
  std::vector<std::vector<CoactionTerm>> coaction;
  const auto nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      cells.push_back({a.cell(i).label + b.cell(j).label, a.cell(i).degree + b.cell(j).degree});
      std::vector<CoactionTerm> terms;
      for (const auto& p : a.coact(i))
        for (const auto& q : b.coact(j))
          if (auto k = a.coalgebra().product(p.xi_power, q.xi_power))
            terms.push_back({*k, p.cell * nb + q.cell});
      coaction.push_back(std::move(terms));
    }
  return Comodule(std::move(name), std::move(cells), std::move(coaction), a.coalgebra());
}

Comodule Comodule::rebased(std::vector<Cell> cells, const std::vector<BitVector>& new_in_old) const {
  const auto n = size();
  if (cells.size() != n || new_in_old.size() != n) throw Error("basis change must be square");
  GF2Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto c : new_in_old[i].ones()) aug.set(c, i);
    aug.set(i, n + i);
  }
  auto rr = row_reduce(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= rr.pivot_columns.size() || rr.pivot_columns[i] != i) throw Error("basis change is singular");
  auto to_new = [&](const BitVector& old) {
    BitVector out(n);
    for (std::size_t r = 0; r < n; ++r) {
      bool bit = false;
      for (auto c : old.ones()) bit ^= rr.reduced.get(r, n + c);
      if (bit) out.set(r);
    }
    return out;
  };

  std::vector<std::vector<CoactionTerm>> coaction(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BitVector> by_power(coalgebra_.height, BitVector(n));
    for (auto c : new_in_old[i].ones())
      for (const auto& t : coaction_[c]) by_power[t.xi_power].flip(t.cell);
    for (int k = 0; k < coalgebra_.height; ++k)
      for (auto c : to_new(by_power[k]).ones()) coaction[i].push_back({k, c});
  }
  Comodule out(name_, std::move(cells), std::move(coaction), coalgebra_);
  if (has_product()) {
    std::vector<std::vector<std::vector<std::size_t>>> table(n, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BitVector acc(n);
        for (auto a : new_in_old[i].ones())
          for (auto b : new_in_old[j].ones())
            for (auto c : multiply(a, b)) acc.flip(c);
        table[i][j] = to_new(acc).ones();
      }
    out.set_product(std::move(table));
  }
  return out;
}

Comodule Comodule::endomorphisms() {
  auto cells = tensor(moore(), dual_moore(), "EndM");
  // cell index 2*i + (j+1) is x_i y_j; (x_i y_j)(x_k y_l) = x_i y_l when j + k = 0
  std::vector<std::vector<std::vector<std::size_t>>> table(4, std::vector<std::vector<std::size_t>>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      int i = a / 2, j = a % 2 - 1, k = b / 2, l = b % 2 - 1;
      if (j + k == 0) table[a][b] = {static_cast<std::size_t>(2 * i + l + 1)};
    }
  cells.set_product(std::move(table));

  auto vec = [](std::initializer_list<std::size_t> ones) {
    BitVector v(4);
    for (auto i : ones) v.set(i);
    return v;
  };
  // x0y-1 = 0, x0y0 = 1, x1y-1 = 2, x1y0 = 3
  return cells.rebased({{"1", 0}, {"alpha", -1}, {"gamma", 1}, {"alphagamma", 0}},
                       {vec({1, 2}), vec({0}), vec({3}), vec({1})});
}

std::size_t Comodule::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].label == label) return i;
  throw UnknownLabel("unknown basis label '" + std::string(label) + "' in " + name_);
}

void Comodule::set_product(std::vector<std::vector<std::vector<std::size_t>>> table) {
  if (table.size() != size()) throw Error("product table has wrong size");
  for (auto& row : table) {
    if (row.size() != size()) throw Error("product table has wrong size");
    for (auto& entry : row) cancel_pairs(entry);
  }
  product_ = std::move(table);
}

const std::vector<std::size_t>& Comodule::multiply(std::size_t i, std::size_t j) const {
  if (!has_product()) throw Error(name_ + " has no product");
  return product_.at(i).at(j);
}

bool Comodule::counital() const {
  for (std::size_t i = 0; i < size(); ++i) {
    std::vector<std::size_t> unit_part;
    for (const auto& t : coaction_[i])
      if (t.xi_power == 0) unit_part.push_back(t.cell);
    if (unit_part != std::vector<std::size_t>{i}) return false;
  }
  return true;
}

bool Comodule::coassociative() const {
  using Triple = std::tuple<int, int, std::size_t>;
  for (std::size_t i = 0; i < size(); ++i) {
    std::vector<Triple> left, right;
    for (const auto& t : coaction_[i]) {
      for (auto [a, b] : coalgebra_.diagonal(t.xi_power)) left.emplace_back(a, b, t.cell);
      for (const auto& u : coaction_[t.cell]) right.emplace_back(t.xi_power, u.xi_power, u.cell);
    }
    cancel_pairs(left);
    cancel_pairs(right);
    if (left != right) return false;
  }
  return true;
}

bool Comodule::multiplicative() const {
  if (!has_product()) return true;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      std::vector<CoactionTerm> lhs, rhs;
      for (auto c : multiply(i, j))
        for (const auto& t : coaction_[c]) lhs.push_back(t);
      for (const auto& p : coaction_[i])
        for (const auto& q : coaction_[j])
          if (auto k = coalgebra_.product(p.xi_power, q.xi_power))
            for (auto c : multiply(p.cell, q.cell)) rhs.push_back({*k, c});
      cancel_pairs(lhs);
      cancel_pairs(rhs);
      if (lhs != rhs) return false;
    }
  return true;
}

bool Comodule::graded() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (const auto& t : coaction_[i])
      if (t.xi_power + cells_[t.cell].degree != cells_[i].degree) return false;
  return true;
}

// ---------------------------------------------------------------- cochains

CobarCochain CobarCochain::from_terms(int s, std::vector<CobarTensor> terms) {
  for (const auto& t : terms)
    if (static_cast<int>(t.xi_powers.size()) != s) throw HomogeneityError("cochain terms of mixed length");
  cancel_pairs(terms);
  return {s, std::move(terms)};
}

int internal_degree(const Comodule& com, const CobarTensor& x) {
  int t = com.cell(x.cell).degree;
  for (int p : x.xi_powers) t += p;
  return t;
}

std::optional<int> homogeneous_degree(const Comodule& com, const CobarCochain& c) {
  std::optional<int> t;
  for (const auto& x : c.terms) {
    int d = internal_degree(com, x);
    if (t && *t != d) return std::nullopt;
    t = d;
  }
  return t;
}

CobarCochain parse_cochain(const Comodule& com, std::string_view text) {
  if (trim(text) == "0") return {};
  std::vector<CobarTensor> terms;
  std::optional<int> s;
  std::size_t offset = 0;
  const int height = com.coalgebra().height;
  while (offset <= text.size()) {
    auto plus = text.find('+', offset);
    auto piece = text.substr(offset, plus == std::string_view::npos ? std::string_view::npos : plus - offset);
    CobarTensor x;
    std::size_t pos = 0;
    while (true) {
      auto bar = piece.find('|', pos);
      auto factor = trim(piece.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos));
      if (bar == std::string_view::npos) {
        if (factor.empty()) throw ParseError("missing comodule element", offset + pos);
        x.cell = com.index_of(factor);
        break;
      }
      int power = 1;
      if (factor.starts_with("xi1^")) {
        try {
          power = std::stoi(factor.substr(4));
        } catch (const std::exception&) {
          throw ParseError("bad exponent '" + factor + "'", offset + pos);
        }
      } else if (factor != "xi1") {
        throw ParseError("expected xi1 factor, got '" + factor + "'", offset + pos);
      }
      if (power < 1 || power >= height) throw ParseError("xi1 power out of range", offset + pos);
      x.xi_powers.push_back(power);
      pos = bar + 1;
    }
    int len = static_cast<int>(x.xi_powers.size());
    if (s && *s != len) throw ParseError("terms of different cobar degree", offset);
    s = len;
    terms.push_back(std::move(x));
    if (plus == std::string_view::npos) break;
    offset = plus + 1;
  }
  return CobarCochain::from_terms(s.value_or(0), std::move(terms));
}

std::string format(const Comodule& com, const CobarCochain& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    if (i) out += '+';
    for (int p : c.terms[i].xi_powers) out += (p == 1 ? std::string("xi1") : "xi1^" + std::to_string(p)) + "|";
    out += com.cell(c.terms[i].cell).label;
  }
  return out;
}

namespace {

void differential_of(const Comodule& com, const CobarTensor& x, std::vector<CobarTensor>& out) {
  const auto& p = x.xi_powers;
  for (std::size_t k = 0; k < p.size(); ++k)
    for (auto [a, b] : com.coalgebra().reduced_diagonal(p[k])) {
      CobarTensor y{{}, x.cell};
      y.xi_powers.reserve(p.size() + 1);
      y.xi_powers.insert(y.xi_powers.end(), p.begin(), p.begin() + static_cast<long>(k));
      y.xi_powers.push_back(a);
      y.xi_powers.push_back(b);
      y.xi_powers.insert(y.xi_powers.end(), p.begin() + static_cast<long>(k) + 1, p.end());
      out.push_back(std::move(y));
    }
  for (const auto& t : com.coact(x.cell)) {
    if (t.xi_power == 0) continue;
    CobarTensor y{p, t.cell};
    y.xi_powers.push_back(t.xi_power);
    out.push_back(std::move(y));
  }
}

GF2Matrix cobar_matrix(const Comodule& com, const std::vector<CobarTensor>& source,
                       const std::vector<CobarTensor>& target) {
  GF2Matrix m(target.size(), source.size());
  std::vector<CobarTensor> image;
  for (std::size_t j = 0; j < source.size(); ++j) {
    image.clear();
    differential_of(com, source[j], image);
    for (const auto& y : image) {
      auto it = std::lower_bound(target.begin(), target.end(), y);
      if (it == target.end() || *it != y) throw HomogeneityError("cobar image outside target basis");
      m.flip(static_cast<std::size_t>(it - target.begin()), j);
    }
  }
  return m;
}

std::size_t ext_at(const Comodule& com, int s, int t) {
  auto here = cobar_basis(com, s, t);
  if (here.empty()) return 0;
  auto out = rank(cobar_matrix(com, here, cobar_basis(com, s + 1, t)));
  std::size_t in = s > 0 ? rank(cobar_matrix(com, cobar_basis(com, s - 1, t), here)) : 0;
  return here.size() - out - in;
}

std::vector<std::pair<int, int>> ext_grid(int s_max, IntRange t_range) {
  if (s_max < 0 || t_range.empty()) throw InvalidWindow("empty Ext range");
  std::vector<std::pair<int, int>> grid;
  for (int s = 0; s <= s_max; ++s)
    for (int t = t_range.min; t <= t_range.max; ++t) grid.emplace_back(s, t);
  return grid;
}

DimensionTable ext_table(const Comodule& com, const std::vector<std::pair<int, int>>& grid,
                         const std::vector<std::size_t>& dims) {
  DimensionTable table;
  table.trigraded = false;
  table.metadata["comodule"] = com.name();
  for (std::size_t i = 0; i < grid.size(); ++i) table.add(grid[i].first, grid[i].second, dims[i]);
  table.sort();
  return table;
}

}  // namespace

CobarCochain cobar_differential(const Comodule& com, const CobarCochain& c) {
  std::vector<CobarTensor> out;
  for (const auto& x : c.terms) differential_of(com, x, out);
  return CobarCochain::from_terms(c.s + 1, std::move(out));
}

std::vector<CobarTensor> cobar_basis(const Comodule& com, int s, int t) {
  std::vector<CobarTensor> out;
  if (s < 0) return out;
  const int top = com.coalgebra().height - 1;
  std::vector<int> powers(static_cast<std::size_t>(s));
  for (std::size_t c = 0; c < com.size(); ++c) {
    int rest = t - com.cell(c).degree;
    if (rest < s || rest > s * top) continue;
    std::function<void(int, int)> fill = [&](int k, int remaining) {
      if (k == s) {
        if (remaining == 0) out.push_back({powers, c});
        return;
      }
      int slots = s - k - 1;
      for (int p = 1; p <= top; ++p) {
        int left = remaining - p;
        if (left < slots || left > slots * top) continue;
        powers[static_cast<std::size_t>(k)] = p;
        fill(k + 1, left);
      }
    };
    fill(0, rest);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DimensionTable ext_dimensions(const Comodule& com, int s_max, IntRange t_range, const ExecPolicy& policy) {
  auto grid = ext_grid(s_max, t_range);
  return ext_table(com, grid,
                   parallel_map(grid, policy, [&](const std::pair<int, int>& st) {
                     return ext_at(com, st.first, st.second);
                   }));
}

DimensionTable ext_dimensions_serial(const Comodule& com, int s_max, IntRange t_range) {
  auto grid = ext_grid(s_max, t_range);
  return ext_table(com, grid, serial_map(grid, [&](const std::pair<int, int>& st) {
                     return ext_at(com, st.first, st.second);
                   }));
}

std::string to_string(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::ZeroInCohomology: return "zero-in-cohomology";
    case ClassVerdict::Nonzero: return "nonzero";
    case ClassVerdict::NotACycle: return "not-a-cycle";
  }
  return "?";
}

ClassVerdict class_identity_check(const Comodule& com, const CobarCochain& c) {
  if (c.is_zero()) return ClassVerdict::ZeroInCohomology;
  auto t = homogeneous_degree(com, c);
  if (!t) throw HomogeneityError("cochain is not homogeneous in t");
  if (!cobar_differential(com, c).is_zero()) return ClassVerdict::NotACycle;
  if (c.s == 0) return ClassVerdict::Nonzero;
  auto here = cobar_basis(com, c.s, *t);
  auto below = cobar_basis(com, c.s - 1, *t);
  BitVector v(here.size());
  for (const auto& x : c.terms) {
    auto it = std::lower_bound(here.begin(), here.end(), x);
    v.flip(static_cast<std::size_t>(it - here.begin()));
  }
  auto boundaries = column_space(cobar_matrix(com, below, here));
  return boundaries.contains(v) ? ClassVerdict::ZeroInCohomology : ClassVerdict::Nonzero;
}

}  // namespace v1ss
