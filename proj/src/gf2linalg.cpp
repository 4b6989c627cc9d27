#include "v1ss/gf2linalg.hpp"

#include <algorithm>
#include <bit>

#include "v1ss/error.hpp"

namespace v1ss {

BitVector& BitVector::operator^=(const BitVector& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> BitVector::leading() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return std::nullopt;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

GF2Matrix GF2Matrix::from_rows(std::vector<std::vector<int>> rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  GF2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] & 1) m.set(r, c);
  }
  return m;
}

GF2Matrix GF2Matrix::transposed() const {
  GF2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto c : data_[r].ones()) t.set(c, r);
  return t;
}

BitVector GF2Matrix::apply(const BitVector& x) const {
  if (x.size() != cols_) throw Error("dimension mismatch in matrix application");
  BitVector y(rows_);
  auto support = x.ones();
  for (std::size_t r = 0; r < rows_; ++r) {
    bool bit = false;
    for (auto c : support) bit ^= data_[r].get(c);
    if (bit) y.set(r);
  }
  return y;
}

RowReduction row_reduce(const GF2Matrix& m) {
  RowReduction out{m, 0, {}};
  auto& a = out.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < a.rows() && !a.get(r, c)) ++r;
    if (r == a.rows()) continue;
    std::swap(a.row(r), a.row(pivot_row));
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != pivot_row && a.get(i, c)) a.row(i) ^= a.row(pivot_row);
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::size_t rank(const GF2Matrix& m) { return row_reduce(m).rank; }

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient_dim, std::span<const BitVector> vectors) {
  GF2Matrix m(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw Error("vector size does not match ambient dimension");
    m.row(i) = vectors[i];
  }
  auto rr = row_reduce(m);
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < rr.rank; ++i) s.basis_.push_back(rr.reduced.row(i));
  s.pivots_ = std::move(rr.pivot_columns);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    BitVector v(ambient_dim);
    v.set(i);
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

BitVector Subspace::reduce(BitVector v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v.get(pivots_[i])) v ^= basis_[i];
  return v;
}

bool Subspace::contains(const BitVector& v) const {
  if (v.size() != ambient_dim_) throw Error("vector size does not match ambient dimension");
  return reduce(v).is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const BitVector& v) { return contains(v); });
}

Subspace kernel_basis(const GF2Matrix& m) {
  auto rr = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<BitVector> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t i = 0; i < rr.rank; ++i)
      if (rr.reduced.get(i, free)) v.set(rr.pivot_columns[i]);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vectors);
}

Subspace column_space(const GF2Matrix& m) {
  auto t = m.transposed();
  std::vector<BitVector> rows;
  rows.reserve(t.rows());
  for (std::size_t i = 0; i < t.rows(); ++i) rows.push_back(t.row(i));
  return Subspace::span(m.rows(), rows);
}

std::vector<BitVector> subquotient_basis(const Subspace& cycles, const Subspace& boundaries) {
  if (cycles.ambient_dim() != boundaries.ambient_dim())
    throw NotASubspace("cycles and boundaries live in different spaces");
  if (!cycles.contains(boundaries)) throw NotASubspace("boundaries are not contained in cycles");
  std::vector<BitVector> current(boundaries.basis());
  std::vector<BitVector> reps;
  Subspace acc = boundaries;
  for (const auto& z : cycles.basis()) {
    if (acc.contains(z)) continue;
    reps.push_back(z);
    current.push_back(z);
    acc = Subspace::span(cycles.ambient_dim(), current);
  }
  return reps;
}

}  // namespace v1ss
