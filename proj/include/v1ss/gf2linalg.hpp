#pragma once

// Dense bit-packed linear algebra over GF(2).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace v1ss {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    auto mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o);
  bool is_zero() const;
  /// Index of the first set bit, or nullopt.
  std::optional<std::size_t> leading() const;
  std::vector<std::size_t> ones() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector& a, const BitVector& b) {
    return a.words_ <=> b.words_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// rows x cols matrix, row-major. For a linear map the convention is
/// rows = target dimension, cols = source dimension.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  static GF2Matrix identity(std::size_t n);
  static GF2Matrix from_rows(std::vector<std::vector<int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { data_[r].set(c, v); }
  void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }
  const BitVector& row(std::size_t r) const { return data_[r]; }
  BitVector& row(std::size_t r) { return data_[r]; }

  GF2Matrix transposed() const;
  BitVector apply(const BitVector& x) const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

struct RowReduction {
  GF2Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form; pivots chosen as first nonzero column, first
/// available row.
RowReduction row_reduce(const GF2Matrix& m);

/// Subspace of GF(2)^ambient_dim stored as its unique reduced echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, std::span<const BitVector> vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BitVector>& basis() const { return basis_; }

  bool contains(const BitVector& v) const;
  /// Residue of v after elimination against the echelon basis.
  BitVector reduce(BitVector v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const GF2Matrix& m);
/// Span of the columns, as a subspace of GF(2)^rows.
Subspace column_space(const GF2Matrix& m);
std::size_t rank(const GF2Matrix& m);

/// Cycle-basis vectors independent modulo the boundaries, in cycle-basis
/// order. Throws NotASubspace when boundaries is not contained in cycles.
std::vector<BitVector> subquotient_basis(const Subspace& cycles, const Subspace& boundaries);

}  // namespace v1ss
