#pragma once

// Cobar complex over C = F2[xi1]/(xi1^4) with coefficients in small comodules.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "v1ss/gf2linalg.hpp"
#include "v1ss/parallel.hpp"
#include "v1ss/table.hpp"
#include "v1ss/window.hpp"

namespace v1ss {

/// Truncated polynomial coalgebra F2[xi]/(xi^height), |xi| = 1.
struct QuotientCoalgebra {
  int height = 4;

  /// Terms xi^i (x) xi^j of the full diagonal of xi^k (binomial coefficients mod 2).
  std::vector<std::pair<int, int>> diagonal(int k) const;
  /// The diagonal without the 1 (x) x and x (x) 1 terms.
  std::vector<std::pair<int, int>> reduced_diagonal(int k) const;
  /// Product of xi^i and xi^j, or nullopt when it vanishes.
  std::optional<int> product(int i, int j) const;
  bool coassociative() const;
};

struct Cell {
  std::string label;
  int degree = 0;
};

struct CoactionTerm {
  int xi_power = 0;
  std::size_t cell = 0;
  friend auto operator<=>(const CoactionTerm&, const CoactionTerm&) = default;
};

/// Left comodule with a named basis, optionally an algebra.
class Comodule {
 public:
  Comodule(std::string name, std::vector<Cell> cells, std::vector<std::vector<CoactionTerm>> coaction,
           QuotientCoalgebra coalgebra = {});

  static Comodule trivial();
  /// H*(M): x0, x1 with psi(x1) = 1 (x) x1 + xi1 (x) x0.
  static Comodule moore();
  /// H*(DM): y-1, y0.
  static Comodule dual_moore();
  /// H*(End M) = H*(M) (x) H*(DM) in the basis 1, alpha, gamma, alphagamma.
  static Comodule endomorphisms();

  /// Cells a_i b_j with the product coaction.
  static Comodule tensor(const Comodule& a, const Comodule& b, std::string name);
  /// Same comodule in a new basis; new_in_old[i] lists old coordinates of new cell i.
  Comodule rebased(std::vector<Cell> cells, const std::vector<BitVector>& new_in_old) const;

  const std::string& name() const { return name_; }
  const QuotientCoalgebra& coalgebra() const { return coalgebra_; }
  std::size_t size() const { return cells_.size(); }
  const Cell& cell(std::size_t i) const { return cells_[i]; }
  /// Throws UnknownLabel.
  std::size_t index_of(std::string_view label) const;

  const std::vector<CoactionTerm>& coact(std::size_t cell) const { return coaction_.at(cell); }
  const std::vector<CoactionTerm>& coact(std::string_view label) const { return coact(index_of(label)); }

  /// product[i][j] = cells summing to cell_i * cell_j.
  void set_product(std::vector<std::vector<std::vector<std::size_t>>> table);
  bool has_product() const { return !product_.empty(); }
  const std::vector<std::size_t>& multiply(std::size_t i, std::size_t j) const;

  bool counital() const;
  bool coassociative() const;
  /// True when there is no product.
  bool multiplicative() const;
  /// All coaction terms are homogeneous.
  bool graded() const;

 private:
  std::string name_;
  QuotientCoalgebra coalgebra_;
  std::vector<Cell> cells_;
  std::vector<std::vector<CoactionTerm>> coaction_;
  std::vector<std::vector<std::vector<std::size_t>>> product_;
};

/// xi^{p_1} | ... | xi^{p_s} | cell with every p_i in [1, height).
struct CobarTensor {
  std::vector<int> xi_powers;
  std::size_t cell = 0;
  friend auto operator<=>(const CobarTensor&, const CobarTensor&) = default;
};

struct CobarCochain {
  int s = 0;
  std::vector<CobarTensor> terms;

  /// Sorted, duplicates cancelled in pairs; all tensors must have length s.
  static CobarCochain from_terms(int s, std::vector<CobarTensor> terms);
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const CobarCochain&, const CobarCochain&) = default;
};

int internal_degree(const Comodule& com, const CobarTensor& x);
std::optional<int> homogeneous_degree(const Comodule& com, const CobarCochain& c);

/// "xi1|1 + xi1^2|alpha"; "0" is the zero cochain in s = 0.
CobarCochain parse_cochain(const Comodule& com, std::string_view text);
std::string format(const Comodule& com, const CobarCochain& c);

CobarCochain cobar_differential(const Comodule& com, const CobarCochain& c);

/// Basis cochains in bidegree (s, t), sorted.
std::vector<CobarTensor> cobar_basis(const Comodule& com, int s, int t);

/// dim Ext^{s,t} for 0 <= s <= s_max and t in t_range.
DimensionTable ext_dimensions(const Comodule& com, int s_max, IntRange t_range,
                              const ExecPolicy& policy = {});
DimensionTable ext_dimensions_serial(const Comodule& com, int s_max, IntRange t_range);

enum class ClassVerdict { ZeroInCohomology, Nonzero, NotACycle };
std::string to_string(ClassVerdict v);

/// Throws HomogeneityError for inhomogeneous input.
ClassVerdict class_identity_check(const Comodule& com, const CobarCochain& c);

}  // namespace v1ss
