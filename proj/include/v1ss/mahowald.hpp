#pragma once

// Mahowald's complex P = F2[x1, x2, ...], |x_i| = (2, 2^{i+2}+1), d(x_i) = x1 x_{i-1}^2.

#include <map>
#include <string>
#include <vector>

#include "v1ss/dga.hpp"

namespace v1ss {

struct MahowaldBidegree {
  int p = 0;
  int q = 0;
  friend auto operator<=>(const MahowaldBidegree&, const MahowaldBidegree&) = default;
};

inline Multidegree embed(const MahowaldBidegree& b) { return {b.p, b.q, 0}; }

/// q-degree of x_i.
int mahowald_degree(int i);
/// Largest i with |x_i| <= q_max (at least 1).
int mahowald_generator_cap(int q_max);

/// x(1)..x(max_index), differential of bidegree (4, 10).
PagePresentation mahowald_presentation(int max_index);

struct ZBHBases {
  MahowaldBidegree degree;
  std::vector<Monomial> basis;
  std::vector<Polynomial> cycles;
  std::vector<Polynomial> boundaries;
  std::vector<Polynomial> homology;
};

struct ZBHDims {
  std::size_t basis = 0;
  std::size_t z = 0;
  std::size_t b = 0;
  std::size_t h = 0;
};

class MahowaldComplex {
 public:
  /// Exact at every bidegree with p <= p_max and q <= q_max.
  MahowaldComplex(int p_max, int q_max);

  const PagePresentation& presentation() const { return pres_; }
  const GradedComplex& complex() const { return complex_; }
  int p_max() const { return p_max_; }
  int q_max() const { return q_max_; }

  /// Throws WindowError outside the window.
  Polynomial d(const Polynomial& x) const;
  Polynomial parse(std::string_view text) const { return v1ss::parse(text, pres_.alphabet); }

  ZBHBases bases(const MahowaldBidegree& b) const;
  /// Bidegrees of the window with a nonempty basis.
  std::vector<MahowaldBidegree> bidegrees() const;
  std::vector<ZBHBases> zbh_bases(const ExecPolicy& policy = {}) const;

 private:
  int p_max_;
  int q_max_;
  PagePresentation pres_;
  GradedComplex complex_;
};

/// Dimensions of Z, B, H per bidegree, precomputed over a window.
class MahowaldTable {
 public:
  MahowaldTable(int p_max, int q_max, const ExecPolicy& policy = {});

  /// Zero for bidegrees that carry no monomial; WindowError beyond the window.
  ZBHDims at(const MahowaldBidegree& b) const;
  int p_max() const { return p_max_; }
  int q_max() const { return q_max_; }
  const std::map<MahowaldBidegree, ZBHDims>& entries() const { return dims_; }

 private:
  int p_max_;
  int q_max_;
  std::map<MahowaldBidegree, ZBHDims> dims_;
};

struct MembershipReport {
  bool all_cycles = true;
  /// Independent modulo boundaries.
  bool independent = true;
  /// Together they span H at this bidegree.
  bool spans = true;
};

MembershipReport check_homology_classes(const MahowaldComplex& complex, const MahowaldBidegree& b,
                                        const std::vector<Polynomial>& named);
/// True when x is a boundary.
bool is_boundary(const MahowaldComplex& complex, const Polynomial& x);

/// One "p q poly" line per homology class, sorted by bidegree.
std::vector<std::string> export_homology(const std::vector<ZBHBases>& bases);

}  // namespace v1ss
