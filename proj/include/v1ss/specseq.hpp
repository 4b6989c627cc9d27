#pragma once

// The Q1-based pages of S, M and End(M): presentations, the module action of
// End(M) on M, and the induced differentials on the M-pages.

#include <string>
#include <string_view>

#include "v1ss/chart.hpp"
#include "v1ss/dga.hpp"
#include "v1ss/mahowald.hpp"

namespace v1ss {

enum class SpectrumTag { S, M, EndM };
std::string to_string(SpectrumTag tag);
/// Throws UnknownLabel.
SpectrumTag parse_spectrum(std::string_view name);

/// M-page monomial rewritten as e * v1^epsilon with e in E3(End M).
struct XForm {
  Monomial e;
  int epsilon = 0;
  /// v1 exponent after substituting h(n,1) = v1^-1 x(n-1).
  int j = 0;
  /// exponent of h(1,1)
  int a = 0;
  /// number of x factors
  int k = 0;
};

/// All page presentations and complexes for one truncation window.
class PageSet {
 public:
  explicit PageSet(const TruncationWindow& window);
  PageSet(const PageSet&) = delete;
  PageSet& operator=(const PageSet&) = delete;

  const TruncationWindow& window() const { return window_; }
  /// h(n,1) is present for n <= h_cap(); x(n) for n < h_cap().
  int h_cap() const { return h_cap_; }

  const PagePresentation& e2_s() const { return e2_s_; }
  const PagePresentation& e2_endm() const { return e2_endm_; }
  const PagePresentation& e2_m() const { return e2_m_; }
  const PagePresentation& e3_endm() const { return e3_endm_; }

  const GradedComplex& e2_s_complex() const { return e2_s_complex_; }
  /// (E2(End M), d2)
  const GradedComplex& e2_endm_complex() const { return e2_endm_complex_; }
  /// (E2(M), d2^M)
  const GradedComplex& e2_m_complex() const { return e2_m_complex_; }
  /// (E3(End M), d3) on the presentation
  const GradedComplex& e3_endm_complex() const { return e3_endm_complex_; }
  /// (E3(M), d3^M)
  const GradedComplex& e3_m_complex() const { return e3_m_complex_; }

  /// M monomials into E2(End M) by generator name.
  Polynomial lift_m(const Polynomial& m) const;
  /// E2(End M) -> E2(End M)/(alpha) = E2(M).
  Polynomial project_alpha(const Polynomial& e) const;
  /// x(n) -> v1 h(n+1,1), alphap -> v1 alpha.
  Polynomial e3_to_e2(const Polynomial& e) const;
  XForm to_x_form(const Monomial& m) const;

  Polynomial d2_m(const Polynomial& m) const;
  Polynomial d3_m(const Polynomial& m) const;

  /// w = 2[j mod 4 in {2,3}] + a on the x-form of an M monomial.
  int w_grading(const Monomial& m) const;

 private:
  TruncationWindow window_;
  int h_cap_;
  PagePresentation e2_s_, e2_endm_, e2_m_, e3_endm_;
  std::vector<std::size_t> m_to_endm_;
  std::vector<std::size_t> endm_to_m_;
  GradedComplex e2_s_complex_, e2_endm_complex_, e2_m_complex_, e3_endm_complex_, e3_m_complex_;
};

/// Generator cap for a window: h(n,1) with 2^{n+1}-2 below the largest reduced
/// weight a trusted computation can touch.
int generator_cap(const TruncationWindow& window);

struct PageElement {
  SpectrumTag tag;
  int page;
  Polynomial value;
};

/// e * m for e on an End(M) page and m on the M page of the same index (2 or 3).
/// Throws PageMismatch.
PageElement act(const PageSet& pages, const PageElement& e, const PageElement& m);

/// E2 is the presentation, E3 and E4 are homology. Throws UnsupportedPage.
ComputedPage build_page(const PageSet& pages, SpectrumTag tag, int r, const ExecPolicy& policy = {});

enum class PatternKind { Bo, Bu };

struct PatternSpec {
  PatternKind kind = PatternKind::Bo;
  MahowaldBidegree suspension;
};

/// Dimension of the suspended pattern at an Adams bidegree.
std::size_t pattern_dims(const PatternSpec& spec, const AdamsBidegree& at);

}  // namespace v1ss
