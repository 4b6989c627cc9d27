#pragma once

// Derivation-style differentials on commutative presentations over GF(2):
// Leibniz extension, per-degree matrices, d^2 = 0 checks and homology.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "v1ss/gf2linalg.hpp"
#include "v1ss/gf2poly.hpp"
#include "v1ss/parallel.hpp"
#include "v1ss/window.hpp"

namespace v1ss {

struct PagePresentation {
  std::string name;
  AlphabetPtr alphabet;
  /// Monomial relations; any monomial divisible by one of them is zero.
  std::vector<Monomial> relations;
  /// Differential on generators. For the invertible generator g the stored
  /// value is d(g^laurent_step), and only exponents divisible by the step
  /// occur in the presentation.
  std::map<std::size_t, Polynomial> differential;
  int laurent_step = 1;
  Multidegree shift;
  /// Every generator of the infinite family with reduced weight below this
  /// bound is present in the alphabet.
  int complete_below_weight = kUnboundedAbove;
};

/// Homogeneity of differential values and relations, compatibility of d with
/// the relations. Throws HomogeneityError.
void validate(const PagePresentation& pres);

bool is_basis_monomial(const PagePresentation& pres, const Monomial& m);
/// Drops monomials that vanish in the presentation.
Polynomial reduce(const PagePresentation& pres, const Polynomial& p);

Polynomial apply_derivation(const PagePresentation& pres, const Monomial& m);
Polynomial apply_derivation(const PagePresentation& pres, const Polynomial& p);
/// Throws WindowError naming the degree if the output leaves the exact part
/// of the window.
Polynomial apply_derivation(const PagePresentation& pres, const Polynomial& p,
                            const TruncationWindow& window);

/// Basis of the presentation at d with no v1 bound (finite).
std::vector<Monomial> presentation_basis(const PagePresentation& pres, const Multidegree& d);
/// True when the basis at d is unaffected by the window's truncation.
bool presentation_exact(const PagePresentation& pres, const TruncationWindow& window,
                        const Multidegree& d);

/// A cochain complex with a monomial basis in each multidegree.
struct GradedComplex {
  std::string name;
  AlphabetPtr alphabet;
  Multidegree shift;
  TruncationWindow window;
  std::function<std::vector<Monomial>(const Multidegree&)> basis;
  std::function<Polynomial(const Monomial&)> differential;
  std::function<bool(const Multidegree&)> exact;
  /// Reported degrees with a nonempty basis, sorted.
  std::vector<Multidegree> degrees;

  /// Reported, and exact within trusted_margin (or `margin`) shifts.
  bool trusted(const Multidegree& d, int margin = -1) const;
  std::vector<Multidegree> trusted_degrees(int margin = -1) const;
  Polynomial apply(const Polynomial& p) const;
};

GradedComplex presentation_complex(const PagePresentation& pres, const TruncationWindow& window);

/// Degrees of the window carrying at least one monomial of the presentation.
std::vector<Multidegree> window_degrees(const PagePresentation& pres, const TruncationWindow& window);

BitVector coordinates(const Polynomial& p, const std::vector<Monomial>& basis);
Polynomial from_coordinates(const AlphabetPtr& alphabet, const BitVector& v,
                            const std::vector<Monomial>& basis);

/// Matrix of `dfn` from `source` to `target` (rows = target). Throws
/// HomogeneityError if an image leaves the target basis.
GF2Matrix map_matrix(const std::function<Polynomial(const Monomial&)>& dfn,
                     const std::vector<Monomial>& source, const std::vector<Monomial>& target);

/// Throws WindowError when the source or target degree is not exact.
GF2Matrix differential_matrix(const GradedComplex& complex, const Multidegree& d);

struct DegreeRecord {
  Multidegree degree;
  std::size_t basis_dim = 0;
  std::size_t cycle_dim = 0;
  std::size_t boundary_dim = 0;
  std::size_t homology_dim = 0;
  std::vector<Polynomial> representatives;
};

struct ComputedPage {
  std::string name;
  std::map<Multidegree, DegreeRecord> degrees;

  /// Throws WindowError for degrees that were not computed.
  const DegreeRecord& at(const Multidegree& d) const;
  bool has(const Multidegree& d) const { return degrees.count(d) != 0; }
};

DegreeRecord homology_at(const GradedComplex& complex, const Multidegree& d);

/// Homology at every trusted degree, one task per degree.
ComputedPage homology_page(const GradedComplex& complex, const ExecPolicy& policy = {});
/// Single-threaded reference implementation of homology_page.
ComputedPage homology_page_serial(const GradedComplex& complex);

/// The complex's own bases at every exact reported degree (no homology taken).
ComputedPage basis_page(const GradedComplex& complex);

/// x lies in the image of d. Throws WindowError unless x's degree and the
/// degree below it are exact, HomogeneityError for inhomogeneous x.
bool is_boundary(const GradedComplex& complex, const Polynomial& x);
/// x is a cycle that is not a boundary.
bool represents_nonzero_class(const GradedComplex& complex, const Polynomial& x);

struct DSquaredReport {
  bool ok = true;
  std::size_t checked_degrees = 0;
  std::size_t checked_elements = 0;
  std::vector<Multidegree> offending;
};

/// d(d(b)) = 0 and homogeneity of d(b) for every basis element b at every
/// reported degree whose two successors are exact.
DSquaredReport verify_d_squared(const GradedComplex& complex, const ExecPolicy& policy = {});
/// As above on an unvalidated presentation: inhomogeneous differential values
/// are reported as offending degrees instead of raised.
DSquaredReport verify_d_squared(const PagePresentation& pres, const TruncationWindow& window,
                                const ExecPolicy& policy = {});

}  // namespace v1ss
