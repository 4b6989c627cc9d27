#include "v1ss/dga.hpp"

#include <algorithm>
#include <set>

#include "v1ss/error.hpp"

namespace v1ss {

namespace {

Multidegree generator_power_degree(const PagePresentation& pres, std::size_t g) {
  const auto& gen = (*pres.alphabet)[g];
  int power = gen.invertible ? pres.laurent_step : 1;
  return power * gen.degree;
}

/// Smallest reduced weight a monomial of nilpotent generators can reach.
int nilpotent_slack(const Alphabet& alphabet) {
  int slack = 0;
  for (const auto& g : alphabet.generators()) {
    if (!g.nilpotent_square) continue;
    int w = reduced_weight(alphabet, g.degree);
    if (w < 0) slack -= w;
  }
  return slack;
}

int effective_completeness(const PagePresentation& pres, const TruncationWindow& window) {
  int bound = pres.complete_below_weight;
  const auto& alphabet = *pres.alphabet;
  for (const auto& g : alphabet.generators())
    if (g.index > window.max_generator_index && !g.invertible)
      bound = std::min(bound, reduced_weight(alphabet, g.degree));
  return bound;
}

}  // namespace

void validate(const PagePresentation& pres) {
  if (!pres.alphabet) throw HomogeneityError("presentation without alphabet");
  if (pres.laurent_step < 1) throw HomogeneityError("laurent step must be positive");
  for (const auto& [g, value] : pres.differential) {
    if (g >= pres.alphabet->size()) throw HomogeneityError("differential on unknown generator");
    if (value.is_zero()) continue;
    auto deg = homogeneous_degree(value);
    auto expected = generator_power_degree(pres, g) + pres.shift;
    if (!deg || *deg != expected)
      throw HomogeneityError("differential of " + (*pres.alphabet)[g].name + " = " + format(value) +
                             " is not homogeneous of degree " + to_string(expected));
  }
  for (const auto& r : pres.relations) {
    auto image = apply_derivation(pres, Polynomial(pres.alphabet, r));
    if (!image.is_zero())
      throw HomogeneityError("differential does not preserve relation " + format(*pres.alphabet, r));
  }
}

bool is_basis_monomial(const PagePresentation& pres, const Monomial& m) {
  if (!is_nonzero_in(*pres.alphabet, m)) return false;
  if (auto inv = pres.alphabet->invertible()) {
    if (m.exponent(*inv) % pres.laurent_step != 0) return false;
  }
  return std::none_of(pres.relations.begin(), pres.relations.end(),
                      [&](const Monomial& r) { return divides(r, m); });
}

Polynomial reduce(const PagePresentation& pres, const Polynomial& p) {
  if (pres.relations.empty()) return p;
  std::vector<Monomial> kept;
  for (const auto& m : p.terms())
    if (std::none_of(pres.relations.begin(), pres.relations.end(),
                     [&](const Monomial& r) { return divides(r, m); }))
      kept.push_back(m);
  return Polynomial::from_terms(p.alphabet(), std::move(kept));
}

Polynomial apply_derivation(const PagePresentation& pres, const Monomial& m) {
  const auto& alphabet = pres.alphabet;
  std::vector<Monomial> terms;
  for (const auto& [g, e] : m.factors()) {
    auto it = pres.differential.find(g);
    if (it == pres.differential.end() || it->second.is_zero()) continue;
    int step = (*alphabet)[g].invertible ? pres.laurent_step : 1;
    if (e % step != 0)
      throw InvalidMonomial("exponent of " + (*alphabet)[g].name + " not divisible by " +
                            std::to_string(step));
    int j = e / step;
    if (j % 2 == 0) continue;
    Monomial rest = m.with_exponent(g, e - step);
    for (const auto& v : it->second.terms()) terms.push_back(multiply(rest, v));
  }
  return reduce(pres, Polynomial::from_terms(alphabet, std::move(terms)));
}

Polynomial apply_derivation(const PagePresentation& pres, const Polynomial& p) {
  Polynomial out(pres.alphabet);
  for (const auto& m : p.terms()) out += apply_derivation(pres, m);
  return out;
}

Polynomial apply_derivation(const PagePresentation& pres, const Polynomial& p,
                            const TruncationWindow& window) {
  for (const auto& m : p.terms()) {
    auto d = multidegree(*pres.alphabet, m);
    if (!presentation_exact(pres, window, d))
      throw WindowError("input degree " + to_string(d) + " outside the exact window");
  }
  auto out = apply_derivation(pres, p);
  for (const auto& m : out.terms()) {
    auto d = multidegree(*pres.alphabet, m);
    if (!presentation_exact(pres, window, d))
      throw WindowError("derivation leaves the window at degree " + to_string(d));
  }
  return out;
}

namespace {

std::vector<Monomial> basis_with_cap(const PagePresentation& pres, const Multidegree& d, int cap) {
  auto all = enumerate_basis_unbounded(*pres.alphabet, d, cap);
  std::erase_if(all, [&](const Monomial& m) { return !is_basis_monomial(pres, m); });
  return all;
}

}  // namespace

std::vector<Monomial> presentation_basis(const PagePresentation& pres, const Multidegree& d) {
  return basis_with_cap(pres, d, kUnboundedAbove);
}

bool presentation_exact(const PagePresentation& pres, const TruncationWindow& window,
                        const Multidegree& d) {
  const auto& alphabet = *pres.alphabet;
  if (reduced_weight(alphabet, d) + nilpotent_slack(alphabet) >= effective_completeness(pres, window))
    return false;
  auto inv = alphabet.invertible();
  if (!inv) return true;
  for (const auto& m : basis_with_cap(pres, d, window.max_generator_index))
    if (!window.v1_exponents.contains(m.exponent(*inv))) return false;
  return true;
}

// ---------------------------------------------------------------- complexes

bool GradedComplex::trusted(const Multidegree& d, int margin) const {
  if (!window.reports(d)) return false;
  int m = margin >= 0 ? margin : window.trusted_margin;
  for (int j = -m; j <= m; ++j)
    if (!exact(d + j * shift)) return false;
  return true;
}

std::vector<Multidegree> GradedComplex::trusted_degrees(int margin) const {
  std::vector<Multidegree> out;
  for (const auto& d : degrees)
    if (trusted(d, margin)) out.push_back(d);
  return out;
}

Polynomial GradedComplex::apply(const Polynomial& p) const {
  Polynomial out(alphabet);
  for (const auto& m : p.terms()) out += differential(m);
  return out;
}

std::vector<Multidegree> window_degrees(const PagePresentation& pres, const TruncationWindow& window) {
  window.validate();
  const auto& alphabet = *pres.alphabet;
  auto inv = alphabet.invertible();

  int weight_cap = 0;
  if (inv)
    weight_cap = std::max(reduced_weight(alphabet, {0, window.t.max, window.u.min}),
                          reduced_weight(alphabet, {0, window.t.max, window.u.max}));
  else
    weight_cap = window.t.max;
  weight_cap += nilpotent_slack(alphabet);

  std::vector<std::size_t> nilpotent, positive;
  for (std::size_t g = 0; g < alphabet.size(); ++g) {
    const auto& gen = alphabet[g];
    if (gen.invertible || gen.index > window.max_generator_index) continue;
    (gen.nilpotent_square ? nilpotent : positive).push_back(g);
  }

  std::set<Multidegree> partial;
  std::vector<Monomial::Factor> current;
  std::function<void(std::size_t, Multidegree)> descend = [&](std::size_t k, Multidegree acc) {
    if (acc.s > window.s.max || reduced_weight(alphabet, acc) > weight_cap) return;
    if (k == positive.size()) {
      auto m = Monomial::from_factors(current);
      if (std::none_of(pres.relations.begin(), pres.relations.end(),
                       [&](const Monomial& r) { return divides(r, m); }))
        partial.insert(acc);
      return;
    }
    const auto g = positive[k];
    for (int e = 0;; ++e) {
      Multidegree next = acc + e * alphabet[g].degree;
      if (next.s > window.s.max || reduced_weight(alphabet, next) > weight_cap) break;
      if (e > 0) current.emplace_back(static_cast<std::uint32_t>(g), e);
      descend(k + 1, next);
      if (e > 0) current.pop_back();
    }
  };
  for (std::uint32_t mask = 0; mask < (1u << nilpotent.size()); ++mask) {
    Multidegree acc;
    current.clear();
    for (std::size_t i = 0; i < nilpotent.size(); ++i)
      if (mask & (1u << i)) {
        acc += alphabet[nilpotent[i]].degree;
        current.emplace_back(static_cast<std::uint32_t>(nilpotent[i]), 1);
      }
    auto base = current;
    descend(0, acc);
    current = base;
  }

  std::set<Multidegree> degrees;
  for (const auto& p : partial) {
    if (!inv) {
      if (window.reports(p)) degrees.insert(p);
      continue;
    }
    const auto& vd = alphabet[*inv].degree;
    for (int k = window.v1_exponents.min; k <= window.v1_exponents.max; ++k) {
      if (k % pres.laurent_step != 0) continue;
      Multidegree d = p + k * vd;
      if (window.reports(d)) degrees.insert(d);
    }
  }
  std::vector<Multidegree> out;
  for (const auto& d : degrees)
    if (!basis_with_cap(pres, d, window.max_generator_index).empty()) out.push_back(d);
  return out;
}

namespace {

GradedComplex unchecked_complex(const PagePresentation& pres, const TruncationWindow& window) {
  GradedComplex c;
  c.name = pres.name;
  c.alphabet = pres.alphabet;
  c.shift = pres.shift;
  c.window = window;
  c.basis = [pres, cap = window.max_generator_index](const Multidegree& d) {
    return basis_with_cap(pres, d, cap);
  };
  c.differential = [pres](const Monomial& m) { return apply_derivation(pres, m); };
  c.exact = [pres, window](const Multidegree& d) { return presentation_exact(pres, window, d); };
  c.degrees = window_degrees(pres, window);
  return c;
}

}  // namespace

GradedComplex presentation_complex(const PagePresentation& pres, const TruncationWindow& window) {
  validate(pres);
  return unchecked_complex(pres, window);
}

// ---------------------------------------------------------------- matrices

BitVector coordinates(const Polynomial& p, const std::vector<Monomial>& basis) {
  BitVector v(basis.size());
  for (const auto& m : p.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || *it != m)
      throw HomogeneityError("term " + format(*p.alphabet(), m) + " is not in the basis");
    v.flip(static_cast<std::size_t>(it - basis.begin()));
  }
  return v;
}

Polynomial from_coordinates(const AlphabetPtr& alphabet, const BitVector& v,
                            const std::vector<Monomial>& basis) {
  std::vector<Monomial> terms;
  for (auto i : v.ones()) terms.push_back(basis[i]);
  return Polynomial::from_terms(alphabet, std::move(terms));
}

GF2Matrix map_matrix(const std::function<Polynomial(const Monomial&)>& dfn,
                     const std::vector<Monomial>& source, const std::vector<Monomial>& target) {
  GF2Matrix m(target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    auto image = dfn(source[j]);
    for (const auto& term : image.terms()) {
      auto it = std::lower_bound(target.begin(), target.end(), term);
      if (it == target.end() || *it != term)
        throw HomogeneityError("image term " + format(*image.alphabet(), term) +
                               " is not in the target basis");
      m.flip(static_cast<std::size_t>(it - target.begin()), j);
    }
  }
  return m;
}

GF2Matrix differential_matrix(const GradedComplex& complex, const Multidegree& d) {
  if (!complex.exact(d)) throw WindowError("source degree " + to_string(d) + " is not exact");
  auto target = d + complex.shift;
  if (!complex.exact(target)) throw WindowError("target degree " + to_string(target) + " is not exact");
  return map_matrix(complex.differential, complex.basis(d), complex.basis(target));
}

const DegreeRecord& ComputedPage::at(const Multidegree& d) const {
  auto it = degrees.find(d);
  if (it == degrees.end()) throw WindowError(name + ": degree " + to_string(d) + " not computed");
  return it->second;
}

DegreeRecord homology_at(const GradedComplex& complex, const Multidegree& d) {
  for (int j = -1; j <= 1; ++j)
    if (!complex.exact(d + j * complex.shift))
      throw WindowError(complex.name + ": degree " + to_string(d + j * complex.shift) + " is not exact");
  auto here = complex.basis(d);
  auto out = map_matrix(complex.differential, here, complex.basis(d + complex.shift));
  auto in = map_matrix(complex.differential, complex.basis(d - complex.shift), here);
  auto cycles = kernel_basis(out);
  auto boundaries = column_space(in);
  auto reps = subquotient_basis(cycles, boundaries);

  DegreeRecord r;
  r.degree = d;
  r.basis_dim = here.size();
  r.cycle_dim = cycles.dim();
  r.boundary_dim = boundaries.dim();
  r.homology_dim = reps.size();
  for (const auto& v : reps) r.representatives.push_back(from_coordinates(complex.alphabet, v, here));
  return r;
}

bool is_boundary(const GradedComplex& complex, const Polynomial& x) {
  if (x.is_zero()) return true;
  auto d = homogeneous_degree(x);
  if (!d) throw HomogeneityError("inhomogeneous element " + format(x));
  auto below = *d - complex.shift;
  if (!complex.exact(*d) || !complex.exact(below))
    throw WindowError(complex.name + ": degree " + to_string(*d) + " is not exact");
  auto here = complex.basis(*d);
  auto image = column_space(map_matrix(complex.differential, complex.basis(below), here));
  return image.contains(coordinates(x, here));
}

bool represents_nonzero_class(const GradedComplex& complex, const Polynomial& x) {
  if (x.is_zero() || !complex.apply(x).is_zero()) return false;
  return !is_boundary(complex, x);
}

namespace {

ComputedPage assemble(const std::string& name, std::vector<DegreeRecord> records) {
  ComputedPage page;
  page.name = name;
  for (auto& r : records) page.degrees.emplace(r.degree, std::move(r));
  return page;
}

}  // namespace

ComputedPage homology_page(const GradedComplex& complex, const ExecPolicy& policy) {
  auto degrees = complex.trusted_degrees();
  return assemble(complex.name, parallel_map(degrees, policy, [&](const Multidegree& d) {
                    return homology_at(complex, d);
                  }));
}

ComputedPage homology_page_serial(const GradedComplex& complex) {
  auto degrees = complex.trusted_degrees();
  return assemble(complex.name,
                  serial_map(degrees, [&](const Multidegree& d) { return homology_at(complex, d); }));
}

ComputedPage basis_page(const GradedComplex& complex) {
  ComputedPage page;
  page.name = complex.name;
  for (const auto& d : complex.degrees) {
    if (!complex.exact(d)) continue;
    auto basis = complex.basis(d);
    DegreeRecord r;
    r.degree = d;
    r.basis_dim = r.cycle_dim = r.homology_dim = basis.size();
    for (auto& m : basis) r.representatives.emplace_back(complex.alphabet, std::move(m));
    page.degrees.emplace(d, std::move(r));
  }
  return page;
}

DSquaredReport verify_d_squared(const GradedComplex& complex, const ExecPolicy& policy) {
  std::vector<Multidegree> degrees;
  for (const auto& d : complex.degrees)
    if (complex.window.reports(d) && complex.exact(d) && complex.exact(d + complex.shift) &&
        complex.exact(d + 2 * complex.shift))
      degrees.push_back(d);

  struct Outcome {
    bool ok = true;
    std::size_t elements = 0;
  };
  auto outcomes = parallel_map(degrees, policy, [&](const Multidegree& d) {
    Outcome o;
    const auto target = d + complex.shift;
    for (const auto& b : complex.basis(d)) {
      ++o.elements;
      auto db = complex.differential(b);
      for (const auto& m : db.terms())
        if (multidegree(*complex.alphabet, m) != target) o.ok = false;
      if (!complex.apply(db).is_zero()) o.ok = false;
    }
    return o;
  });

  DSquaredReport report;
  report.checked_degrees = degrees.size();
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    report.checked_elements += outcomes[i].elements;
    if (!outcomes[i].ok) {
      report.ok = false;
      report.offending.push_back(degrees[i]);
    }
  }
  return report;
}

DSquaredReport verify_d_squared(const PagePresentation& pres, const TruncationWindow& window,
                                const ExecPolicy& policy) {
  return verify_d_squared(unchecked_complex(pres, window), policy);
}

}  // namespace v1ss
