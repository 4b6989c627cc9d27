#include "v1ss/mahowald.hpp"

#include "v1ss/error.hpp"

namespace v1ss {

int mahowald_degree(int i) {
  if (i < 1 || i > 28) throw OverflowError("x(" + std::to_string(i) + ") degree overflows");
  return (1 << (i + 2)) + 1;
}

int mahowald_generator_cap(int q_max) {
  int i = 1;
  while (i < 28 && mahowald_degree(i + 1) <= q_max) ++i;
  return i;
}

PagePresentation mahowald_presentation(int max_index) {
  std::vector<Generator> gens;
  for (int i = 1; i <= max_index; ++i)
    gens.push_back({"x(" + std::to_string(i) + ")", {2, mahowald_degree(i), 0}, false, false, i});
  PagePresentation pres;
  pres.name = "P";
  pres.alphabet = make_alphabet(std::move(gens));
  pres.shift = {4, 10, 0};
  const auto& a = pres.alphabet;
  for (int i = 2; i <= max_index; ++i) {
    auto x1 = a->index_of("x(1)");
    auto prev = a->index_of("x(" + std::to_string(i - 1) + ")");
    Monomial value = multiply(Monomial::single(x1), Monomial::single(prev, 2));
    pres.differential.emplace(a->index_of("x(" + std::to_string(i) + ")"), Polynomial(a, value));
  }
  pres.complete_below_weight = mahowald_degree(max_index + 1);
  return pres;
}

namespace {

TruncationWindow mahowald_window(int p_max, int q_max) {
  TruncationWindow w;
  w.s = {0, p_max};
  w.t = {0, q_max};
  w.u = {0, 0};
  w.v1_exponents = {0, 0};
  w.trusted_margin = 1;
  return w;
}

}  // namespace

MahowaldComplex::MahowaldComplex(int p_max, int q_max)
    : p_max_(p_max),
      q_max_(q_max),
      pres_(mahowald_presentation(mahowald_generator_cap(q_max + 10))),
      complex_(presentation_complex(pres_, mahowald_window(p_max, q_max))) {
  if (p_max < 0 || q_max < 0) throw InvalidWindow("negative Mahowald window");
}

Polynomial MahowaldComplex::d(const Polynomial& x) const {
  for (const auto& m : x.terms()) {
    auto deg = multidegree(*pres_.alphabet, m);
    if (!complex_.window.reports(deg) || !complex_.exact(deg + pres_.shift))
      throw WindowError("bidegree (" + std::to_string(deg.s) + "," + std::to_string(deg.t) +
                        ") outside the Mahowald window");
  }
  return apply_derivation(pres_, x);
}

ZBHBases MahowaldComplex::bases(const MahowaldBidegree& b) const {
  auto d = embed(b);
  if (!complex_.exact(d) || !complex_.exact(d + pres_.shift) || !complex_.exact(d - pres_.shift))
    throw WindowError("bidegree (" + std::to_string(b.p) + "," + std::to_string(b.q) +
                      ") outside the Mahowald window");
  ZBHBases out;
  out.degree = b;
  out.basis = complex_.basis(d);
  auto outgoing = map_matrix(complex_.differential, out.basis, complex_.basis(d + pres_.shift));
  auto incoming = map_matrix(complex_.differential, complex_.basis(d - pres_.shift), out.basis);
  auto z = kernel_basis(outgoing);
  auto bd = column_space(incoming);
  for (const auto& v : z.basis()) out.cycles.push_back(from_coordinates(pres_.alphabet, v, out.basis));
  for (const auto& v : bd.basis()) out.boundaries.push_back(from_coordinates(pres_.alphabet, v, out.basis));
  for (const auto& v : subquotient_basis(z, bd))
    out.homology.push_back(from_coordinates(pres_.alphabet, v, out.basis));
  return out;
}

std::vector<MahowaldBidegree> MahowaldComplex::bidegrees() const {
  std::vector<MahowaldBidegree> out;
  for (const auto& d : complex_.degrees)
    if (d.s <= p_max_ && d.t <= q_max_) out.push_back({d.s, d.t});
  return out;
}

std::vector<ZBHBases> MahowaldComplex::zbh_bases(const ExecPolicy& policy) const {
  return parallel_map(bidegrees(), policy, [&](const MahowaldBidegree& b) { return bases(b); });
}

MahowaldTable::MahowaldTable(int p_max, int q_max, const ExecPolicy& policy) : p_max_(p_max), q_max_(q_max) {
  MahowaldComplex c(p_max, q_max);
  auto degs = c.bidegrees();
  auto dims = parallel_map(degs, policy, [&](const MahowaldBidegree& b) {
    auto r = homology_at(c.complex(), embed(b));
    return ZBHDims{r.basis_dim, r.cycle_dim, r.boundary_dim, r.homology_dim};
  });
  for (std::size_t i = 0; i < degs.size(); ++i) dims_.emplace(degs[i], dims[i]);
}

ZBHDims MahowaldTable::at(const MahowaldBidegree& b) const {
  // monomials of P have even p and q >= 9 p / 2
  if (b.p < 0 || b.p % 2 != 0 || b.q < 9 * (b.p / 2)) return {};
  if (b.p > p_max_ || b.q > q_max_)
    throw WindowError("Mahowald bidegree (" + std::to_string(b.p) + "," + std::to_string(b.q) +
                      ") outside the table");
  auto it = dims_.find(b);
  return it == dims_.end() ? ZBHDims{} : it->second;
}

bool is_boundary(const MahowaldComplex& complex, const Polynomial& x) {
  return is_boundary(complex.complex(), x);
}

MembershipReport check_homology_classes(const MahowaldComplex& complex, const MahowaldBidegree& b,
                                        const std::vector<Polynomial>& named) {
  MembershipReport r;
  auto z = complex.bases(b);
  std::vector<BitVector> span;
  for (const auto& bd : z.boundaries) span.push_back(coordinates(bd, z.basis));
  auto acc = Subspace::span(z.basis.size(), span);
  for (const auto& x : named) {
    if (!complex.d(x).is_zero()) r.all_cycles = false;
    auto v = coordinates(x, z.basis);
    if (acc.contains(v)) r.independent = false;
    span.push_back(v);
    acc = Subspace::span(z.basis.size(), span);
  }
  r.spans = r.all_cycles && r.independent && named.size() == z.homology.size();
  return r;
}

std::vector<std::string> export_homology(const std::vector<ZBHBases>& bases) {
  std::vector<std::string> lines;
  for (const auto& z : bases)
    for (const auto& h : z.homology)
      lines.push_back(std::to_string(z.degree.p) + " " + std::to_string(z.degree.q) + " " + format(h));
  return lines;
}

}  // namespace v1ss
