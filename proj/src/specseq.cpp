#include "v1ss/specseq.hpp"

#include <limits>

#include "v1ss/error.hpp"

namespace v1ss {

namespace {

constexpr Multidegree kD2Shift{2, 1, -1};
constexpr Multidegree kD3Shift{3, 2, -2};
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::string h_name(int n) { return "h(" + std::to_string(n) + ",1)"; }
std::string x_name(int n) { return "x(" + std::to_string(n) + ")"; }

int h_weight(int n) { return (1 << (n + 1)) - 2; }

Generator v1_generator() { return {"v1", {0, 2, 1}, true, false, 0}; }
Generator h_generator(int n) { return {h_name(n), {1, h_weight(n), 0}, false, false, n}; }

Monomial mono(const AlphabetPtr& a, std::initializer_list<std::pair<std::string, int>> factors) {
  std::vector<Monomial::Factor> f;
  for (const auto& [name, e] : factors) f.emplace_back(static_cast<std::uint32_t>(a->index_of(name)), e);
  return Monomial::from_factors(std::move(f));
}

Polynomial poly(const AlphabetPtr& a, std::initializer_list<std::pair<std::string, int>> factors) {
  return {a, mono(a, factors)};
}

PagePresentation make_e2_s(int cap) {
  std::vector<Generator> gens{v1_generator(), {"h(1,0)", {1, 1, 0}, false, false, 0}};
  for (int n = 1; n <= cap; ++n) gens.push_back(h_generator(n));
  PagePresentation p;
  p.name = "E2(S)";
  p.alphabet = make_alphabet(std::move(gens));
  p.shift = kD2Shift;
  p.differential.emplace(p.alphabet->index_of("v1"), poly(p.alphabet, {{"h(1,0)", 1}, {"h(1,1)", 1}}));
  p.complete_below_weight = h_weight(cap + 1);
  return p;
}

PagePresentation make_e2_endm(int cap) {
  std::vector<Generator> gens{v1_generator(), {"alpha", {0, -1, 0}, false, true, 0}};
  for (int n = 1; n <= cap; ++n) gens.push_back(h_generator(n));
  PagePresentation p;
  p.name = "E2(EndM)";
  p.alphabet = make_alphabet(std::move(gens));
  p.shift = kD2Shift;
  const auto& a = p.alphabet;
  p.differential.emplace(a->index_of("v1"), poly(a, {{"alpha", 1}, {"h(1,1)", 2}}));
  for (int n = 2; n <= cap; ++n)
    p.differential.emplace(a->index_of(h_name(n)),
                           poly(a, {{"v1", -1}, {"alpha", 1}, {"h(1,1)", 2}, {h_name(n), 1}}));
  p.complete_below_weight = h_weight(cap + 1);
  return p;
}

PagePresentation make_e2_m(int cap) {
  std::vector<Generator> gens{v1_generator()};
  for (int n = 1; n <= cap; ++n) gens.push_back(h_generator(n));
  PagePresentation p;
  p.name = "E2(M)";
  p.alphabet = make_alphabet(std::move(gens));
  p.shift = kD2Shift;
  p.complete_below_weight = h_weight(cap + 1);
  return p;
}

PagePresentation make_e3_endm(int cap) {
  std::vector<Generator> gens{v1_generator(),
                              {"alpha", {0, -1, 0}, false, true, 0},
                              {"alphap", {0, 1, 1}, false, true, 0},
                              h_generator(1)};
  for (int n = 1; n < cap; ++n) gens.push_back({x_name(n), {1, 1 << (n + 2), 1}, false, false, n});
  PagePresentation p;
  p.name = "E3(EndM)";
  p.alphabet = make_alphabet(std::move(gens));
  p.shift = kD3Shift;
  p.laurent_step = 2;
  const auto& a = p.alphabet;
  p.relations = {mono(a, {{"alpha", 1}, {"h(1,1)", 2}}), mono(a, {{"alpha", 1}, {"alphap", 1}})};
  p.differential.emplace(a->index_of("v1"), poly(a, {{"h(1,1)", 3}}));
  for (int n = 2; n < cap; ++n)
    p.differential.emplace(a->index_of(x_name(n)),
                           poly(a, {{"v1", -4}, {"h(1,1)", 1}, {"x(1)", 1}, {x_name(n - 1), 2}}));
  p.complete_below_weight = h_weight(cap + 1);
  return p;
}

GradedComplex induced_complex(const PagePresentation& pres, const TruncationWindow& window, std::string name,
                              Multidegree shift, std::function<Polynomial(const Monomial&)> d) {
  GradedComplex c;
  c.name = std::move(name);
  c.alphabet = pres.alphabet;
  c.shift = shift;
  c.window = window;
  auto base = presentation_complex(pres, window);
  c.basis = base.basis;
  c.exact = base.exact;
  c.degrees = base.degrees;
  c.differential = std::move(d);
  return c;
}

}  // namespace

std::string to_string(SpectrumTag tag) {
  switch (tag) {
    case SpectrumTag::S: return "S";
    case SpectrumTag::M: return "M";
    case SpectrumTag::EndM: return "EndM";
  }
  return "?";
}

SpectrumTag parse_spectrum(std::string_view name) {
  if (name == "S") return SpectrumTag::S;
  if (name == "M") return SpectrumTag::M;
  if (name == "EndM") return SpectrumTag::EndM;
  throw UnknownLabel("unknown spectrum '" + std::string(name) + "'");
}

int generator_cap(const TruncationWindow& window) {
  window.validate();
  if (window.t.max >= kUnboundedAbove || window.u.min <= kUnboundedBelow)
    throw InvalidWindow("the t range needs a finite maximum and the u range a finite minimum");
  // largest reduced weight touched: reported degrees, their d3 neighbours, nilpotent slack
  long reach = static_cast<long>(window.t.max) - 2L * window.u.min +
               6L * std::max(window.trusted_margin, 1) + 2;
  int n = 2;
  while (n < 28 && h_weight(n + 1) <= reach) ++n;
  return std::min(n, std::max(window.max_generator_index, 2));
}

PageSet::PageSet(const TruncationWindow& window)
    : window_(window),
      h_cap_(generator_cap(window)),
      e2_s_(make_e2_s(h_cap_)),
      e2_endm_(make_e2_endm(h_cap_)),
      e2_m_(make_e2_m(h_cap_)),
      e3_endm_(make_e3_endm(h_cap_)) {
  const auto& m = *e2_m_.alphabet;
  const auto& e = *e2_endm_.alphabet;
  for (const auto& g : m.generators()) m_to_endm_.push_back(e.index_of(g.name));
  for (const auto& g : e.generators()) {
    auto i = m.find(g.name);
    endm_to_m_.push_back(i ? *i : kNone);
  }

  e2_s_complex_ = presentation_complex(e2_s_, window_);
  e2_endm_complex_ = presentation_complex(e2_endm_, window_);
  e3_endm_complex_ = presentation_complex(e3_endm_, window_);
  e2_m_complex_ = induced_complex(e2_m_, window_, "E2(M)", kD2Shift,
                                  [this](const Monomial& x) { return d2_m(Polynomial(e2_m_.alphabet, x)); });
  e3_m_complex_ = induced_complex(e2_m_, window_, "E3(M)", kD3Shift,
                                  [this](const Monomial& x) { return d3_m(Polynomial(e2_m_.alphabet, x)); });
}

Polynomial PageSet::lift_m(const Polynomial& m) const {
  if (!m.alphabet()->same_as(*e2_m_.alphabet)) throw AlphabetMismatch();
  std::vector<Monomial> terms;
  for (const auto& t : m.terms()) {
    std::vector<Monomial::Factor> f;
    for (auto [g, e] : t.factors()) f.emplace_back(static_cast<std::uint32_t>(m_to_endm_[g]), e);
    terms.push_back(Monomial::from_factors(std::move(f)));
  }
  return Polynomial::from_terms(e2_endm_.alphabet, std::move(terms));
}

Polynomial PageSet::project_alpha(const Polynomial& x) const {
  if (!x.alphabet()->same_as(*e2_endm_.alphabet)) throw AlphabetMismatch();
  std::vector<Monomial> terms;
  for (const auto& t : x.terms()) {
    std::vector<Monomial::Factor> f;
    bool killed = false;
    for (auto [g, e] : t.factors()) {
      if (endm_to_m_[g] == kNone) {
        killed = true;
        break;
      }
      f.emplace_back(static_cast<std::uint32_t>(endm_to_m_[g]), e);
    }
    if (!killed) terms.push_back(Monomial::from_factors(std::move(f)));
  }
  return Polynomial::from_terms(e2_m_.alphabet, std::move(terms));
}

Polynomial PageSet::e3_to_e2(const Polynomial& x) const {
  const auto& src = *e3_endm_.alphabet;
  if (!x.alphabet()->same_as(src)) throw AlphabetMismatch();
  const auto& dst = e2_endm_.alphabet;
  const auto v1 = static_cast<std::uint32_t>(dst->index_of("v1"));
  std::vector<Monomial> terms;
  for (const auto& t : x.terms()) {
    std::vector<Monomial::Factor> f;
    for (auto [g, e] : t.factors()) {
      const auto& gen = src[g];
      if (gen.name == "alphap") {
        f.emplace_back(v1, e);
        f.emplace_back(static_cast<std::uint32_t>(dst->index_of("alpha")), e);
      } else if (gen.name.starts_with("x(")) {
        f.emplace_back(v1, e);
        f.emplace_back(static_cast<std::uint32_t>(dst->index_of(h_name(gen.index + 1))), e);
      } else {
        f.emplace_back(static_cast<std::uint32_t>(dst->index_of(gen.name)), e);
      }
    }
    terms.push_back(Monomial::from_factors(std::move(f)));
  }
  return Polynomial::from_terms(dst, std::move(terms));
}

XForm PageSet::to_x_form(const Monomial& m) const {
  const auto& src = *e2_m_.alphabet;
  const auto& dst = e3_endm_.alphabet;
  XForm out;
  int i = 0;
  std::vector<Monomial::Factor> f;
  for (auto [g, e] : m.factors()) {
    const auto& gen = src[g];
    if (gen.invertible) {
      i = e;
    } else if (gen.index == 1) {
      out.a = e;
      f.emplace_back(static_cast<std::uint32_t>(dst->index_of("h(1,1)")), e);
    } else {
      out.k += e;
      f.emplace_back(static_cast<std::uint32_t>(dst->index_of(x_name(gen.index - 1))), e);
    }
  }
  out.j = i - out.k;
  out.epsilon = ((out.j % 2) + 2) % 2;
  if (out.j != out.epsilon) f.emplace_back(static_cast<std::uint32_t>(dst->index_of("v1")), out.j - out.epsilon);
  out.e = Monomial::from_factors(std::move(f));
  return out;
}

Polynomial PageSet::d2_m(const Polynomial& m) const {
  return project_alpha(apply_derivation(e2_endm_, lift_m(m)));
}

Polynomial PageSet::d3_m(const Polynomial& m) const {
  const auto& endm = e2_endm_.alphabet;
  const auto v1 = endm->index_of("v1");
  Polynomial out(e2_m_.alphabet);
  for (const auto& t : m.terms()) {
    auto xf = to_x_form(t);
    auto d = apply_derivation(e3_endm_, Polynomial(e3_endm_.alphabet, xf.e));
    if (d.is_zero()) continue;
    auto shifted = e3_to_e2(d) * Polynomial(endm, Monomial::single(v1, xf.epsilon));
    out += project_alpha(shifted);
  }
  return out;
}

int PageSet::w_grading(const Monomial& m) const {
  auto xf = to_x_form(m);
  int r = ((xf.j % 4) + 4) % 4;
  return (r >= 2 ? 2 : 0) + xf.a;
}

PageElement act(const PageSet& pages, const PageElement& e, const PageElement& m) {
  if (e.tag != SpectrumTag::EndM || m.tag != SpectrumTag::M)
    throw PageMismatch("act needs an End(M) element and an M element");
  if (e.page != m.page)
    throw PageMismatch("page E" + std::to_string(e.page) + " acting on page E" + std::to_string(m.page));
  if (!m.value.alphabet()->same_as(*pages.e2_m().alphabet))
    throw PageMismatch("M element is not written in the E2(M) alphabet");
  Polynomial lifted(pages.e2_endm().alphabet);
  if (e.page == 2) {
    if (!e.value.alphabet()->same_as(*pages.e2_endm().alphabet))
      throw PageMismatch("End(M) element is not on E2");
    lifted = e.value;
  } else if (e.page == 3) {
    if (!e.value.alphabet()->same_as(*pages.e3_endm().alphabet))
      throw PageMismatch("End(M) element is not on E3");
    lifted = pages.e3_to_e2(e.value);
  } else {
    throw UnsupportedPage("the action is defined on E2 and E3");
  }
  return {SpectrumTag::M, m.page, pages.project_alpha(lifted * pages.lift_m(m.value))};
}

ComputedPage build_page(const PageSet& pages, SpectrumTag tag, int r, const ExecPolicy& policy) {
  switch (tag) {
    case SpectrumTag::S:
      if (r == 2) return basis_page(pages.e2_s_complex());
      break;
    case SpectrumTag::EndM:
      if (r == 2) return basis_page(pages.e2_endm_complex());
      if (r == 3) return homology_page(pages.e2_endm_complex(), policy);
      if (r == 4) return homology_page(pages.e3_endm_complex(), policy);
      break;
    case SpectrumTag::M:
      if (r == 2) return basis_page(pages.e2_m_complex());
      if (r == 3) return homology_page(pages.e2_m_complex(), policy);
      if (r == 4) return homology_page(pages.e3_m_complex(), policy);
      break;
  }
  throw UnsupportedPage("page E" + std::to_string(r) + " is not available for " + to_string(tag));
}

std::size_t pattern_dims(const PatternSpec& spec, const AdamsBidegree& at) {
  int s = at.s - spec.suspension.p;
  int t = at.t - spec.suspension.q;
  if (spec.kind == PatternKind::Bu) return t == 3 * s ? 1 : 0;
  // v1^m h11^a sits at (m + a, 3m + 2a)
  int a = 3 * s - t;
  int m = s - a;
  if (a < 0 || a > 2) return 0;
  int r = ((m % 4) + 4) % 4;
  return r <= 1 ? 1 : 0;
}

}  // namespace v1ss
