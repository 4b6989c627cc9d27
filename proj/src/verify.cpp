#include "v1ss/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <json.hpp>

#include "v1ss/cobar.hpp"
#include "v1ss/error.hpp"

namespace v1ss {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

CheckResult start(std::string name) {
  CheckResult r;
  r.name = std::move(name);
  return r;
}

void finish(CheckResult& r) {
  if (r.failed) r.status = Status::Fail;
  else if (r.checked == 0) r.status = Status::Insufficient;
  else r.status = Status::Pass;
}

void record(CheckResult& r, ClaimRow row, bool keep_passing = false) {
  if (row.status == Status::Fail) ++r.failed;
  if (row.status == Status::Insufficient) ++r.insufficient;
  else ++r.checked;
  if (keep_passing || row.status != Status::Pass) r.rows.push_back(std::move(row));
}

ClaimRow compare(std::string claim, const Multidegree& d, long long lhs, long long rhs, std::string note = {}) {
  return {std::move(claim), d, lhs, rhs, lhs == rhs ? Status::Pass : Status::Fail, std::move(note)};
}

std::size_t page_dim(const ComputedPage& page, const Multidegree& d) {
  auto it = page.degrees.find(d);
  return it == page.degrees.end() ? 0 : it->second.homology_dim;
}

GF2Matrix slice_matrix(const GradedComplex& c, const std::vector<Monomial>& source, const Multidegree& d) {
  return map_matrix(c.differential, source, c.basis(d + c.shift));
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Insufficient: return "insufficient";
  }
  return "?";
}

// ------------------------------------------------------------ soundness

CheckResult check_d_squared(const PageSet& pages, const ExecPolicy& policy) {
  auto r = start("d_squared");
  r.conditional = true;
  std::size_t elements = 0;
  for (const auto* c : {&pages.e2_endm_complex(), &pages.e2_m_complex(), &pages.e3_endm_complex(),
                        &pages.e3_m_complex()}) {
    auto rep = verify_d_squared(*c, policy);
    r.checked += rep.checked_degrees;
    elements += rep.checked_elements;
    for (const auto& d : rep.offending) {
      ++r.failed;
      r.rows.push_back({c->name, d, 1, 0, Status::Fail, "d^2 != 0"});
    }
    if (rep.checked_degrees == 0) ++r.insufficient;
  }
  r.details = std::to_string(elements) + " basis elements over 4 complexes";
  finish(r);
  return r;
}

CheckResult check_ext_tables(const ExecPolicy& policy) {
  auto r = start("ext_tables");
  const IntRange t{-1, 16};
  const int s_max = 8;
  auto end = ext_dimensions(Comodule::endomorphisms(), s_max, t, policy);
  auto moore = ext_dimensions(Comodule::moore(), s_max, t, policy);
  auto run = [&](const DimensionTable& table, const std::string& name, auto closed) {
    std::set<std::pair<int, int>> seen;
    for (const auto& row : table.rows) {
      seen.insert({row.s, row.t});
      record(r, compare("Ext " + name, {row.s, row.t, 0}, static_cast<long long>(row.dim), closed(row.s, row.t),
                        name));
    }
    for (int s = 0; s <= s_max; ++s)
      for (int tt = t.min; tt <= t.max; ++tt)
        if (!seen.count({s, tt})) record(r, {"Ext " + name, {s, tt, 0}, 0, 0, Status::Insufficient, "missing"});
  };
  run(end, "EndM", [](int s, int tt) { return (tt == 2 * s ? 1LL : 0LL) + (tt == 2 * s - 1 ? 1LL : 0LL); });
  run(moore, "M", [](int s, int tt) { return tt == 2 * s ? 1LL : 0LL; });
  r.details = "s <= 8, -1 <= t <= 16 against F2<1,alpha>[h11] and F2[h11]x0";
  finish(r);
  return r;
}

CheckResult check_eta_identity() {
  auto r = start("eta_identity");
  auto end = Comodule::endomorphisms();
  auto verdict = class_identity_check(end, parse_cochain(end, "xi1|1+xi1^2|alpha"));
  ClaimRow row{"xi1|1+xi1^2|alpha", {1, 2, 0}, 0, 0, Status::Pass, to_string(verdict)};
  if (verdict != ClassVerdict::ZeroInCohomology) row.status = Status::Fail;
  record(r, row, true);
  finish(r);
  return r;
}

CheckResult verify_e3_presentation(const PageSet& pages, const ExecPolicy& policy) {
  auto r = start("e3_presentation");
  r.conditional = true;
  const auto& e2 = pages.e2_endm_complex();
  const auto& e3 = pages.e3_endm_complex();
  auto homology = homology_page(e2, policy);
  std::set<Multidegree> degrees(e2.degrees.begin(), e2.degrees.end());
  degrees.insert(e3.degrees.begin(), e3.degrees.end());
  for (const auto& d : degrees) {
    if (!e2.trusted(d) || !e3.exact(d)) continue;
    record(r, compare("E3(EndM)", d, static_cast<long long>(page_dim(homology, d)),
                      static_cast<long long>(e3.basis(d).size())));
    r.checked_degrees.push_back(d);
  }
  r.details = "homology of (E2(EndM), d2) against the E3 presentation basis";
  finish(r);
  return r;
}

// ------------------------------------------------------------ survival

CheckResult check_survival(const PageSet& pages) {
  auto r = start("survival");
  r.conditional = true;
  auto test = [&](const GradedComplex& c, const AlphabetPtr& a, const char* text, const char* page) {
    auto x = parse(text, a);
    ClaimRow row{std::string(page) + " " + text, *homogeneous_degree(x), 0, 1, Status::Pass, {}};
    try {
      row.lhs = represents_nonzero_class(c, x) ? 1 : 0;
      row.status = row.lhs == 1 ? Status::Pass : Status::Fail;
      row.note = row.lhs ? "nonzero" : "zero";
    } catch (const WindowError& e) {
      row.status = Status::Insufficient;
      row.note = e.what();
    }
    record(r, row, true);
  };
  const auto& e3 = pages.e3_endm().alphabet;
  // v1 alpha = alphap and v1 h(2,1) = x(1) on E3
  for (const char* x : {"alpha", "alphap", "h(1,1)", "x(1)"}) test(pages.e3_endm_complex(), e3, x, "E4(EndM)");
  const auto& m = pages.e2_m().alphabet;
  for (const char* x : {"h(1,1)", "v1", "v1*h(2,1)", "v1^2*h(2,1)"}) test(pages.e3_m_complex(), m, x, "E4(M)");
  finish(r);
  return r;
}

CheckResult check_smaller_conjecture(const PageSet& pages) {
  auto r = start("smaller_conjecture");
  r.conditional = true;
  const auto& e2 = pages.e2_endm_complex();
  const auto& e3 = pages.e3_endm_complex();
  const auto& w = pages.window();
  for (int n = 2; n < pages.h_cap(); ++n) {
    for (int m = w.v1_exponents.min; m <= w.v1_exponents.max; ++m) {
      Multidegree d{1, (1 << (n + 2)) + 2 * m, 1 + m};
      if (!w.reports(d)) continue;
      std::string name = "v1^" + std::to_string(m) + "*x(" + std::to_string(n) + ")";
      ClaimRow row{name, d, 0, 0, Status::Pass, {}};
      auto lifted = parse("v1^" + std::to_string(m + 1) + "*h(" + std::to_string(n + 1) + ",1)",
                          pages.e2_endm().alphabet);
      if (!e2.trusted(d)) {
        row.status = Status::Insufficient;
        row.note = "outside trusted E2 region";
      } else if (!e2.apply(lifted).is_zero()) {
        row.note = "supports d2";
      } else if (is_boundary(e2, lifted)) {
        row.note = "hit by d2";
      } else if (m % 2 != 0 || !e3.trusted(d)) {
        row.status = Status::Insufficient;
        row.note = "outside trusted E3 region";
      } else {
        auto x = parse(name, pages.e3_endm().alphabet);
        if (!e3.apply(x).is_zero()) row.note = "supports d3";
        else if (is_boundary(e3, x)) row.note = "hit by d3";
        else {
          row.status = Status::Fail;
          row.note = "survives to E4";
        }
      }
      record(r, row, true);
    }
  }
  r.details = "every v1^m x(n), n >= 2, supports or is hit by d2 or d3";
  finish(r);
  return r;
}

CheckResult check_d3m_list(const PageSet& pages) {
  auto r = start("d3m_list");
  r.conditional = true;
  const auto& a = pages.e2_m().alphabet;
  auto row = [&](const std::string& src, const std::string& expect) {
    auto x = parse(src, a);
    auto d = *homogeneous_degree(x);
    auto want = parse(expect, a);
    auto got = pages.d3_m(x);
    ClaimRow out{"d3M(" + src + ")", d, 0, 0, got == want ? Status::Pass : Status::Fail, format(got)};
    record(r, out, true);
  };
  row("v1^2", "h(1,1)^3");
  row("h(2,1)", "v1^-2*h(2,1)*h(1,1)^3");
  for (int n = 3; n <= 5; ++n) {
    auto hn = "h(" + std::to_string(n) + ",1)";
    auto hm = "h(" + std::to_string(n - 1) + ",1)";
    if (n > pages.h_cap()) {
      record(r, {"d3M(" + hn + ")", {1, (1 << (n + 1)) - 2, 0}, 0, 0, Status::Insufficient, "generator not in window"},
             true);
      continue;
    }
    row(hn, "v1^-2*h(1,1)^3*" + hn + "+v1^-2*h(1,1)*h(2,1)*" + hm + "^2");
  }
  finish(r);
  return r;
}

CheckResult check_w_grading(const PageSet& pages) {
  auto r = start("w_grading");
  r.conditional = true;
  const auto& c = pages.e3_m_complex();
  for (const auto& d : c.degrees) {
    if (!c.exact(d) || !c.exact(d + c.shift)) continue;
    for (const auto& b : c.basis(d)) {
      auto img = c.differential(b);
      if (img.is_zero()) continue;
      int w = pages.w_grading(b);
      bool ok = std::all_of(img.terms().begin(), img.terms().end(),
                            [&](const Monomial& t) { return pages.w_grading(t) == w + 1; });
      record(r, {"w(d3 p) = w(p) + 1", d, ok ? w + 1 : -1, w + 1, ok ? Status::Pass : Status::Fail,
                 format(*c.alphabet, b)});
    }
  }
  finish(r);
  return r;
}

CheckResult check_e2_quotients(const PageSet& pages) {
  auto r = start("e2_quotients");
  const auto& m = pages.e2_m_complex();
  const auto& endm = pages.e2_endm_complex();
  const auto& s = pages.e2_s_complex();
  auto alpha = pages.e2_endm().alphabet->index_of("alpha");
  auto h10 = pages.e2_s().alphabet->index_of("h(1,0)");
  auto count_free = [](const std::vector<Monomial>& basis, std::size_t g) {
    return static_cast<long long>(
        std::count_if(basis.begin(), basis.end(), [&](const Monomial& x) { return x.exponent(g) == 0; }));
  };
  for (const auto& d : m.degrees) {
    if (!m.exact(d) || !endm.exact(d) || !s.exact(d)) continue;
    auto dim = static_cast<long long>(m.basis(d).size());
    record(r, compare("E2(M) = E2(EndM)/(alpha)", d, dim, count_free(endm.basis(d), alpha)));
    record(r, compare("E2(M) = E2(S)/(h10)", d, dim, count_free(s.basis(d), h10)));
  }
  finish(r);
  return r;
}

CheckResult check_action(const PageSet& pages, int trials, std::uint64_t seed) {
  auto r = start("action_leibniz");
  r.conditional = true;
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto random_poly = [&](const AlphabetPtr& a, int v1_step) {
    std::vector<Monomial> terms;
    for (int i = uniform(1, 3); i > 0; --i) {
      std::vector<Monomial::Factor> f;
      for (std::size_t g = 0; g < a->size(); ++g) {
        const auto& gen = (*a)[g];
        int e = gen.invertible ? v1_step * uniform(-3, 3) : gen.nilpotent_square ? uniform(0, 1) : uniform(0, 2);
        if (e) f.emplace_back(static_cast<std::uint32_t>(g), e);
      }
      terms.push_back(Monomial::from_factors(std::move(f)));
    }
    return Polynomial::from_terms(a, std::move(terms));
  };
  for (int i = 0; i < trials; ++i) {
    auto m = random_poly(pages.e2_m().alphabet, 1);
    for (int page : {2, 3}) {
      const auto& pres = page == 2 ? pages.e2_endm() : pages.e3_endm();
      auto e = random_poly(pres.alphabet, page == 2 ? 1 : 2);
      auto dm = [&](const Polynomial& x) { return page == 2 ? pages.d2_m(x) : pages.d3_m(x); };
      PageElement E{SpectrumTag::EndM, page, e}, M{SpectrumTag::M, page, m};
      auto lhs = dm(act(pages, E, M).value);
      auto rhs = act(pages, {SpectrumTag::EndM, page, apply_derivation(pres, e)}, M).value +
                 act(pages, E, {SpectrumTag::M, page, dm(m)}).value;
      ClaimRow row{"d" + std::to_string(page) + "M(e.m) = d(e).m + e.dM(m)", {}, 0, 0,
                   lhs == rhs ? Status::Pass : Status::Fail, {}};
      if (row.status == Status::Fail) row.note = format(e) + " ; " + format(m);
      record(r, row);
    }
  }
  r.details = std::to_string(trials) + " random pairs per page, seed " + std::to_string(seed);
  finish(r);
  return r;
}

CheckResult check_mahowald_classes() {
  auto r = start("mahowald_classes");
  MahowaldComplex mc(8, 60);
  auto named = [&](MahowaldBidegree b, std::vector<const char*> texts) {
    std::vector<Polynomial> polys;
    std::string label;
    for (auto t : texts) {
      polys.push_back(mc.parse(t));
      label += (label.empty() ? "" : ", ") + std::string(t);
    }
    auto rep = check_homology_classes(mc, b, polys);
    bool ok = rep.all_cycles && rep.independent && rep.spans;
    record(r, {"H(d) = {" + label + "}", embed(b), static_cast<long long>(polys.size()),
               static_cast<long long>(mc.bases(b).homology.size()), ok ? Status::Pass : Status::Fail, {}},
           true);
  };
  named({0, 0}, {"1"});
  named({2, 9}, {"x(1)"});
  named({4, 18}, {"x(1)^2"});
  named({4, 34}, {"x(2)^2"});
  named({6, 51}, {"x(1)^2*x(3)+x(2)^3"});
  for (const char* b : {"x(1)^3", "x(1)*x(2)^2"}) {
    auto x = mc.parse(b);
    bool ok = is_boundary(mc, x);
    auto d = *homogeneous_degree(x);
    record(r, {std::string(b) + " in B(d)", d, ok ? 1 : 0, 1, ok ? Status::Pass : Status::Fail, {}}, true);
  }
  finish(r);
  return r;
}

// ------------------------------------------------------------ slice claims

SliceData slice_data(const PageSet& pages, const Multidegree& d) {
  const auto& c = pages.e3_m_complex();
  SliceData out;
  auto basis = c.basis(d);
  if (basis.empty()) return out;
  std::map<int, std::vector<Monomial>> slices;
  for (const auto& b : basis) slices[pages.w_grading(b)].push_back(b);
  int top = slices.rbegin()->first;
  out.dim.assign(top + 1, 0);
  out.ker.assign(top + 1, 0);
  out.rank.assign(top + 1, 0);
  for (const auto& [n, cols] : slices) {
    auto rk = rank(slice_matrix(c, cols, d));
    out.dim[n] = cols.size();
    out.rank[n] = rk;
    out.ker[n] = cols.size() - rk;
  }
  return out;
}

namespace {

struct ClosedForms {
  const MahowaldTable& table;

  // Z/B/H of P at the Mahowald bidegree carrying the a-piece of d, with the
  // v1 exponent j of that piece.
  std::optional<std::pair<int, ZBHDims>> piece(const Multidegree& d, int a) const {
    int k = d.s - a;
    if (a < 0 || k < 0) return std::nullopt;
    int j = d.u - k;
    int q = d.t - 2 * j - 2 * a + k;
    return std::make_pair(j, table.at({2 * k, q}));
  }
  long long z01(const Multidegree& d, int n) const {
    auto p = piece(d, n);
    return p && mod4(p->first) <= 1 ? static_cast<long long>(p->second.z) : 0;
  }
  long long h01(const Multidegree& d, int n) const {
    auto p = piece(d, n);
    return p && mod4(p->first) <= 1 ? static_cast<long long>(p->second.h) : 0;
  }
  long long b01(const Multidegree& d, int n) const {
    auto p = piece(d, n);
    return p && mod4(p->first) <= 1 ? static_cast<long long>(p->second.b) : 0;
  }
  long long b23(const Multidegree& d, int n) const {
    auto p = piece(d, n - 2);
    return p && mod4(p->first) >= 2 ? static_cast<long long>(p->second.b) : 0;
  }
};

}  // namespace

MahowaldTable claims_mahowald_table(const PageSet& pages, const ExecPolicy& policy) {
  const auto& c = pages.e3_m_complex();
  int p_max = 0, q_max = 0;
  for (const auto& d : c.trusted_degrees())
    for (int a = 0; a <= d.s; ++a) {
      int k = d.s - a;
      int j = d.u - k;
      p_max = std::max(p_max, 2 * k);
      q_max = std::max(q_max, d.t - 2 * j - 2 * a + k);
    }
  return MahowaldTable(p_max, q_max, policy);
}

CheckResult verify_e4_claims(const PageSet& pages, const MahowaldTable& table, const ExecPolicy& policy) {
  auto r = start("e4_claims");
  r.conditional = true;
  const auto& c = pages.e3_m_complex();
  auto trusted = c.trusted_degrees();

  std::set<Multidegree> needed(trusted.begin(), trusted.end());
  for (const auto& d : trusted) needed.insert(d - c.shift);
  std::vector<Multidegree> list(needed.begin(), needed.end());
  auto computed = parallel_map(list, policy, [&](const Multidegree& d) { return slice_data(pages, d); });
  std::map<Multidegree, SliceData> slices;
  for (std::size_t i = 0; i < list.size(); ++i) slices.emplace(list[i], std::move(computed[i]));

  auto e4 = homology_page(c, policy);
  ClosedForms f{table};
  for (const auto& d : trusted) {
    const auto& here = slices.at(d);
    const auto& below = slices.at(d - c.shift);
    const int top = d.s + 3;
    try {
      auto H = [&](int n) {
        return static_cast<long long>(here.at(here.ker, n)) - static_cast<long long>(below.at(below.rank, n - 1));
      };
      auto ker = [&](int n) { return static_cast<long long>(here.at(here.ker, n)); };
      long long total = 0;
      for (int n = 0; n <= top; ++n) total += H(n);

      record(r, compare("(1)", d, H(0), f.z01(d, 0)));
      record(r, compare("(2)", d, H(1), f.h01(d, 1)));
      record(r, compare("(3)", d, H(2) - f.h01(d, 2), f.b23(d, 2)));
      for (int n = 3; n <= top; ++n) record(r, compare("(4)", d, H(n), 0, "n=" + std::to_string(n)));
      for (int n = 0; n <= top; ++n)
        record(r, compare("(i)", d, ker(n) - f.z01(d, n), n >= 2 ? f.b23(d, n) : 0, "n=" + std::to_string(n)));
      // image of d3^n landing in d
      for (int n = 0; n + 1 <= top; ++n) {
        long long rk = static_cast<long long>(below.at(below.rank, n));
        long long want = n <= 1 ? f.b01(d, n + 1) : ker(n + 1);
        record(r, compare("(ii)", d, rk, want, "n=" + std::to_string(n)));
      }
      long long direct = static_cast<long long>(page_dim(e4, d));
      record(r, compare("E4 direct = slices", d, direct, total));
      record(r, compare("E4 direct = closed form", d, direct,
                        f.z01(d, 0) + f.h01(d, 1) + f.h01(d, 2) + f.b23(d, 2)));
      r.checked_degrees.push_back(d);
    } catch (const WindowError& e) {
      record(r, {"closed forms", d, 0, 0, Status::Insufficient, e.what()});
    }
  }
  r.details = "w-slices of E3(M) against Z, B, H of the Mahowald complex";
  finish(r);
  return r;
}

// ------------------------------------------------------------ decomposition

Decomposition mahowald_decomposition_check(const PageSet& pages, const MahowaldTable& table,
                                           const Viewport& viewport, const ExecPolicy& policy) {
  Decomposition out;
  const auto& c = pages.e3_m_complex();
  auto e4 = homology_page(c, policy);

  for (int S = viewport.filtration_min; S <= viewport.filtration_max; ++S) {
    for (int stem = viewport.stem_min; stem <= viewport.stem_max; ++stem) {
      const int T = S + stem;
      DecompositionRow row;
      row.at = {S, T};
      std::set<Multidegree> tri;
      bool covered = true;
      for (int a = 0; a <= 2; ++a) {
        for (int k = 0;; ++k) {
          int m = S - a - 2 * k;
          int q = T - 3 * m - 2 * a;
          if (q < 9 * k) break;
          tri.insert({a + k, 2 * m + 2 * a + q - k, m + k});
          try {
            auto z = table.at({2 * k, q});
            if (mod4(m) <= 1) row.rhs += static_cast<long long>(z.h);
            if (a == 0) row.rhs += static_cast<long long>(z.b);
          } catch (const WindowError&) {
            covered = false;
          }
        }
      }
      if (tri.empty()) continue;
      for (const auto& d : tri) {
        if (!c.trusted(d)) covered = false;
        row.lhs += static_cast<long long>(page_dim(e4, d));
      }
      row.tridegrees.assign(tri.begin(), tri.end());
      row.status = !covered ? Status::Insufficient : row.lhs == row.rhs ? Status::Pass : Status::Fail;
      out.rows.push_back(std::move(row));
    }
  }

  auto& doc = out.chart;
  doc.title = "E4(M) as suspended bo and bu patterns (conditional)";
  doc.viewport = viewport;
  int group = 0;
  for (const auto& [b, z] : table.entries()) {
    for (int kind = 0; kind < 2; ++kind) {
      std::size_t copies = kind == 0 ? z.h : z.b;
      for (std::size_t i = 0; i < copies; ++i) {
        std::string label = std::string(kind == 0 ? "bo " : "bu ") + std::to_string(b.p) + "," + std::to_string(b.q);
        if (copies > 1) label += "#" + std::to_string(i + 1);
        bool used = false;
        auto place = [&](int m, int a) -> std::pair<int, int> { return {b.q - b.p + 2 * m + a, b.p + m + a}; };
        for (int m = -b.p - 2; m <= viewport.filtration_max; ++m) {
          for (int a = 0; a <= (kind == 0 ? 2 : 0); ++a) {
            if (kind == 0 && mod4(m) > 1) continue;
            auto [stem, f] = place(m, a);
            if (!viewport.contains(stem, f)) continue;
            used = true;
            doc.dots.push_back({stem, f, label, group});
            if (a < (kind == 0 ? 2 : 0)) {
              auto [s1, f1] = place(m, a + 1);
              doc.lines.push_back({stem, f, s1, f1, LineKind::H11});
            }
            if (kind == 1 || mod4(m) == 0) {
              auto [s1, f1] = place(m + 1, a);
              doc.lines.push_back({stem, f, s1, f1, LineKind::V1});
            }
          }
        }
        if (used) doc.groups.push_back({group++, label});
      }
    }
  }
  return out;
}

CheckResult summarize(const Decomposition& dec) {
  auto r = start("decomposition");
  r.conditional = true;
  for (const auto& row : dec.rows)
    record(r, {"E4(M) = bo/bu patterns", {row.at.s, row.at.t, 0}, row.lhs, row.rhs, row.status,
               "stem " + std::to_string(row.at.stem())});
  r.details = "Adams bidegrees with stem <= 24 and filtration <= 12; insufficient rows are listed";
  finish(r);
  return r;
}

std::string decomposition_tsv(const Decomposition& dec) {
  std::string out = "# conditional_on_conjecture=true\ns\tt\tstem\tlhs\trhs\tstatus\n";
  for (const auto& row : dec.rows)
    out += std::to_string(row.at.s) + "\t" + std::to_string(row.at.t) + "\t" + std::to_string(row.at.stem()) + "\t" +
           std::to_string(row.lhs) + "\t" + std::to_string(row.rhs) + "\t" + to_string(row.status) + "\n";
  return out;
}

// ------------------------------------------------------------ report

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Fail; });
}

const CheckResult& VerificationReport::check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw UnknownLabel("no check named '" + std::string(name) + "'");
}

VerificationReport run_verification(const PageSet& pages, const ExecPolicy& policy) {
  VerificationReport rep;
  rep.window = pages.window();
  rep.h_cap = pages.h_cap();
  for (const auto* c : {&pages.e2_endm_complex(), &pages.e2_m_complex(), &pages.e3_endm_complex(),
                        &pages.e3_m_complex()})
    rep.trusted_counts.emplace_back(c->name, c->trusted_degrees().size());

  auto table = claims_mahowald_table(pages, policy);
  rep.checks.push_back(check_d_squared(pages, policy));
  rep.checks.push_back(check_ext_tables(policy));
  rep.checks.push_back(check_eta_identity());
  rep.checks.push_back(verify_e3_presentation(pages, policy));
  rep.checks.push_back(check_survival(pages));
  rep.checks.push_back(check_smaller_conjecture(pages));
  rep.checks.push_back(check_d3m_list(pages));
  rep.checks.push_back(check_w_grading(pages));
  rep.checks.push_back(verify_e4_claims(pages, table, policy));
  rep.checks.push_back(check_mahowald_classes());
  rep.decomposition = mahowald_decomposition_check(pages, table, {}, policy);
  rep.checks.push_back(summarize(rep.decomposition));
  rep.checks.push_back(check_e2_quotients(pages));
  rep.checks.push_back(check_action(pages));

  auto e4 = homology_page(pages.e3_m_complex(), policy);
  for (const auto& [d, rec] : e4.degrees) rep.e4_m.emplace_back(d, rec.homology_dim);
  return rep;
}

std::string to_json(const VerificationReport& rep) {
  using json = nlohmann::ordered_json;
  auto deg = [](const Multidegree& d) { return json::array({d.s, d.t, d.u}); };
  const auto& w = rep.window;
  json doc;
  doc["window"] = {{"s", {w.s.min, w.s.max}},
                   {"t_max", w.t.max},
                   {"u", {w.u.min, w.u.max}},
                   {"v1_exponents", {w.v1_exponents.min, w.v1_exponents.max}},
                   {"trusted_margin", w.trusted_margin},
                   {"h_cap", rep.h_cap}};
  json trusted = json::object();
  for (const auto& [name, n] : rep.trusted_counts) trusted[name] = n;
  doc["trusted_region"] = trusted;
  doc["passed"] = rep.passed();
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json rows = json::array();
    for (const auto& row : c.rows)
      rows.push_back({{"claim", row.claim},
                      {"degree", deg(row.degree)},
                      {"lhs", row.lhs},
                      {"rhs", row.rhs},
                      {"status", to_string(row.status)},
                      {"note", row.note}});
    json checked = json::array();
    for (const auto& d : c.checked_degrees) checked.push_back(deg(d));
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"conditional_on_conjecture", c.conditional},
                      {"checked", c.checked},
                      {"failed", c.failed},
                      {"insufficient", c.insufficient},
                      {"details", c.details},
                      {"rows", rows},
                      {"checked_degrees", checked}});
  }
  doc["checks"] = checks;
  json dec = json::array();
  for (const auto& row : rep.decomposition.rows) {
    json tri = json::array();
    for (const auto& d : row.tridegrees) tri.push_back(deg(d));
    dec.push_back({{"claim", "decomposition"},
                   {"degree", {row.at.s, row.at.t}},
                   {"lhs", row.lhs},
                   {"rhs", row.rhs},
                   {"status", to_string(row.status)},
                   {"conditional_on_conjecture", true},
                   {"tridegrees", tri}});
  }
  doc["decomposition"] = dec;
  json e4 = json::array();
  for (const auto& [d, n] : rep.e4_m) e4.push_back({d.s, d.t, d.u, n});
  doc["e4_m_dimensions"] = {{"conditional_on_conjecture", true}, {"rows", e4}};
  return doc.dump(1) + "\n";
}

}  // namespace v1ss
