#include <doctest.h>

#include "support.hpp"
#include "v1ss/error.hpp"
#include "v1ss/specseq.hpp"

using namespace v1ss;

namespace {

const PageSet& small_pages() {
  static const PageSet pages(TruncationWindow::standard(24, 6, -8, 8));
  return pages;
}

Polynomial m_poly(const PageSet& p, const char* text) { return parse(text, p.e2_m().alphabet); }

// random E3(End M) monomial; the presentation only carries even v1 powers
Monomial random_e3_monomial(testing::Rng& rng, const Alphabet& a) {
  auto m = testing::random_monomial(rng, a, 2);
  auto v1 = a.index_of("v1");
  int e = m.exponent(v1);
  return m.with_exponent(v1, e - (((e % 2) + 2) % 2));
}

}  // namespace

TEST_CASE("generator cap follows the reduced-weight reach") {
  CHECK(generator_cap(TruncationWindow::standard(64, 12, -16, 16)) == 5);
  CHECK(generator_cap(TruncationWindow::standard(24, 6, -8, 8)) == 4);
  auto w = TruncationWindow::standard(64, 12, -16, 16);
  w.max_generator_index = 3;
  CHECK(generator_cap(w) == 3);
  TruncationWindow open;
  open.t.max = kUnboundedAbove;
  CHECK_THROWS_AS(generator_cap(open), InvalidWindow);
}

TEST_CASE("spectrum tags") {
  CHECK(parse_spectrum("EndM") == SpectrumTag::EndM);
  CHECK(to_string(SpectrumTag::S) == "S");
  CHECK_THROWS_AS(parse_spectrum("ko"), UnknownLabel);
}

TEST_CASE("d2 on M vanishes on generators") {
  const auto& p = small_pages();
  for (const char* g : {"v1", "h(1,1)", "h(2,1)", "h(3,1)", "v1^-3*h(2,1)^2"})
    CHECK(p.d2_m(m_poly(p, g)).is_zero());
  CHECK(format(apply_derivation(p.e2_s(), parse("v1", p.e2_s().alphabet))) == "h(1,0)*h(1,1)");
}

TEST_CASE("action-induced d3 on M") {
  const auto& p = small_pages();
  CHECK(format(p.d3_m(m_poly(p, "v1^2"))) == format(m_poly(p, "h(1,1)^3")));
  CHECK(p.d3_m(m_poly(p, "v1")).is_zero());
  CHECK(p.d3_m(m_poly(p, "1")).is_zero());
  CHECK(p.d3_m(m_poly(p, "h(2,1)")) == m_poly(p, "v1^-2*h(1,1)^3*h(2,1)"));
  for (int n = 3; n <= p.h_cap(); ++n) {
    auto hn = "h(" + std::to_string(n) + ",1)";
    auto hm = "h(" + std::to_string(n - 1) + ",1)";
    auto expect = m_poly(p, ("v1^-2*h(1,1)^3*" + hn + "+v1^-2*h(1,1)*h(2,1)*" + hm + "^2").c_str());
    CHECK(p.d3_m(m_poly(p, hn.c_str())) == expect);
  }
}

TEST_CASE("x-form") {
  const auto& p = small_pages();
  auto xf = p.to_x_form(m_poly(p, "v1^3*h(1,1)*h(2,1)^2*h(3,1)").terms()[0]);
  CHECK(xf.j == 0);
  CHECK(xf.epsilon == 0);
  CHECK(xf.k == 3);
  CHECK(xf.a == 1);
  auto odd = p.to_x_form(m_poly(p, "v1^-2*h(2,1)").terms()[0]);
  CHECK(odd.j == -3);
  CHECK(odd.epsilon == 1);
  CHECK(format(*p.e3_endm().alphabet, odd.e) == "v1^-4*x(1)");
}

TEST_CASE("w-grading") {
  const auto& p = small_pages();
  auto w = [&](const char* t) { return p.w_grading(m_poly(p, t).terms()[0]); };
  CHECK(w("1") == 0);
  CHECK(w("v1") == 0);
  CHECK(w("v1^2") == 2);
  CHECK(w("v1^-1") == 2);
  CHECK(w("h(1,1)^3") == 3);
  CHECK(w("v1*h(2,1)") == 0);
}

TEST_CASE("action: examples and page checks") {
  const auto& p = small_pages();
  PageElement alpha{SpectrumTag::EndM, 2, parse("alpha", p.e2_endm().alphabet)};
  PageElement one{SpectrumTag::M, 2, m_poly(p, "1")};
  CHECK(act(p, alpha, one).value.is_zero());
  PageElement x1{SpectrumTag::EndM, 3, parse("x(1)", p.e3_endm().alphabet)};
  PageElement v1{SpectrumTag::M, 3, m_poly(p, "v1")};
  CHECK(act(p, x1, v1).value == m_poly(p, "v1^2*h(2,1)"));
  CHECK_THROWS_AS(act(p, x1, one), PageMismatch);
  CHECK_THROWS_AS(act(p, one, one), PageMismatch);
  PageElement wrong{SpectrumTag::EndM, 3, parse("alpha", p.e2_endm().alphabet)};
  CHECK_THROWS_AS(act(p, wrong, v1), PageMismatch);
}

TEST_CASE("property: d2 and d3 on M are compatible with the action") {
  const auto& p = small_pages();
  testing::Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto m = testing::random_polynomial(rng, p.e2_m().alphabet);
    auto e2 = testing::random_polynomial(rng, p.e2_endm().alphabet);
    PageElement E{SpectrumTag::EndM, 2, e2};
    PageElement M{SpectrumTag::M, 2, m};
    auto lhs = p.d2_m(act(p, E, M).value);
    auto rhs = act(p, {SpectrumTag::EndM, 2, apply_derivation(p.e2_endm(), e2)}, M).value +
               act(p, E, {SpectrumTag::M, 2, p.d2_m(m)}).value;
    REQUIRE(lhs == rhs);

    std::vector<Monomial> terms;
    for (int i = rng.uniform(0, 3); i > 0; --i) terms.push_back(random_e3_monomial(rng, *p.e3_endm().alphabet));
    auto e3 = Polynomial::from_terms(p.e3_endm().alphabet, std::move(terms));
    PageElement E3{SpectrumTag::EndM, 3, e3};
    PageElement M3{SpectrumTag::M, 3, m};
    auto lhs3 = p.d3_m(act(p, E3, M3).value);
    auto rhs3 = act(p, {SpectrumTag::EndM, 3, apply_derivation(p.e3_endm(), e3)}, M3).value +
                act(p, E3, {SpectrumTag::M, 3, p.d3_m(m)}).value;
    REQUIRE(lhs3 == rhs3);
  }
}

TEST_CASE("property: d3 on M raises w by one") {
  const auto& p = small_pages();
  const auto& c = p.e3_m_complex();
  std::size_t checked = 0;
  for (const auto& d : c.degrees)
    for (const auto& b : c.basis(d)) {
      auto img = c.differential(b);
      for (const auto& t : img.terms()) {
        REQUIRE(p.w_grading(t) == p.w_grading(b) + 1);
        ++checked;
      }
    }
  CHECK(checked > 0);
}

TEST_CASE("pages: worked dimensions") {
  const auto& p = small_pages();
  auto e2 = build_page(p, SpectrumTag::EndM, 2);
  CHECK(e2.at({0, -1, 0}).basis_dim == 1);
  auto e3 = build_page(p, SpectrumTag::EndM, 3);
  CHECK(e3.at({2, 3, 0}).homology_dim == 0);
  CHECK(e3.at({1, 3, 1}).homology_dim == 1);
  CHECK(e3.at({0, 0, 0}).homology_dim == 1);
  auto m4 = build_page(p, SpectrumTag::M, 4);
  CHECK(m4.at({3, 6, 0}).homology_dim == 0);
  CHECK(m4.at({1, 2, 0}).homology_dim == 1);
  CHECK_THROWS_AS(build_page(p, SpectrumTag::S, 3), UnsupportedPage);
  CHECK_THROWS_AS(build_page(p, SpectrumTag::M, 5), UnsupportedPage);
}

TEST_CASE("property: squares of the page differentials vanish") {
  const auto& p = small_pages();
  for (const auto* c : {&p.e2_endm_complex(), &p.e2_m_complex(), &p.e3_endm_complex(), &p.e3_m_complex(),
                        &p.e2_s_complex()}) {
    auto r = verify_d_squared(*c, ExecPolicy{2});
    CHECK_MESSAGE(r.ok, c->name);
    CHECK(r.checked_degrees > 0);
  }
}

TEST_CASE("pattern placement") {
  PatternSpec bo{PatternKind::Bo, {0, 0}};
  CHECK(pattern_dims(bo, {0, 0}) == 1);
  CHECK(pattern_dims(bo, {1, 2}) == 1);
  CHECK(pattern_dims(bo, {2, 4}) == 1);
  CHECK(pattern_dims(bo, {3, 6}) == 0);
  CHECK(pattern_dims(bo, {1, 3}) == 1);
  CHECK(pattern_dims(bo, {2, 6}) == 0);
  CHECK(pattern_dims(bo, {4, 12}) == 1);
  PatternSpec bu{PatternKind::Bu, {6, 27}};
  CHECK(pattern_dims(bu, {6, 27}) == 1);
  CHECK(pattern_dims(bu, {8, 33}) == 1);
  CHECK(pattern_dims(bu, {8, 32}) == 0);
  // oracle: enumerate v1^m h11^a directly
  for (int s = -4; s <= 10; ++s)
    for (int t = -12; t <= 30; ++t) {
      std::size_t n = 0;
      for (int m = -20; m <= 20; ++m)
        for (int a = 0; a <= 2; ++a)
          if (((m % 4) + 4) % 4 <= 1 && m + a == s && 3 * m + 2 * a == t) ++n;
      REQUIRE(pattern_dims(bo, {s, t}) == n);
    }
}
