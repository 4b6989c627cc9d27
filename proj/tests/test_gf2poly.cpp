#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "v1ss/error.hpp"
#include "v1ss/gf2poly.hpp"

using namespace v1ss;
using namespace v1ss::testing;

TEST_CASE("alphabet sorts into canonical order") {
  auto a = make_alphabet({{"x(2)", {1, 16, 1}},
                          {"h(2,1)", {1, 6, 0}},
                          {"alpha", {0, -1, 0}, false, true},
                          {"v1", {0, 2, 1}, true},
                          {"h(1,1)", {1, 2, 0}},
                          {"x(1)", {1, 8, 1}}});
  std::vector<std::string> names;
  for (const auto& g : a->generators()) names.push_back(g.name);
  CHECK(names == std::vector<std::string>{"v1", "alpha", "h(1,1)", "h(2,1)", "x(1)", "x(2)"});
  CHECK(a->invertible() == std::size_t{0});
  CHECK_THROWS_AS(a->index_of("h(9,1)"), UnknownGenerator);
  CHECK_THROWS_AS(make_alphabet({{"a", {1, 1, 0}}, {"a", {1, 2, 0}}}), Error);
  CHECK_THROWS_AS(make_alphabet({{"v", {1, 1, 0}, true}}), Error);
}

TEST_CASE("parse and format") {
  auto a = small_e2_alphabet();
  auto p = parse("v1^-1 * alpha*h(1,1)^2 + h(2,1)", a);
  CHECK(format(p) == "v1^-1*alpha*h(1,1)^2+h(2,1)");
  CHECK(format(parse("0", a)) == "0");
  CHECK(format(parse("1", a)) == "1");
  CHECK(format(parse("h(1,1) + h(1,1)", a)) == "0");
  CHECK(parse("alpha^2", a).is_zero());
  CHECK(parse("1*h(1,1)", a) == parse("h(1,1)", a));

  try {
    parse("h(1,1) + + v1", a);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
  CHECK_THROWS_AS(parse("h(7,1)", a), UnknownGenerator);
  CHECK_THROWS_AS(parse("h(1,1)^", a), ParseError);
  CHECK_THROWS_AS(parse("", a), ParseError);
}

TEST_CASE("round trip format -> parse on random polynomials") {
  auto a = small_e2_alphabet();
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    auto p = random_polynomial(rng, a);
    CHECK(parse(format(p), a) == p);
  }
}

TEST_CASE("ring axioms hold on random input") {
  auto a = small_e2_alphabet();
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    auto p = random_polynomial(rng, a), q = random_polynomial(rng, a), r = random_polynomial(rng, a);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + p).is_zero());
    CHECK(p * Polynomial::one(a) == p);
  }
}

TEST_CASE("monomial helpers") {
  auto a = small_e2_alphabet();
  auto v = a->index_of("v1"), h = a->index_of("h(1,1)");
  auto m = Monomial::from_factors({{static_cast<std::uint32_t>(h), 2}, {static_cast<std::uint32_t>(v), -3},
                                   {static_cast<std::uint32_t>(h), 1}});
  CHECK(m.exponent(h) == 3);
  CHECK(m.exponent(v) == -3);
  CHECK(multidegree(*a, m) == Multidegree{3, 0, -3});
  CHECK(divides(Monomial::single(h, 2), m));
  CHECK_FALSE(divides(Monomial::single(h, 4), m));
  CHECK(m.with_exponent(v, 0) == Monomial::single(h, 3));
  CHECK_THROWS_AS(multiply(Monomial::single(h, INT32_MAX), Monomial::single(h, 1)), OverflowError);
  CHECK_THROWS_AS(is_nonzero_in(*a, Monomial::single(h, -1)), InvalidMonomial);
}

TEST_CASE("mixing alphabets is rejected") {
  auto a = small_e2_alphabet(), b = small_e2_alphabet(2);
  CHECK_THROWS_AS(parse("v1", a) + parse("v1", b), AlphabetMismatch);
  CHECK_THROWS_AS(parse("v1", a) * parse("v1", b), AlphabetMismatch);
}

namespace {

// Box search over exponent vectors; the oracle for the basis enumerator.
std::set<Monomial> brute_basis(const Alphabet& a, const Multidegree& d, int v_lo, int v_hi, int e_max) {
  std::set<Monomial> out;
  std::vector<int> e(a.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == a.size()) {
      std::vector<Monomial::Factor> f;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) f.emplace_back(static_cast<std::uint32_t>(i), e[i]);
      auto m = Monomial::from_factors(f);
      if (is_nonzero_in(a, m) && multidegree(a, m) == d) out.insert(m);
      return;
    }
    int lo = a[g].invertible ? v_lo : 0;
    int hi = a[g].invertible ? v_hi : a[g].nilpotent_square ? 1 : e_max;
    for (int x = lo; x <= hi; ++x) {
      e[g] = x;
      rec(g + 1);
    }
    e[g] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("basis enumerator agrees with brute force") {
  auto a = small_e2_alphabet(3);
  TruncationWindow w;
  w.v1_exponents = {-6, 6};
  for (int s = 0; s <= 4; ++s)
    for (int t = -8; t <= 24; ++t)
      for (int u = -6; u <= 6; ++u) {
        Multidegree d{s, t, u};
        auto fast = enumerate_basis(*a, w, d);
        CHECK(std::is_sorted(fast.begin(), fast.end()));
        auto slow = brute_basis(*a, d, -6, 6, 5);
        CHECK(std::set<Monomial>(fast.begin(), fast.end()) == slow);
      }
}

TEST_CASE("unbounded enumeration fixes the v1 exponent by u") {
  auto a = small_e2_alphabet(3);
  auto basis = enumerate_basis_unbounded(*a, {2, 40, 12});
  for (const auto& m : basis) CHECK(m.exponent(0) == 12);
  CHECK_FALSE(basis.empty());
  TruncationWindow w;
  w.v1_exponents = {1, 0};
  CHECK_THROWS_AS(enumerate_basis(*a, w, {0, 0, 0}), InvalidWindow);
}

TEST_CASE("reduced weight kills v1") {
  auto a = small_e2_alphabet();
  CHECK(reduced_weight(*a, {0, 2, 1}) == 0);
  CHECK(reduced_weight(*a, {1, 2, 0}) == 2);
  CHECK(reduced_weight(*a, {0, -1, 0}) == -1);
  CHECK(reduced_weight(*polynomial_alphabet(), {0, 5, 0}) == 5);
}
