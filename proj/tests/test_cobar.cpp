#include "doctest.h"
#include "v1ss/cobar.hpp"
#include "v1ss/error.hpp"

using namespace v1ss;

namespace {

std::size_t polynomial_on_h10_h11(int s, int t) {
  std::size_t n = 0;
  for (int b = 0; b <= s; ++b)
    if ((s - b) + 2 * b == t) ++n;
  return n;
}

std::string coaction_string(const Comodule& com, std::string_view label) {
  std::string out;
  for (const auto& term : com.coact(label)) {
    if (!out.empty()) out += " + ";
    out += term.xi_power == 0 ? std::string("1") : "xi1^" + std::to_string(term.xi_power);
    out += "@" + com.cell(term.cell).label;
  }
  return out;
}

}  // namespace

TEST_CASE("quotient coalgebra") {
  QuotientCoalgebra c;
  CHECK(c.reduced_diagonal(1).empty());
  CHECK(c.reduced_diagonal(2).empty());
  CHECK(c.reduced_diagonal(3) == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});
  CHECK(c.coassociative());
  CHECK_FALSE(c.product(2, 2));
  CHECK(c.product(1, 2) == 3);
}

TEST_CASE("comodule structure of the endomorphism cells") {
  auto end = Comodule::endomorphisms();
  CHECK(coaction_string(end, "gamma") == "1@gamma + xi1^1@1 + xi1^2@alpha");
  CHECK(coaction_string(end, "alpha") == "1@alpha");
  CHECK(coaction_string(end, "alphagamma") == "1@alphagamma + xi1^1@alpha");
  CHECK(coaction_string(Comodule::moore(), "x1") == "1@x1 + xi1^1@x0");
  CHECK_THROWS_AS(end.coact("beta"), UnknownLabel);

  auto a = end.index_of("alpha"), g = end.index_of("gamma"), one = end.index_of("1"),
       ag = end.index_of("alphagamma");
  CHECK(end.multiply(a, a).empty());
  CHECK(end.multiply(g, g).empty());
  CHECK(end.multiply(a, g) == std::vector<std::size_t>{ag});
  // gamma alpha = 1 + alpha gamma
  auto ga = end.multiply(g, a);
  CHECK(ga == std::vector<std::size_t>{std::min(one, ag), std::max(one, ag)});
  for (std::size_t i = 0; i < end.size(); ++i) {
    CHECK(end.multiply(one, i) == std::vector<std::size_t>{i});
    CHECK(end.multiply(i, one) == std::vector<std::size_t>{i});
  }

  for (const auto& com : {Comodule::trivial(), Comodule::moore(), Comodule::dual_moore(), end}) {
    CHECK(com.counital());
    CHECK(com.coassociative());
    CHECK(com.multiplicative());
    CHECK(com.graded());
  }
}

TEST_CASE("broken comodules are detected") {
  Comodule bad("bad", {{"a", 0}, {"c", 3}}, {{{0, 0}}, {{0, 1}, {3, 0}}});
  CHECK_FALSE(bad.coassociative());
  CHECK(bad.graded());
  Comodule ungraded("ungraded", {{"a", 0}, {"c", 1}}, {{{0, 0}}, {{0, 1}, {2, 0}}});
  CHECK_FALSE(ungraded.graded());
}

TEST_CASE("cobar differential examples") {
  auto end = Comodule::endomorphisms();
  auto m = Comodule::moore();
  CHECK(format(end, cobar_differential(end, parse_cochain(end, "gamma"))) == "xi1|1+xi1^2|alpha");
  CHECK(format(m, cobar_differential(m, parse_cochain(m, "x1"))) == "xi1|x0");
  CHECK(cobar_differential(m, parse_cochain(m, "xi1|x0")).is_zero());
  auto f = Comodule::trivial();
  CHECK(format(f, cobar_differential(f, parse_cochain(f, "xi1^3|1"))) == "xi1|xi1^2|1+xi1^2|xi1|1");
}

TEST_CASE("cochain parsing") {
  auto end = Comodule::endomorphisms();
  auto c = parse_cochain(end, " xi1^2 | alpha + xi1|1 ");
  CHECK(c.s == 1);
  CHECK(format(end, c) == "xi1|1+xi1^2|alpha");
  CHECK(parse_cochain(end, format(end, c)) == c);
  CHECK(parse_cochain(end, "xi1|1+xi1|1").is_zero());
  CHECK_THROWS_AS(parse_cochain(end, "xi1|beta"), UnknownLabel);
  CHECK_THROWS_AS(parse_cochain(end, "xi1^4|1"), ParseError);
  CHECK_THROWS_AS(parse_cochain(end, "xi1|1+alpha"), ParseError);
  CHECK_THROWS_AS(parse_cochain(end, "xi2|1"), ParseError);
}

TEST_CASE("d squared vanishes on every basis cochain") {
  for (const auto& com : {Comodule::trivial(), Comodule::moore(), Comodule::endomorphisms()})
    for (int s = 0; s <= 5; ++s)
      for (int t = -1; t <= 3 * s + 1; ++t)
        for (const auto& x : cobar_basis(com, s, t)) {
          auto dx = cobar_differential(com, CobarCochain::from_terms(s, {x}));
          CHECK(cobar_differential(com, dx).is_zero());
          CHECK((dx.is_zero() || homogeneous_degree(com, dx) == t));
        }
}

TEST_CASE("Ext dimensions match the closed forms") {
  const IntRange t{-1, 16};
  auto f = ext_dimensions(Comodule::trivial(), 6, {0, 12}, ExecPolicy{2});
  for (const auto& r : f.rows) CHECK(r.dim == polynomial_on_h10_h11(r.s, r.t));
  CHECK(f.lookup(2, 3) == 1u);

  auto end = ext_dimensions(Comodule::endomorphisms(), 8, t, ExecPolicy{2});
  for (const auto& r : end.rows)
    CHECK(r.dim == std::size_t(r.t == 2 * r.s) + std::size_t(r.t == 2 * r.s - 1));
  CHECK(end.lookup(1, 2) == 1u);

  auto m = ext_dimensions(Comodule::moore(), 8, t);
  for (const auto& r : m.rows) CHECK(r.dim == std::size_t(r.t == 2 * r.s));
  CHECK(m.lookup(1, 1) == 0u);

  CHECK(ext_dimensions_serial(Comodule::endomorphisms(), 8, t) == end);
}

TEST_CASE("class identity verdicts") {
  auto end = Comodule::endomorphisms();
  auto m = Comodule::moore();
  CHECK(class_identity_check(end, parse_cochain(end, "xi1|1+xi1^2|alpha")) == ClassVerdict::ZeroInCohomology);
  CHECK(class_identity_check(m, parse_cochain(m, "xi1^2|x0")) == ClassVerdict::Nonzero);
  CHECK(class_identity_check(m, parse_cochain(m, "xi1|x0")) == ClassVerdict::ZeroInCohomology);
  CHECK(class_identity_check(end, parse_cochain(end, "xi1^2|alpha")) == ClassVerdict::Nonzero);
  CHECK(class_identity_check(end, parse_cochain(end, "xi1^3|alpha")) == ClassVerdict::NotACycle);
  CHECK(class_identity_check(end, parse_cochain(end, "gamma")) == ClassVerdict::NotACycle);
  CHECK_THROWS_AS(class_identity_check(end, parse_cochain(end, "xi1|1+xi1|alpha")), HomogeneityError);
  CHECK(to_string(ClassVerdict::ZeroInCohomology) == "zero-in-cohomology");
}
