#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "v1ss/error.hpp"
#include "v1ss/gf2linalg.hpp"

using namespace v1ss;
using namespace v1ss::testing;

namespace {

GF2Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  GF2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.uniform(0, 2) == 0) m.set(r, c);
  return m;
}

// Size of the image by enumerating all inputs.
std::size_t image_size(const GF2Matrix& m) {
  std::set<BitVector> seen;
  for (std::uint32_t x = 0; x < (1u << m.cols()); ++x) {
    BitVector v(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i)
      if (x >> i & 1) v.set(i);
    seen.insert(m.apply(v));
  }
  return seen.size();
}

}  // namespace

TEST_CASE("bit vector basics") {
  BitVector v(130);
  v.set(3);
  v.set(129);
  CHECK(v.get(3));
  CHECK(v.ones() == std::vector<std::size_t>{3, 129});
  CHECK(v.leading() == std::size_t{3});
  v.flip(3);
  CHECK(v.leading() == std::size_t{129});
  auto w = v;
  w ^= v;
  CHECK(w.is_zero());
}

TEST_CASE("rank matches brute-force image size") {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    auto m = random_matrix(rng, rng.uniform(0, 7), rng.uniform(0, 9));
    CHECK((std::size_t{1} << rank(m)) == image_size(m));
  }
}

TEST_CASE("rank-nullity and kernel vectors") {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    auto m = random_matrix(rng, rng.uniform(0, 12), rng.uniform(0, 70));
    auto k = kernel_basis(m);
    CHECK(k.dim() + rank(m) == m.cols());
    for (const auto& v : k.basis()) CHECK(m.apply(v).is_zero());
    CHECK(rank(m) == rank(m.transposed()));
    CHECK(column_space(m).dim() == rank(m));
  }
}

TEST_CASE("echelon basis is independent of the spanning set") {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    auto m = random_matrix(rng, 6, 10);
    std::vector<BitVector> a, b;
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(m.row(r));
    b = a;
    std::shuffle(b.begin(), b.end(), rng.engine);
    b.push_back(a[0]);
    if (a.size() > 1) {
      auto sum = a[0];
      sum ^= a[1];
      b.push_back(sum);
    }
    CHECK(Subspace::span(10, a) == Subspace::span(10, b));
    auto rr = row_reduce(m);
    CHECK(row_reduce(rr.reduced).reduced == rr.reduced);
  }
}

TEST_CASE("subquotients") {
  Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    // A complex C -> D -> E with d2 d1 = 0: d1 = random, d2 kills its image.
    auto d1 = random_matrix(rng, 8, 5);
    auto image = column_space(d1);
    std::vector<BitVector> rows;
    // rows of d2 are functionals vanishing on im d1, i.e. the kernel of d1^T.
    auto annihilator = kernel_basis(d1.transposed());
    for (const auto& v : annihilator.basis()) rows.push_back(v);
    GF2Matrix d2(rows.size(), 8);
    for (std::size_t r = 0; r < rows.size(); ++r) d2.row(r) = rows[r];
    auto cycles = kernel_basis(d2);
    auto reps = subquotient_basis(cycles, image);
    CHECK(reps.size() == cycles.dim() - image.dim());
    CHECK(reps.empty());  // exact at D by construction
  }
  auto z = Subspace::span(3, std::vector<BitVector>{BitVector(3)});
  CHECK(z.dim() == 0);
  BitVector e0(3);
  e0.set(0);
  BitVector e1(3);
  e1.set(1);
  auto cycles = Subspace::span(3, std::vector<BitVector>{e0});
  auto bad = Subspace::span(3, std::vector<BitVector>{e1});
  CHECK_THROWS_AS(subquotient_basis(cycles, bad), NotASubspace);
  auto reps = subquotient_basis(Subspace::full(3), cycles);
  CHECK(reps.size() == 2);
}
