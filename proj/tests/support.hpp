#pragma once

// Shared fixtures and hand-rolled random generators for the property tests.

#include <random>
#include <string>
#include <vector>

#include "v1ss/gf2poly.hpp"

namespace v1ss::testing {

inline AlphabetPtr small_e2_alphabet(int families = 3) {
  std::vector<Generator> gens{
      {"v1", {0, 2, 1}, true, false, 0},
      {"alpha", {0, -1, 0}, false, true, 0},
  };
  for (int n = 1; n <= families; ++n)
    gens.push_back({"h(" + std::to_string(n) + ",1)", {1, (1 << (n + 1)) - 2, 0}, false, false, n});
  return make_alphabet(std::move(gens));
}

inline AlphabetPtr polynomial_alphabet() {
  return make_alphabet({{"a", {1, 1, 0}}, {"b", {1, 2, 0}}, {"c", {2, 3, 0}}});
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
  bool coin() { return uniform(0, 1) == 1; }
};

inline Monomial random_monomial(Rng& rng, const Alphabet& alphabet, int max_exp = 3) {
  std::vector<Monomial::Factor> f;
  for (std::size_t g = 0; g < alphabet.size(); ++g) {
    const auto& gen = alphabet[g];
    int e = gen.invertible ? rng.uniform(-max_exp, max_exp)
            : gen.nilpotent_square ? rng.uniform(0, 1)
                                   : rng.uniform(0, max_exp);
    if (e) f.emplace_back(static_cast<std::uint32_t>(g), e);
  }
  return Monomial::from_factors(std::move(f));
}

inline Polynomial random_polynomial(Rng& rng, const AlphabetPtr& alphabet, int max_terms = 4) {
  std::vector<Monomial> terms;
  int n = rng.uniform(0, max_terms);
  for (int i = 0; i < n; ++i) terms.push_back(random_monomial(rng, *alphabet));
  return Polynomial::from_terms(alphabet, std::move(terms));
}

}  // namespace v1ss::testing
