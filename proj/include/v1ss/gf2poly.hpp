#pragma once

// Multigraded polynomials over GF(2) in a declared alphabet of generators.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "v1ss/window.hpp"

namespace v1ss {

struct Generator {
  std::string name;
  Multidegree degree;
  bool invertible = false;
  bool nilpotent_square = false;
  /// Family index (n for h(n,1) and x(n)); 0 for the sporadic generators.
  int index = 0;
};

/// Ordered set of generators. Construction sorts into canonical order:
/// v1 < alpha < alphap < h(i,j) by (i,j) < x(n) < xi1 < anything else.
class Alphabet {
 public:
  explicit Alphabet(std::vector<Generator> generators);

  std::size_t size() const { return generators_.size(); }
  const Generator& operator[](std::size_t i) const { return generators_[i]; }
  std::span<const Generator> generators() const { return generators_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownGenerator.
  std::size_t index_of(std::string_view name) const;
  std::optional<std::size_t> invertible() const { return invertible_; }

  bool same_as(const Alphabet& other) const;

 private:
  std::vector<Generator> generators_;
  std::optional<std::size_t> invertible_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<Generator> generators);

/// Sparse exponent vector; zero exponents are never stored and factors are
/// sorted by generator index.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, int>;

  Monomial() = default;

  /// Merges repeated generators and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);
  static Monomial single(std::size_t generator, int exponent = 1);

  int exponent(std::size_t generator) const;
  std::span<const Factor> factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  std::size_t total_factors() const { return factors_.size(); }

  /// Copy with one exponent replaced (zero removes the factor).
  Monomial with_exponent(std::size_t generator, int exponent) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic on dense exponent vectors.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
};

/// Overflow-checked product of monomials (no alphabet relations applied).
Monomial multiply(const Monomial& a, const Monomial& b);
/// True if b = a * c for some monomial c with non-negative exponents.
bool divides(const Monomial& a, const Monomial& b);

Multidegree multidegree(const Alphabet& alphabet, const Monomial& m);

/// False when the monomial is zero in the alphabet (a nilpotent generator
/// squared); throws InvalidMonomial for negative exponents of
/// non-invertible generators.
bool is_nonzero_in(const Alphabet& alphabet, const Monomial& m);

/// Finite set of monomials, each with coefficient 1.
class Polynomial {
 public:
  explicit Polynomial(AlphabetPtr alphabet);
  Polynomial(AlphabetPtr alphabet, Monomial m);

  /// Cancels repeated monomials in pairs and drops monomials that vanish by
  /// a nilpotence relation.
  static Polynomial from_terms(AlphabetPtr alphabet, std::vector<Monomial> terms);
  static Polynomial one(AlphabetPtr alphabet) { return {std::move(alphabet), Monomial{}}; }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::span<const Monomial> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool contains(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<Monomial> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// Common multidegree of all terms; nullopt for zero or inhomogeneous input.
std::optional<Multidegree> homogeneous_degree(const Polynomial& p);
bool is_homogeneous(const Polynomial& p);

/// Monomials of multidegree d inside the window (v1 exponent within
/// window.v1_exponents, family index <= window.max_generator_index), in
/// canonical order. Throws InvalidWindow on an empty v1 range.
std::vector<Monomial> enumerate_basis(const Alphabet& alphabet, const TruncationWindow& window,
                                      const Multidegree& d);

/// As above but ignoring the v1 exponent range; the result is still finite.
std::vector<Monomial> enumerate_basis_unbounded(const Alphabet& alphabet, const Multidegree& d,
                                                int max_generator_index = kUnboundedAbove);

/// The grading t*b - u*a killing the invertible generator of degree (0,a,b);
/// plain t when the alphabet has no invertible generator.
int reduced_weight(const Alphabet& alphabet, const Multidegree& d);

std::string format(const Alphabet& alphabet, const Monomial& m);
std::string format(const Polynomial& p);

/// Grammar: poly := "0" | term ("+" term)*; term := "1" | factor ("*" factor)*;
/// factor := gen ("^" int)?. Whitespace is ignored.
Polynomial parse(std::string_view text, AlphabetPtr alphabet);

}  // namespace v1ss
