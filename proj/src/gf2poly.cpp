#include "v1ss/gf2poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <tuple>

#include "v1ss/error.hpp"

namespace v1ss {

std::string to_string(const Multidegree& d) {
  return "(" + std::to_string(d.s) + "," + std::to_string(d.t) + "," + std::to_string(d.u) + ")";
}

void TruncationWindow::validate() const {
  if (v1_exponents.empty()) throw InvalidWindow("empty v1 exponent range");
  if (s.empty()) throw InvalidWindow("empty s range");
  if (t.empty()) throw InvalidWindow("empty t range");
  if (u.empty()) throw InvalidWindow("empty u range");
  if (trusted_margin < 0) throw InvalidWindow("negative trusted margin");
}

TruncationWindow TruncationWindow::standard(int t_max, int s_max, int v1_min, int v1_max) {
  TruncationWindow w;
  w.v1_exponents = {v1_min, v1_max};
  w.s = {0, s_max};
  w.t = {kUnboundedBelow, t_max};
  w.u = {v1_min, v1_max};
  w.validate();
  return w;
}

// ---------------------------------------------------------------- Alphabet

namespace {

using OrderKey = std::tuple<int, int, int>;

bool parse_two_ints(std::string_view body, int& a, int& b) {
  auto comma = body.find(',');
  if (comma == std::string_view::npos) return false;
  auto r1 = std::from_chars(body.data(), body.data() + comma, a);
  auto r2 = std::from_chars(body.data() + comma + 1, body.data() + body.size(), b);
  return r1.ec == std::errc{} && r1.ptr == body.data() + comma && r2.ec == std::errc{} &&
         r2.ptr == body.data() + body.size();
}

OrderKey order_key(const std::string& name, int position) {
  if (name == "v1") return {0, 0, 0};
  if (name == "alpha") return {1, 0, 0};
  if (name == "alphap") return {2, 0, 0};
  if (name.size() > 3 && name.starts_with("h(") && name.back() == ')') {
    int i = 0, j = 0;
    if (parse_two_ints(std::string_view(name).substr(2, name.size() - 3), i, j)) return {3, i, j};
  }
  if (name.size() > 3 && name.starts_with("x(") && name.back() == ')') {
    int n = 0;
    std::string_view body = std::string_view(name).substr(2, name.size() - 3);
    auto r = std::from_chars(body.data(), body.data() + body.size(), n);
    if (r.ec == std::errc{} && r.ptr == body.data() + body.size()) return {4, n, 0};
  }
  if (name == "xi1") return {5, 0, 0};
  return {6, position, 0};
}

}  // namespace

Alphabet::Alphabet(std::vector<Generator> generators) {
  std::vector<std::pair<OrderKey, Generator>> keyed;
  keyed.reserve(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i)
    keyed.emplace_back(order_key(generators[i].name, static_cast<int>(i)), std::move(generators[i]));
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::set<std::string> names;
  for (auto& [key, g] : keyed) {
    if (!names.insert(g.name).second) throw Error("duplicate generator '" + g.name + "'");
    if (g.invertible && g.nilpotent_square)
      throw Error("generator '" + g.name + "' cannot be both invertible and nilpotent");
    if (g.invertible) {
      if (invertible_) throw Error("at most one invertible generator is supported");
      if (g.degree.s != 0) throw Error("invertible generator must have filtration 0");
      invertible_ = generators_.size();
    }
    generators_.push_back(std::move(g));
  }
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Alphabet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownGenerator(std::string(name));
}

bool Alphabet::same_as(const Alphabet& other) const {
  if (this == &other) return true;
  if (generators_.size() != other.generators_.size()) return false;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& a = generators_[i];
    const auto& b = other.generators_[i];
    if (a.name != b.name || a.degree != b.degree || a.invertible != b.invertible ||
        a.nilpotent_square != b.nilpotent_square || a.index != b.index)
      return false;
  }
  return true;
}

AlphabetPtr make_alphabet(std::vector<Generator> generators) {
  return std::make_shared<const Alphabet>(std::move(generators));
}

// ---------------------------------------------------------------- Monomial

namespace {

int checked_add(int a, int b) {
  int r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow");
  return r;
}

int checked_mul(int a, int b) {
  int r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("degree overflow");
  return r;
}

}  // namespace

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [g, e] : factors) {
    if (!m.factors_.empty() && m.factors_.back().first == g)
      m.factors_.back().second = checked_add(m.factors_.back().second, e);
    else
      m.factors_.emplace_back(g, e);
  }
  std::erase_if(m.factors_, [](const Factor& f) { return f.second == 0; });
  return m;
}

Monomial Monomial::single(std::size_t generator, int exponent) {
  return from_factors({{static_cast<std::uint32_t>(generator), exponent}});
}

int Monomial::exponent(std::size_t generator) const {
  for (const auto& [g, e] : factors_)
    if (g == generator) return e;
  return 0;
}

Monomial Monomial::with_exponent(std::size_t generator, int exponent) const {
  Monomial m = *this;
  std::erase_if(m.factors_, [&](const Factor& f) { return f.first == generator; });
  if (exponent != 0) {
    auto pos = std::lower_bound(m.factors_.begin(), m.factors_.end(), generator,
                                [](const Factor& f, std::size_t g) { return f.first < g; });
    m.factors_.insert(pos, {static_cast<std::uint32_t>(generator), exponent});
  }
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  constexpr std::uint32_t kEnd = UINT32_MAX;
  std::size_t i = 0, j = 0;
  while (true) {
    std::uint32_t ga = i < a.factors_.size() ? a.factors_[i].first : kEnd;
    std::uint32_t gb = j < b.factors_.size() ? b.factors_[j].first : kEnd;
    if (ga == kEnd && gb == kEnd) return std::strong_ordering::equal;
    if (ga == gb) {
      if (auto c = a.factors_[i].second <=> b.factors_[j].second; c != 0) return c;
      ++i;
      ++j;
    } else if (ga < gb) {
      return a.factors_[i].second <=> 0;
    } else {
      return 0 <=> b.factors_[j].second;
    }
  }
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> f(a.factors().begin(), a.factors().end());
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return Monomial::from_factors(std::move(f));
}

bool divides(const Monomial& a, const Monomial& b) {
  for (const auto& [g, e] : a.factors()) {
    if (e <= 0) continue;
    if (b.exponent(g) < e) return false;
  }
  return true;
}

Multidegree multidegree(const Alphabet& alphabet, const Monomial& m) {
  Multidegree d;
  for (const auto& [g, e] : m.factors()) {
    if (g >= alphabet.size()) throw InvalidMonomial("generator index out of range");
    const auto& gd = alphabet[g].degree;
    d.s = checked_add(d.s, checked_mul(e, gd.s));
    d.t = checked_add(d.t, checked_mul(e, gd.t));
    d.u = checked_add(d.u, checked_mul(e, gd.u));
  }
  return d;
}

bool is_nonzero_in(const Alphabet& alphabet, const Monomial& m) {
  for (const auto& [g, e] : m.factors()) {
    if (g >= alphabet.size()) throw InvalidMonomial("generator index out of range");
    const auto& gen = alphabet[g];
    if (e < 0 && !gen.invertible)
      throw InvalidMonomial("negative exponent of non-invertible generator " + gen.name);
    if (gen.nilpotent_square && e >= 2) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

Polynomial::Polynomial(AlphabetPtr alphabet, Monomial m) : alphabet_(std::move(alphabet)) {
  if (is_nonzero_in(*alphabet_, m)) terms_.push_back(std::move(m));
}

Polynomial Polynomial::from_terms(AlphabetPtr alphabet, std::vector<Monomial> terms) {
  Polynomial p(std::move(alphabet));
  std::erase_if(terms, [&](const Monomial& m) { return !is_nonzero_in(*p.alphabet_, m); });
  std::sort(terms.begin(), terms.end());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) p.terms_.push_back(std::move(terms[i]));
    i = j;
  }
  return p;
}

bool Polynomial::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m);
}

namespace {

void require_same(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b)) throw AlphabetMismatch();
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same(alphabet_, other.alphabet_);
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(merged));
  terms_ = std::move(merged);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a.alphabet_, b.alphabet_);
  std::vector<Monomial> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) products.push_back(multiply(x, y));
  return Polynomial::from_terms(a.alphabet_, std::move(products));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.alphabet_ != b.alphabet_ && !(a.alphabet_ && b.alphabet_ && a.alphabet_->same_as(*b.alphabet_)))
    return false;
  return a.terms_ == b.terms_;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

std::optional<Multidegree> homogeneous_degree(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  Multidegree d = multidegree(*p.alphabet(), p.terms()[0]);
  for (const auto& m : p.terms().subspan(1))
    if (multidegree(*p.alphabet(), m) != d) return std::nullopt;
  return d;
}

bool is_homogeneous(const Polynomial& p) { return p.is_zero() || homogeneous_degree(p).has_value(); }

// ---------------------------------------------------------------- enumeration

int reduced_weight(const Alphabet& alphabet, const Multidegree& d) {
  auto inv = alphabet.invertible();
  if (!inv) return d.t;
  const auto& vd = alphabet[*inv].degree;
  if (vd.u != 0) {
    int sign = vd.u > 0 ? 1 : -1;
    return sign * (checked_mul(d.t, vd.u) - checked_mul(d.u, vd.t));
  }
  return d.u;
}

namespace {

struct Enumerator {
  const Alphabet& alphabet;
  std::optional<IntRange> v1_range;
  std::vector<std::size_t> positive;
  std::vector<int> positive_weight;
  std::vector<Monomial::Factor> current;
  std::vector<Monomial> out;

  void leaf(const Multidegree& rem) {
    auto inv = alphabet.invertible();
    if (!inv) {
      if (rem == Multidegree{}) out.push_back(Monomial::from_factors(current));
      return;
    }
    const auto& vd = alphabet[*inv].degree;
    if (rem.s != 0) return;
    int k = 0;
    if (vd.u != 0) {
      if (rem.u % vd.u != 0) return;
      k = rem.u / vd.u;
      if (rem.t != k * vd.t) return;
    } else {
      if (vd.t == 0 || rem.t % vd.t != 0 || rem.u != 0) return;
      k = rem.t / vd.t;
    }
    if (v1_range && !v1_range->contains(k)) return;
    auto factors = current;
    if (k != 0) factors.emplace_back(static_cast<std::uint32_t>(*inv), k);
    out.push_back(Monomial::from_factors(std::move(factors)));
  }

  void descend(std::size_t k, const Multidegree& rem) {
    if (rem.s < 0 || reduced_weight(alphabet, rem) < 0) return;
    if (k == positive.size()) {
      leaf(rem);
      return;
    }
    const auto g = positive[k];
    const auto& gd = alphabet[g].degree;
    Multidegree r = rem;
    for (int e = 0;; ++e) {
      if (r.s < 0 || reduced_weight(alphabet, r) < 0) break;
      if (e > 0) current.emplace_back(static_cast<std::uint32_t>(g), e);
      descend(k + 1, r);
      if (e > 0) current.pop_back();
      r -= gd;
    }
  }
};

std::vector<Monomial> enumerate_impl(const Alphabet& alphabet, const Multidegree& d,
                                     int max_generator_index, std::optional<IntRange> v1_range) {
  Enumerator en{alphabet, v1_range, {}, {}, {}, {}};
  std::vector<std::size_t> nilpotent;
  for (std::size_t g = 0; g < alphabet.size(); ++g) {
    const auto& gen = alphabet[g];
    if (gen.invertible) continue;
    if (gen.index > max_generator_index) continue;
    if (gen.nilpotent_square) {
      nilpotent.push_back(g);
      continue;
    }
    int w = reduced_weight(alphabet, gen.degree);
    if (gen.degree.s < 0 || w < 0 || (gen.degree.s == 0 && w == 0))
      throw InvalidWindow("generator '" + gen.name + "' makes degree slices infinite");
    en.positive.push_back(g);
    en.positive_weight.push_back(w);
  }
  if (nilpotent.size() > 20) throw InvalidWindow("too many nilpotent generators");
  for (std::uint32_t mask = 0; mask < (1u << nilpotent.size()); ++mask) {
    Multidegree rem = d;
    en.current.clear();
    for (std::size_t i = 0; i < nilpotent.size(); ++i) {
      if (mask & (1u << i)) {
        rem -= alphabet[nilpotent[i]].degree;
        en.current.emplace_back(static_cast<std::uint32_t>(nilpotent[i]), 1);
      }
    }
    en.descend(0, rem);
  }
  std::sort(en.out.begin(), en.out.end());
  return std::move(en.out);
}

}  // namespace

std::vector<Monomial> enumerate_basis(const Alphabet& alphabet, const TruncationWindow& window,
                                      const Multidegree& d) {
  if (window.v1_exponents.empty()) throw InvalidWindow("empty v1 exponent range");
  return enumerate_impl(alphabet, d, window.max_generator_index, window.v1_exponents);
}

std::vector<Monomial> enumerate_basis_unbounded(const Alphabet& alphabet, const Multidegree& d,
                                                int max_generator_index) {
  return enumerate_impl(alphabet, d, max_generator_index, std::nullopt);
}

// ---------------------------------------------------------------- text

std::string format(const Alphabet& alphabet, const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& [g, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += alphabet[g].name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& m : p.terms()) {
    if (!out.empty()) out += '+';
    out += format(*p.alphabet(), m);
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet) : alphabet_(alphabet) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
      chars_.push_back(c);
      pos_.push_back(i);
    }
    end_pos_ = text.size();
  }

  std::vector<Monomial> parse() {
    if (chars_.empty()) fail("empty input");
    if (chars_.size() == 1 && chars_[0] == '0') return {};
    std::vector<Monomial> terms;
    terms.push_back(term());
    while (peek() == '+') {
      ++i_;
      terms.push_back(term());
    }
    if (i_ != chars_.size()) fail(std::string("unexpected '") + chars_[i_] + "'");
    return terms;
  }

 private:
  char peek() const { return i_ < chars_.size() ? chars_[i_] : '\0'; }
  std::size_t position() const { return i_ < pos_.size() ? pos_[i_] : end_pos_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, position()); }

  Monomial term() {
    std::vector<Monomial::Factor> factors;
    factor(factors);
    while (peek() == '*') {
      ++i_;
      factor(factors);
    }
    return Monomial::from_factors(std::move(factors));
  }

  void factor(std::vector<Monomial::Factor>& factors) {
    if (peek() == '1' && (i_ + 1 == chars_.size() || chars_[i_ + 1] == '*' || chars_[i_ + 1] == '+')) {
      ++i_;
      return;
    }
    std::size_t start = i_;
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(peek()))) name += chars_[i_++];
    if (name.empty()) fail("expected generator");
    if (peek() == '(') {
      while (i_ < chars_.size() && chars_[i_] != ')') name += chars_[i_++];
      if (peek() != ')') fail("unterminated '('");
      name += chars_[i_++];
    }
    auto g = alphabet_.find(name);
    if (!g) {
      i_ = start;
      throw UnknownGenerator(name);
    }
    int e = 1;
    if (peek() == '^') {
      ++i_;
      e = integer();
    }
    factors.emplace_back(static_cast<std::uint32_t>(*g), e);
  }

  int integer() {
    std::string digits;
    if (peek() == '-') digits += chars_[i_++];
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += chars_[i_++];
    int v = 0;
    auto r = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (r.ec != std::errc{} || r.ptr != digits.data() + digits.size()) fail("expected integer exponent");
    return v;
  }

  const Alphabet& alphabet_;
  std::vector<char> chars_;
  std::vector<std::size_t> pos_;
  std::size_t end_pos_ = 0;
  std::size_t i_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text, AlphabetPtr alphabet) {
  Parser parser(text, *alphabet);
  auto terms = parser.parse();
  return Polynomial::from_terms(std::move(alphabet), std::move(terms));
}

}  // namespace v1ss
