#pragma once

#include <climits>
#include <compare>
#include <string>

namespace v1ss {

/// Trigrading (s, t, u): filtration, internal degree, v1-weight.
struct Multidegree {
  int s = 0;
  int t = 0;
  int u = 0;

  friend constexpr auto operator<=>(const Multidegree&, const Multidegree&) = default;

  constexpr Multidegree& operator+=(const Multidegree& o) {
    s += o.s;
    t += o.t;
    u += o.u;
    return *this;
  }
  constexpr Multidegree& operator-=(const Multidegree& o) {
    s -= o.s;
    t -= o.t;
    u -= o.u;
    return *this;
  }
  friend constexpr Multidegree operator+(Multidegree a, const Multidegree& b) { return a += b; }
  friend constexpr Multidegree operator-(Multidegree a, const Multidegree& b) { return a -= b; }
  friend constexpr Multidegree operator*(int k, const Multidegree& d) {
    return {k * d.s, k * d.t, k * d.u};
  }
};

std::string to_string(const Multidegree& d);

/// Closed integer interval; empty when min > max.
struct IntRange {
  int min = 0;
  int max = -1;

  constexpr bool empty() const { return min > max; }
  constexpr bool contains(int x) const { return min <= x && x <= max; }
  friend constexpr bool operator==(const IntRange&, const IntRange&) = default;
};

inline constexpr int kUnboundedBelow = INT_MIN / 8;
inline constexpr int kUnboundedAbove = INT_MAX / 8;

/// Finite slice of an infinitely generated algebra.
///
/// The s/t/u ranges select which degrees are reported; the generator cap and
/// the v1 exponent range decide where bases are exact. A degree is trusted for
/// a differential when the degree itself and its neighbours `trusted_margin`
/// shifts away on either side have exact bases.
struct TruncationWindow {
  int max_generator_index = kUnboundedAbove;
  IntRange v1_exponents{-16, 16};
  IntRange s{0, 12};
  IntRange t{kUnboundedBelow, 64};
  IntRange u{-16, 16};
  int trusted_margin = 1;

  /// Throws InvalidWindow when a range is empty.
  void validate() const;

  bool reports(const Multidegree& d) const {
    return s.contains(d.s) && t.contains(d.t) && u.contains(d.u);
  }

  /// Default window: t <= t_max, s <= s_max, v1 exponents and u in [v1_min, v1_max].
  static TruncationWindow standard(int t_max, int s_max, int v1_min, int v1_max);
};

}  // namespace v1ss
