#ifndef NCG_COST_HPP
#define NCG_COST_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "ncg/rational.hpp"

namespace ncg {

// Game cost / cost delta, ordered lexicographically by
// (unreachable ordered pairs, exact finite value). Connectivity changes
// dominate any finite creation or usage difference, so valuations of
// bridge edges compare above every finite alpha.
struct Cost {
  std::int64_t unreachable = 0;
  Rational value;

  bool finite() const { return unreachable == 0; }
  bool is_zero() const { return unreachable == 0 && value.is_zero(); }

  Cost& operator+=(const Cost& o) {
    unreachable += o.unreachable;
    value += o.value;
    return *this;
  }
  Cost& operator-=(const Cost& o) {
    unreachable -= o.unreachable;
    value -= o.value;
    return *this;
  }
  Cost operator-() const { return Cost{-unreachable, -value}; }

  friend Cost operator+(Cost a, const Cost& b) { return a += b; }
  friend Cost operator-(Cost a, const Cost& b) { return a -= b; }

  friend bool operator==(const Cost&, const Cost&) = default;
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
    if (a.unreachable != b.unreachable) {
      return a.unreachable < b.unreachable ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    }
    return a.value <=> b.value;
  }

  static Cost finite_value(Rational v) { return Cost{0, v}; }

  std::string to_string() const {
    if (unreachable == 0) return value.to_string();
    return "[unreachable=" + std::to_string(unreachable) + ", " + value.to_string() + "]";
  }
};

}  // namespace ncg

#endif  // NCG_COST_HPP
