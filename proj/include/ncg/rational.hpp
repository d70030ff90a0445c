#ifndef NCG_RATIONAL_HPP
#define NCG_RATIONAL_HPP

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>

namespace ncg {

// Exact rational with 64-bit numerator/denominator, always reduced, den > 0.
// Intermediates run through __int128; a result that does not fit back into
// 64 bits throws RationalOverflow instead of wrapping.
class RationalOverflow : public std::overflow_error {
 public:
  explicit RationalOverflow(const std::string& what) : std::overflow_error(what) {}
};

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers is intended
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    assign128(n, d);
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    assign128(i128(num_) * o.num_, i128(den_) * o.den_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    assign128(i128(num_) * o.den_, i128(den_) * o.num_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Reduced with positive denominators, so cross products fit in __int128.
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Largest integer <= value / smallest integer >= value.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p", "p/q", and plain decimals like "1.25" (converted exactly).
  static Rational parse(const std::string& text);

 private:
  using i128 = __int128;

  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    assign128(n, d);
  }

  static i128 abs128(i128 v) { return v < 0 ? -v : v; }

  static i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void assign128(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    i128 g = gcd128(n, d);
    n /= g;
    d /= g;
    constexpr i128 kMax = INT64_MAX;
    if (n > kMax || n < -kMax || d > kMax) {
      throw RationalOverflow("rational exceeds 64-bit range after reduction");
    }
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::parse(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::int64_t n = std::stoll(s.substr(0, slash));
    std::int64_t d = std::stoll(s.substr(slash + 1));
    return Rational(n, d);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad decimal literal: " + text);
    }
    bool neg = !whole.empty() && whole[0] == '-';
    std::int64_t w = whole.empty() || whole == "-" || whole == "+" ? 0 : std::stoll(whole);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
      if (den > INT64_MAX / 10) throw RationalOverflow("decimal literal too long: " + text);
      den *= 10;
    }
    std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
    Rational r = Rational(w < 0 ? -w : w) + Rational(f, den);
    if (neg) r = -r;
    return r;
  }
  return Rational(std::stoll(s));
}

}  // namespace ncg

#endif  // NCG_RATIONAL_HPP
