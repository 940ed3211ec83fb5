#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "ghdist/error.hpp"

namespace ghdist {

/// Exact arbitrary-precision rational number, always kept in lowest terms.
///
/// Thin value type over boost::multiprecision::cpp_rational that adds the
/// string format used by every file and report: integers print bare ("2"),
/// everything else as "p/q" ("3/2"). Parsing accepts the same form and also
/// plain decimals ("1.25", "-0.5").
class Rational {
 public:
  using value_type = boost::multiprecision::cpp_rational;
  using integer_type = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(Errc::syntax_error, "rational with zero denominator");
    v_ = value_type(integer_type(num), integer_type(den));
  }
  explicit Rational(value_type v) : v_(std::move(v)) {}

  static Rational parse(std::string_view text) {
    auto fail = [&] {
      return Error(Errc::syntax_error, "not a rational number: '" + std::string(text) + "'");
    };
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (s.empty()) throw fail();

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      auto num = parse_integer(s.substr(0, slash));
      auto den = parse_integer(s.substr(slash + 1));
      if (!num || !den || *den == 0) throw fail();
      if (*den < 0) {
        *num = -*num;
        *den = -*den;
      }
      return Rational(value_type(*num, *den));
    }

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    auto dot = s.find('.');
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail();
    if (dot != std::string_view::npos && frac.empty()) throw fail();
    for (char c : whole)
      if (c < '0' || c > '9') throw fail();
    for (char c : frac)
      if (c < '0' || c > '9') throw fail();

    std::string digits(whole);
    digits += frac;
    // A leading zero would make the string constructor read octal.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    integer_type num(digits.empty() ? std::string("0") : digits);
    integer_type den = boost::multiprecision::pow(integer_type(10), static_cast<unsigned>(frac.size()));
    if (negative) num = -num;
    return Rational(value_type(num, den));
  }

  std::string str() const {
    const auto num = boost::multiprecision::numerator(v_);
    const auto den = boost::multiprecision::denominator(v_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  const value_type& value() const noexcept { return v_; }
  integer_type numerator() const { return boost::multiprecision::numerator(v_); }
  integer_type denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return v_.sign(); }

  Rational operator-() const { return Rational(value_type(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw Error(Errc::bad_parameters, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational l, const Rational& r) { return l += r; }
  friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
  friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
  friend Rational operator/(Rational l, const Rational& r) { return l /= r; }

  friend bool operator==(const Rational& l, const Rational& r) { return l.v_ == r.v_; }
  friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
    if (l.v_ < r.v_) return std::strong_ordering::less;
    if (r.v_ < l.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static std::optional<integer_type> parse_integer(std::string_view s) {
    if (s.empty()) return std::nullopt;
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) return std::nullopt;
    for (char c : s)
      if (c < '0' || c > '9') return std::nullopt;
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    integer_type v{std::string(s)};
    return negative ? integer_type(-v) : v;
  }

  value_type v_{0};
};

inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

/// A rational extended by +infinity. Used for the inter-block separation of a
/// one-block partition, where the infimum ranges over an empty set.
class ExtendedRational {
 public:
  ExtendedRational(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  static ExtendedRational infinity() {
    ExtendedRational e{Rational{}};
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const noexcept { return infinite_; }
  /// Finite value; zero when infinite.
  const Rational& finite() const noexcept { return value_; }

  std::string str() const { return infinite_ ? std::string("inf") : value_.str(); }
  static ExtendedRational parse(std::string_view s) {
    if (s == "inf") return infinity();
    return ExtendedRational(Rational::parse(s));
  }

  friend bool operator==(const ExtendedRational& l, const ExtendedRational& r) {
    if (l.infinite_ || r.infinite_) return l.infinite_ == r.infinite_;
    return l.value_ == r.value_;
  }
  friend std::strong_ordering operator<=>(const ExtendedRational& l, const ExtendedRational& r) {
    if (l.infinite_ && r.infinite_) return std::strong_ordering::equal;
    if (l.infinite_) return std::strong_ordering::greater;
    if (r.infinite_) return std::strong_ordering::less;
    return l.value_ <=> r.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedRational& e) { return os << e.str(); }

 private:
  Rational value_;
  bool infinite_ = false;
};

}  // namespace ghdist
