#ifndef LIEXT_RATIONAL_HPP
#define LIEXT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "liext/error.hpp"

namespace liext {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar.
///
/// Always held in canonical form: positive denominator, gcd(|num|, den) = 1.
/// Equality is structural; every arithmetic result is re-canonicalised, so
/// two Rationals compare equal iff they denote the same number.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(const Int& n) : q_(n) {}
  Rational(const Int& num, const Int& den) {
    if (den == 0) throw Error("Rational: zero denominator");
    q_ = Q(num);
    q_ /= Q(den);  // normalises sign and reduces
  }
  Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

  Int numerator() const { return boost::multiprecision::numerator(q_); }
  Int denominator() const { return boost::multiprecision::denominator(q_); }

  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return q_ < 0 ? -1 : (q_ > 0 ? 1 : 0); }

  Rational operator-() const { return Rational(Q(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// Renders as "p/q", or "p" when q = 1.
  std::string str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
  }

  /// Parses "p", "p/q" or "-p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view v) {
      while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
      while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
      return v;
    };
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("Rational: empty string");
    auto slash = s.find('/');
    try {
      if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
      std::string_view num = trim(s.substr(0, slash));
      std::string_view den = trim(s.substr(slash + 1));
      if (num.empty() || den.empty()) throw ParseError("Rational: malformed '" + std::string(text) + "'");
      return Rational(Int(std::string(num)), Int(std::string(den)));
    } catch (const std::runtime_error& e) {
      throw ParseError("Rational: cannot parse '" + std::string(text) + "'");
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using Q = boost::multiprecision::cpp_rational;
  explicit Rational(Q q) : q_(std::move(q)) {}
  Q q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace liext

#endif
