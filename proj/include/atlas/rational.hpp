#pragma once

#include <compare>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include "atlas/halfint.hpp"

namespace atlas {

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
  constexpr Rational(HalfInt h) : num_(h.twice()), den_(2) {
    if (num_ % 2 == 0) {
      num_ /= 2;
      den_ = 1;
    }
  }

  /// Parses "p/q" or a plain integer string.
  static Rational parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(s));
      return Rational(std::stoll(s.substr(0, slash)),
                      std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
    }
  }

  constexpr long long num() const { return num_; }
  constexpr long long den() const { return den_; }
  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool is_integer() const { return den_ == 1; }

  double to_double() const { return double(num_) / double(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace atlas
