#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace atlas {

/// Exact half-integer, stored as twice its value (j = 3/2 holds twice = 3).
/// Total ordering and arithmetic are exact; there is no floating point here.
class HalfInt {
public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int whole) : twice_(2 * whole) {}

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  // Only halves and wholes are representable.
  static HalfInt from_fraction(int num, int den) {
    if (den == 1) return HalfInt(num);
    if (den == 2) return from_twice(num);
    throw std::invalid_argument("HalfInt: denominator must be 1 or 2");
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  int to_int() const {
    if (!is_integer())
      throw std::domain_error("HalfInt: " + str() + " is not an integer");
    return twice_ / 2;
  }

  constexpr double to_double() const { return twice_ / 2.0; }

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ - b.twice_);
  }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }

  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

private:
  int twice_ = 0;
};

}  // namespace atlas
