#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lwood {

/// Exact element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int value) : twice_(2 * value) {}  // NOLINT: implicit from int is intended
  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  int to_int() const {
    if (!is_integer()) throw std::domain_error("half-integer " + str() + " is not an integer");
    return twice_ / 2;
  }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(int k, HalfInt a) { return from_twice(k * a.twice_); }

  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "3", "-1/2", "3/2".
  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  /// Accepts "3", "-2", "3/2", "-1/2".
  static HalfInt parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return HalfInt(v);
      }
      if (s.substr(slash + 1) != "2") throw std::invalid_argument(s);
      int num = std::stoi(s.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument(s);
      return from_twice(num);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("not a half-integer: '" + s + "'");
    }
  }

 private:
  int twice_ = 0;
};

}  // namespace lwood
