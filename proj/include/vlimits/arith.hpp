// Copyright 2026 The vlimits Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact scalar types: checked 64-bit rationals, half-integers, and an
// arbitrary-precision rational used for character values.

#ifndef VLIMITS_ARITH_HPP_
#define VLIMITS_ARITH_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace vlimits {

// Thrown when an intermediate leaves the int64 range.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Floor division for signed integers; den must be positive.
std::int64_t floor_div(std::int64_t num, std::int64_t den);
// Representative of num mod den in [0, den); den must be positive.
std::int64_t floor_mod(std::int64_t num, std::int64_t den);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Reduced fraction num/den with den > 0.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  std::int64_t floor() const { return floor_div(num_, den_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  // "p/q", or "p" when the value is an integer.
  std::string to_string() const;
  // Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// An element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  HalfInt(std::int64_t value)  // NOLINT: implicit by design
      : twice_(checked_mul(value, 2)) {}
  static HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  std::int64_t twice() const { return twice_; }
  bool is_integer() const { return twice_ % 2 == 0; }
  std::int64_t floor() const { return floor_div(twice_, 2); }
  Rational to_rational() const { return Rational(twice_, 2); }

  HalfInt operator-() const { return from_twice(-twice_); }
  HalfInt& operator+=(const HalfInt& o) {
    twice_ = checked_add(twice_, o.twice_);
    return *this;
  }
  HalfInt& operator-=(const HalfInt& o) {
    twice_ = checked_sub(twice_, o.twice_);
    return *this;
  }
  HalfInt& operator*=(std::int64_t k) {
    twice_ = checked_mul(twice_, k);
    return *this;
  }
  friend HalfInt operator+(HalfInt a, const HalfInt& b) { return a += b; }
  friend HalfInt operator-(HalfInt a, const HalfInt& b) { return a -= b; }
  friend HalfInt operator*(HalfInt a, std::int64_t k) { return a *= k; }

  friend bool operator==(const HalfInt&, const HalfInt&) = default;
  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;

  // "k" for integers, "k/2" otherwise.
  std::string to_string() const;
  static HalfInt parse(std::string_view text);

 private:
  std::int64_t twice_ = 0;
};

std::ostream& operator<<(std::ostream& os, const HalfInt& h);

// Character values live here; powers a^k grow quickly.
using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

BigRational to_big(const Rational& r);
// a^k for integer k (negative allowed when a != 0).
BigRational power(const BigRational& a, std::int64_t k);
// "p/q", or "p" for integers, matching Rational::to_string.
std::string big_to_string(const BigRational& r);
BigRational parse_big(std::string_view text);

}  // namespace vlimits

template <>
struct std::hash<vlimits::HalfInt> {
  std::size_t operator()(const vlimits::HalfInt& h) const noexcept {
    return std::hash<std::int64_t>{}(h.twice());
  }
};

#endif  // VLIMITS_ARITH_HPP_
