// Copyright 2026 The steiner_gap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STEINER_GAP_RATIONAL_HPP_
#define STEINER_GAP_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>

namespace steiner_gap {

// Exact rational number. Values whose reduced numerator and denominator fit
// in 64 bits are stored inline; anything larger is promoted to a GMP mpq.
// The representation is always canonical: denominator > 0, gcd = 1, and a
// value is stored inline whenever it fits.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T> || sizeof(T) < sizeof(int64_t)) {
      num_ = static_cast<int64_t>(value);
    } else if (value <= static_cast<T>(INT64_MAX)) {
      num_ = static_cast<int64_t>(value);
    } else {
      assign_big(mpq_class(mpz_class(std::to_string(value))));
    }
  }
  Rational(int64_t num, int64_t den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  // Accepts "p", "p/q" and finite decimals such as "-1.25".
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  int sign() const;
  bool is_small() const { return !big_; }

  mpq_class to_mpq() const;
  double to_double() const;
  // "p/q", or "p" for integers.
  std::string to_string() const;
  // Decimal expansion with `places` digits after the point. Truncates toward
  // zero when `truncate` is set, otherwise rounds half away from zero.
  std::string to_decimal(int places, bool truncate = true) const;

  mpz_class numerator() const;
  mpz_class denominator() const;

  Rational operator-() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Rational operator-(Rational lhs, const Rational& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Rational operator*(Rational lhs, const Rational& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend Rational operator/(Rational lhs, const Rational& rhs) {
    lhs /= rhs;
    return lhs;
  }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  std::size_t hash() const;

 private:
  void assign_big(mpq_class q);
  void set_from_wide(__int128 num, __int128 den);

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace steiner_gap

template <>
struct std::hash<steiner_gap::Rational> {
  std::size_t operator()(const steiner_gap::Rational& r) const {
    return r.hash();
  }
};

#endif  // STEINER_GAP_RATIONAL_HPP_
