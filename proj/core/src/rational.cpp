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

#include "steiner_gap/rational.hpp"

#include <cctype>
#include <climits>
#include <ostream>
#include <stdexcept>

namespace steiner_gap {
namespace {

using Wide = __int128;

// Inline values keep |num| < 2^63 so that negation never overflows.
constexpr Wide kInlineMax = static_cast<Wide>(INT64_MAX);

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int64_t gcd64(int64_t a, int64_t b) {
  uint64_t x = a < 0 ? -static_cast<uint64_t>(a) : static_cast<uint64_t>(a);
  uint64_t y = b < 0 ? -static_cast<uint64_t>(b) : static_cast<uint64_t>(b);
  while (y != 0) {
    uint64_t t = x % y;
    x = y;
    y = t;
  }
  return static_cast<int64_t>(x);
}

mpz_class wide_to_mpz(Wide v) {
  bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v)
                                   : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  set_from_wide(num, den);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  assign_big(std::move(c));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_) {
  if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    if (big_) {
      *big_ = *other.big_;
    } else {
      big_ = std::make_unique<mpq_class>(*other.big_);
    }
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::assign_big(mpq_class q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n != LONG_MIN) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::set_from_wide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num <= kInlineMax && num >= -kInlineMax && den <= kInlineMax) {
    num_ = static_cast<int64_t>(num);
    den_ = static_cast<int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(wide_to_mpz(num), wide_to_mpz(den));
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.pop_back();
  }
  size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) {
    ++start;
  }
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty input");
  try {
    if (auto dot = s.find('.'); dot != std::string::npos) {
      if (s.find('/') != std::string::npos) {
        throw std::invalid_argument("mixed decimal and fraction");
      }
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      size_t frac = s.size() - dot - 1;
      if (digits == "-" || digits == "+" || digits.empty()) {
        throw std::invalid_argument("no digits");
      }
      if (digits[0] == '+') digits.erase(0, 1);
      mpz_class num(digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      return Rational(mpq_class(num, den));
    }
    if (s[0] == '+') s.erase(0, 1);
    mpq_class q(s, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: malformed '" +
                                std::string(text) + "'");
  }
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)),
                   mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal(int places, bool truncate) const {
  if (places < 0) throw std::invalid_argument("to_decimal: negative places");
  mpz_class num = numerator();
  mpz_class den = denominator();
  bool negative = num < 0;
  if (negative) num = -num;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  mpz_class scaled = num * scale;
  mpz_class q = scaled / den;
  if (!truncate) {
    mpz_class rem = scaled - q * den;
    if (2 * rem >= den) ++q;
  }
  std::string digits = q.get_str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out;
  if (negative && q != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - static_cast<size_t>(places));
  if (places > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - static_cast<size_t>(places));
  }
  return out;
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  if (big_) return Rational(mpq_class(1 / *big_));
  Rational out;
  out.set_from_wide(den_, num_);
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      Wide sum = static_cast<Wide>(num_) + rhs.num_;
      if (sum <= kInlineMax && sum >= -kInlineMax) {
        num_ = static_cast<int64_t>(sum);
        return *this;
      }
    }
    set_from_wide(static_cast<Wide>(num_) * rhs.den_ +
                      static_cast<Wide>(rhs.num_) * den_,
                  static_cast<Wide>(den_) * rhs.den_);
    return *this;
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      Wide diff = static_cast<Wide>(num_) - rhs.num_;
      if (diff <= kInlineMax && diff >= -kInlineMax) {
        num_ = static_cast<int64_t>(diff);
        return *this;
      }
    }
    set_from_wide(static_cast<Wide>(num_) * rhs.den_ -
                      static_cast<Wide>(rhs.num_) * den_,
                  static_cast<Wide>(den_) * rhs.den_);
    return *this;
  }
  assign_big(to_mpq() - rhs.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    // Cross-reduce first so the common case stays within 64 bits.
    int64_t g1 = gcd64(num_, rhs.den_);
    int64_t g2 = gcd64(rhs.num_, den_);
    Wide n = static_cast<Wide>(num_ / g1) * (rhs.num_ / g2);
    Wide d = static_cast<Wide>(den_ / g2) * (rhs.den_ / g1);
    if (n <= kInlineMax && n >= -kInlineMax && d <= kInlineMax) {
      num_ = static_cast<int64_t>(n);
      den_ = static_cast<int64_t>(d);
      return *this;
    }
    set_from_wide(n, d);
    return *this;
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!big_ && !rhs.big_) {
    if (num_ == 0) return *this;
    int64_t g1 = gcd64(num_, rhs.num_);
    int64_t g2 = gcd64(den_, rhs.den_);
    Wide n = static_cast<Wide>(num_ / g1) * (rhs.den_ / g2);
    Wide d = static_cast<Wide>(den_ / g2) * (rhs.num_ / g1);
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n <= kInlineMax && n >= -kInlineMax && d <= kInlineMax) {
      num_ = static_cast<int64_t>(n);
      den_ = static_cast<int64_t>(d);
      return *this;
    }
    set_from_wide(n, d);
    return *this;
  }
  assign_big(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  // Canonical form makes representation equality value equality.
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::size_t Rational::hash() const {
  if (big_) {
    return std::hash<std::string>{}(big_->get_str());
  }
  std::size_t h = std::hash<int64_t>{}(num_);
  return h ^ (std::hash<int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) +
              (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace steiner_gap
