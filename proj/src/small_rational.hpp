// Copyright 2026 The Authors.
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

#pragma once

#include <cstdint>
#include <numeric>

#include "rational.hpp"

namespace rrst {

// Thrown when a SmallRational result leaves the representable range.
struct RationalOverflow {};

// Reduced fraction with 64-bit numerator and denominator, |num|, den < 2^62.
// Every operation is exact or throws RationalOverflow, so a computation either
// matches the same computation over Rational or aborts.
class SmallRational {
 public:
  static constexpr std::int64_t kLimit = std::int64_t{1} << 62;

  SmallRational() = default;
  SmallRational(int value) : num_(value) {}  // NOLINT: implicit by design

  static SmallRational from(const Rational& value) {
    if (!mpz_fits_slong_p(value.get_num_mpz_t()) || !mpz_fits_slong_p(value.get_den_mpz_t())) {
      throw RationalOverflow{};
    }
    return make(mpz_get_si(value.get_num_mpz_t()), mpz_get_si(value.get_den_mpz_t()));
  }

  Rational to_rational() const {
    Rational out(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return out;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend int sgn(const SmallRational& a) { return (a.num_ > 0) - (a.num_ < 0); }

  friend int cmp(const SmallRational& a, const SmallRational& b) {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return (l > r) - (l < r);
  }

  friend bool operator==(const SmallRational& a, const SmallRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  SmallRational operator-() const {
    SmallRational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
  }

  friend SmallRational operator*(const SmallRational& a, const SmallRational& b) {
    if (a.den_ == 1 && b.den_ == 1) return checked(static_cast<__int128>(a.num_) * b.num_, 1);
    if (a.num_ == 0 || b.num_ == 0) return SmallRational();
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    return checked(static_cast<__int128>(a.num_ / g1) * (b.num_ / g2),
                   static_cast<__int128>(a.den_ / g2) * (b.den_ / g1));
  }

  friend SmallRational operator/(const SmallRational& a, const SmallRational& b) {
    return a * b.inverse();
  }

  friend SmallRational operator+(const SmallRational& a, const SmallRational& b) {
    return sum(a, b.num_, b.den_);
  }

  friend SmallRational operator-(const SmallRational& a, const SmallRational& b) {
    return sum(a, -b.num_, b.den_);
  }

  SmallRational& operator+=(const SmallRational& b) { return *this = *this + b; }
  SmallRational& operator-=(const SmallRational& b) { return *this = *this - b; }
  SmallRational& operator*=(const SmallRational& b) { return *this = *this * b; }

  SmallRational inverse() const {
    SmallRational out;
    out.num_ = num_ < 0 ? -den_ : den_;
    out.den_ = num_ < 0 ? -num_ : num_;
    return out;
  }

 private:
  static SmallRational make(std::int64_t num, std::int64_t den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return checked(num / g, den / g);
  }

  // Already reduced; only the range is checked.
  static SmallRational checked(__int128 num, __int128 den) {
    if (num >= kLimit || num <= -kLimit || den >= kLimit) throw RationalOverflow{};
    SmallRational out;
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
    return out;
  }

  static SmallRational sum(const SmallRational& a, std::int64_t bn, std::int64_t bd) {
    if (a.den_ == bd) {
      const __int128 n = static_cast<__int128>(a.num_) + bn;
      if (bd == 1) return checked(n, 1);
      const std::int64_t g = std::gcd(static_cast<std::int64_t>(n % bd), bd);
      return checked(n / g, bd / g);
    }
    // Knuth 4.5.1: with g = gcd(ad, bd), the result reduces by gcd(t, g).
    const std::int64_t g = std::gcd(a.den_, bd);
    const __int128 t = static_cast<__int128>(a.num_) * (bd / g) +
                       static_cast<__int128>(bn) * (a.den_ / g);
    if (t == 0) return SmallRational();
    if (g == 1) return checked(t, static_cast<__int128>(a.den_) * bd);
    const std::int64_t g2 = std::gcd(static_cast<std::int64_t>(t % g), g);
    return checked(t / g2, static_cast<__int128>(a.den_ / g) * (bd / g2));
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace rrst
