// Copyright (c) 2026 The Helix Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact scale tracking for CKKS handles. Every scale that arises in this
// code base is a product of integer powers of 2 and of chain moduli, so a
// scale is stored in factored form and "scale == Delta" is an exact test,
// never a float comparison.

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace helix {

class Scale {
 public:
  Scale() = default;

  static Scale one() { return Scale{}; }

  static Scale pow2(int exponent) {
    Scale s;
    s.log2_pow_ = exponent;
    return s;
  }

  // An odd prime factor (chain or special modulus).
  static Scale prime(std::uint64_t q, int exponent = 1) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("Scale::prime: not an odd prime");
    Scale s;
    s.primes_[q] = exponent;
    return s;
  }

  // Arbitrary positive real, kept as an opaque residual. Two residual scales
  // compare equal only if their doubles are bit-identical.
  static Scale raw(double value) {
    Scale s;
    s.residual_ = value;
    return s;
  }

  bool is_positive() const { return residual_ > 0.0; }

  Scale operator*(const Scale& o) const {
    Scale s = *this;
    s.log2_pow_ += o.log2_pow_;
    for (const auto& [q, e] : o.primes_) {
      s.primes_[q] += e;
      if (s.primes_[q] == 0) s.primes_.erase(q);
    }
    s.residual_ *= o.residual_;
    return s;
  }

  Scale operator/(const Scale& o) const {
    Scale inv;
    inv.log2_pow_ = -o.log2_pow_;
    for (const auto& [q, e] : o.primes_) inv.primes_[q] = -e;
    inv.residual_ = 1.0 / o.residual_;
    return *this * inv;
  }

  bool operator==(const Scale& o) const {
    return log2_pow_ == o.log2_pow_ && primes_ == o.primes_ && residual_ == o.residual_;
  }
  bool operator!=(const Scale& o) const { return !(*this == o); }

  double to_double() const {
    double v = std::ldexp(residual_, log2_pow_);
    for (const auto& [q, e] : primes_) v *= std::pow(static_cast<double>(q), e);
    return v;
  }

  // log2 of the value; robust for magnitudes far outside double range.
  double log2() const {
    double l = static_cast<double>(log2_pow_) + std::log2(residual_);
    for (const auto& [q, e] : primes_) l += e * std::log2(static_cast<double>(q));
    return l;
  }

  std::string str() const {
    std::string out = "2^" + std::to_string(log2_pow_);
    for (const auto& [q, e] : primes_) out += " * " + std::to_string(q) + "^" + std::to_string(e);
    if (residual_ != 1.0) out += " * " + std::to_string(residual_);
    return out;
  }

 private:
  int log2_pow_ = 0;
  std::map<std::uint64_t, int> primes_;
  double residual_ = 1.0;
};

}  // namespace helix
