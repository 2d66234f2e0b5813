// Copyright (c) 2026 The Helix Authors
// SPDX-License-Identifier: Apache-2.0
//
// 64-bit prime-field arithmetic: Barrett-reduced multiplication, Shoup
// multiplication for fixed multiplicands (NTT twiddles), deterministic
// Miller-Rabin, and NTT-friendly prime search.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace helix {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// A prime modulus with Barrett constants precomputed. All inputs to the
// arithmetic helpers must already be reduced to [0, q).
struct Modulus {
  u64 q = 0;
  u64 barrett_hi = 0;  // floor(2^128 / q), high word
  u64 barrett_lo = 0;  // floor(2^128 / q), low word

  Modulus() = default;
  explicit Modulus(u64 value) : q(value) {
    if (q < 2) throw std::invalid_argument("Modulus: q < 2");
    // floor(2^128 / q) by schoolbook long division of 2^128.
    u128 rem = 0;
    u64 words[2] = {0, 0};
    for (int w = 1; w >= 0; --w) {
      u128 cur = (rem << 64);
      words[w] = static_cast<u64>(cur / q);
      rem = cur % q;
    }
    barrett_hi = words[1];
    barrett_lo = words[0];
  }

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= q ? s - q : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + q - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : q - a; }

  // Barrett reduction of a 128-bit product.
  u64 mul(u64 a, u64 b) const {
    u128 z = static_cast<u128>(a) * b;
    u64 zlo = static_cast<u64>(z);
    u64 zhi = static_cast<u64>(z >> 64);
    // t = floor(z * floor(2^128/q) / 2^128), using the top words only.
    u128 t = (static_cast<u128>(zhi) * barrett_hi);
    u128 mid1 = static_cast<u128>(zhi) * barrett_lo;
    u128 mid2 = static_cast<u128>(zlo) * barrett_hi;
    u128 carry = ((mid1 & 0xFFFFFFFFFFFFFFFFull) + (mid2 & 0xFFFFFFFFFFFFFFFFull) +
                  ((static_cast<u128>(zlo) * barrett_lo) >> 64)) >> 64;
    t += (mid1 >> 64) + (mid2 >> 64) + carry;
    u64 r = zlo - static_cast<u64>(t) * q;
    while (r >= q) r -= q;
    return r;
  }

  u64 pow(u64 base, u64 exp) const {
    u64 r = 1;
    u64 b = base % q;
    while (exp) {
      if (exp & 1) r = mul(r, b);
      b = mul(b, b);
      exp >>= 1;
    }
    return r;
  }

  // Inverse via Fermat (q prime).
  u64 inv(u64 a) const {
    if (a == 0) throw std::invalid_argument("Modulus::inv(0)");
    return pow(a, q - 2);
  }

  // Centered representative in (-q/2, q/2].
  std::int64_t centered(u64 a) const {
    return a > q / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(q)
                     : static_cast<std::int64_t>(a);
  }

  u64 reduce_i64(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(q);
    if (m < 0) m += static_cast<std::int64_t>(q);
    return static_cast<u64>(m);
  }
};

// Shoup precomputation: wp = floor(w * 2^64 / q). mul_shoup(a, w, wp) computes
// a*w mod q with two multiplies; w must be fixed and < q.
inline u64 shoup_precompute(u64 w, u64 q) {
  return static_cast<u64>((static_cast<u128>(w) << 64) / q);
}

inline u64 mul_shoup(u64 a, u64 w, u64 wp, u64 q) {
  u64 hi = static_cast<u64>((static_cast<u128>(a) * wp) >> 64);
  u64 r = a * w - hi * q;
  return r >= q ? r - q : r;
}

inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  Modulus m(n);
  // Deterministic witness set for 64-bit integers.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = m.pow(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = m.mul(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// First `count` primes p = 1 (mod 2N) at or above `start`, skipping any in
// `exclude`. Deterministic.
inline std::vector<u64> find_ntt_primes(u64 start, std::size_t count, u64 two_n,
                                        const std::vector<u64>& exclude = {}) {
  std::vector<u64> out;
  u64 p = ((start + two_n - 1) / two_n) * two_n + 1;
  while (out.size() < count) {
    bool skip = false;
    for (u64 e : exclude) {
      if (e == p) skip = true;
    }
    if (!skip && is_prime_u64(p)) out.push_back(p);
    p += two_n;
    if (p < two_n) throw std::runtime_error("find_ntt_primes: overflow");
  }
  return out;
}

}  // namespace helix
