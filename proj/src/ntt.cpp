// Copyright (c) 2026 The Helix Authors
// SPDX-License-Identifier: Apache-2.0

#include "helix/ntt.hpp"

#include <stdexcept>

namespace helix {

namespace {

u64 bit_reverse(u64 x, int bits) {
  u64 r = 0;
  for (int i = 0; i < bits; ++i) {
    r = (r << 1) | (x & 1);
    x >>= 1;
  }
  return r;
}

// Smallest primitive 2n-th root of unity mod q: c = g^((q-1)/2n) with
// c^n = -1.
u64 find_primitive_root(const Modulus& mod, std::size_t n) {
  const u64 q = mod.q;
  const u64 order = 2 * static_cast<u64>(n);
  if ((q - 1) % order != 0) throw std::invalid_argument("NTT: q != 1 (mod 2n)");
  for (u64 g = 2; g < q; ++g) {
    u64 c = mod.pow(g, (q - 1) / order);
    if (mod.pow(c, n) == q - 1) return c;
  }
  throw std::runtime_error("NTT: no primitive root found");
}

}  // namespace

NttTables::NttTables(Modulus modulus, std::size_t n) : mod_(modulus), n_(n) {
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("NTT: n must be a power of two");
  log_n_ = 0;
  while ((1ull << log_n_) < n) ++log_n_;
  psi_ = find_primitive_root(mod_, n);
  const u64 psi_inv = mod_.inv(psi_);
  fwd_.resize(n);
  fwd_shoup_.resize(n);
  inv_.resize(n);
  inv_shoup_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const u64 e = bit_reverse(i, log_n_);
    fwd_[i] = mod_.pow(psi_, e);
    inv_[i] = mod_.pow(psi_inv, e);
    fwd_shoup_[i] = shoup_precompute(fwd_[i], mod_.q);
    inv_shoup_[i] = shoup_precompute(inv_[i], mod_.q);
  }
  n_inv_ = mod_.inv(static_cast<u64>(n));
  n_inv_shoup_ = shoup_precompute(n_inv_, mod_.q);
}

void NttTables::forward(std::span<u64> a) const {
  const u64 q = mod_.q;
  std::size_t t = n_;
  for (std::size_t m = 1; m < n_; m <<= 1) {
    t >>= 1;
    for (std::size_t i = 0; i < m; ++i) {
      const u64 w = fwd_[m + i];
      const u64 wp = fwd_shoup_[m + i];
      const std::size_t j1 = 2 * i * t;
      for (std::size_t j = j1; j < j1 + t; ++j) {
        const u64 u = a[j];
        const u64 v = mul_shoup(a[j + t], w, wp, q);
        a[j] = mod_.add(u, v);
        a[j + t] = mod_.sub(u, v);
      }
    }
  }
}

void NttTables::inverse(std::span<u64> a) const {
  const u64 q = mod_.q;
  std::size_t t = 1;
  for (std::size_t m = n_; m > 1; m >>= 1) {
    const std::size_t h = m >> 1;
    std::size_t j1 = 0;
    for (std::size_t i = 0; i < h; ++i) {
      const u64 w = inv_[h + i];
      const u64 wp = inv_shoup_[h + i];
      for (std::size_t j = j1; j < j1 + t; ++j) {
        const u64 u = a[j];
        const u64 v = a[j + t];
        a[j] = mod_.add(u, v);
        a[j + t] = mul_shoup(mod_.sub(u, v), w, wp, q);
      }
      j1 += 2 * t;
    }
    t <<= 1;
  }
  for (auto& x : a) x = mul_shoup(x, n_inv_, n_inv_shoup_, q);
}

std::vector<u64> NttTables::negacyclic_mul(std::span<const u64> a, std::span<const u64> b) const {
  if (a.size() != n_ || b.size() != n_) throw std::invalid_argument("negacyclic_mul: size");
  std::vector<u64> fa(a.begin(), a.end());
  std::vector<u64> fb(b.begin(), b.end());
  forward(fa);
  forward(fb);
  for (std::size_t i = 0; i < n_; ++i) fa[i] = mod_.mul(fa[i], fb[i]);
  inverse(fa);
  return fa;
}

std::vector<u64> schoolbook_negacyclic_mul(std::span<const u64> a, std::span<const u64> b,
                                           const Modulus& mod) {
  const std::size_t n = a.size();
  std::vector<u64> c(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const u64 p = mod.mul(a[i], b[j]);
      const std::size_t k = i + j;
      if (k < n) {
        c[k] = mod.add(c[k], p);
      } else {
        c[k - n] = mod.sub(c[k - n], p);  // X^n = -1
      }
    }
  }
  return c;
}

}  // namespace helix
