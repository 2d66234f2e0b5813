// Copyright (c) 2026 The Helix Authors
// SPDX-License-Identifier: Apache-2.0
//
// Negacyclic number-theoretic transform over a word-sized prime field.
// Forward is Cooley-Tukey (natural -> bit-reversed), inverse is
// Gentleman-Sande (bit-reversed -> natural), with the 2N-th root folded in
// so that pointwise products realize multiplication mod (X^N + 1, q).

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "helix/modmath.hpp"

namespace helix {

class NttTables {
 public:
  NttTables() = default;
  // q must be prime with q = 1 (mod 2n); n a power of two.
  NttTables(Modulus modulus, std::size_t n);

  std::size_t n() const { return n_; }
  const Modulus& modulus() const { return mod_; }
  u64 psi() const { return psi_; }

  // In-place; a.size() == n. Forward leaves bit-reversed order, inverse
  // restores natural order and applies 1/n.
  void forward(std::span<u64> a) const;
  void inverse(std::span<u64> a) const;

  // c = a * b mod (X^n + 1, q), all in coefficient (natural) order.
  std::vector<u64> negacyclic_mul(std::span<const u64> a, std::span<const u64> b) const;

 private:
  Modulus mod_;
  std::size_t n_ = 0;
  int log_n_ = 0;
  u64 psi_ = 0;      // primitive 2n-th root of unity
  u64 n_inv_ = 0;
  u64 n_inv_shoup_ = 0;
  std::vector<u64> fwd_;        // psi^{bitrev(i)}
  std::vector<u64> fwd_shoup_;
  std::vector<u64> inv_;        // psi^{-bitrev(i)}
  std::vector<u64> inv_shoup_;
};

// Reference oracle used by tests: O(n^2) schoolbook product mod (X^n+1, q).
std::vector<u64> schoolbook_negacyclic_mul(std::span<const u64> a, std::span<const u64> b,
                                           const Modulus& mod);

}  // namespace helix
