// Copyright (c) 2026 The Helix Authors
// SPDX-License-Identifier: Apache-2.0
//
// Canonical slot encoding: slot j of a message corresponds to the polynomial
// evaluated at zeta^(5^j mod 2N), zeta a primitive 2N-th root of unity. A
// real message vector therefore maps to a real-coefficient polynomial via a
// conjugate-symmetric inverse embedding, computed with one size-N FFT.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "helix/rns_poly.hpp"

namespace helix {

class CkksEncoder {
 public:
  explicit CkksEncoder(const LatticeContext& ctx);

  // coefficients = round(scale * inverse-embedding(m)); m is zero-padded to
  // n slots. Errors when |m| > n or a rounded coefficient exceeds the
  // capacity of the active modulus product.
  RnsPoly encode(std::span<const double> m, int level, double scale) const;

  std::vector<double> decode(const RnsPoly& pt, double scale) const;

  // Test hook: the unscaled real embedding of m together with the largest
  // imaginary residue left by the transform (exactly zero in exact
  // arithmetic; measures floating-point error here).
  struct Embedding {
    std::vector<double> coefficients;
    double max_imag_residue;
  };
  Embedding embed_real(std::span<const double> m) const;

  std::size_t slot_count() const { return n_slots_; }

 private:
  void fft(std::vector<std::complex<double>>& v, bool inverse) const;
  std::vector<std::complex<double>> embed_to_complex(std::span<const double> m) const;

  const LatticeContext& ctx_;
  std::size_t n_;        // ring degree N
  std::size_t n_slots_;  // N / 2
  int log_n_ = 0;
  std::vector<std::size_t> slot_to_eval_;   // j -> (5^j - 1)/2 mod N
  std::vector<std::complex<double>> zeta_;  // zeta^t, t in [0, N)
  std::vector<std::size_t> bitrev_;
};

}  // namespace helix
