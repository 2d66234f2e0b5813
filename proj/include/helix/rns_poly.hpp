// Copyright (c) 2026 The Helix Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "helix/modmath.hpp"
#include "helix/ntt.hpp"
#include "helix/params.hpp"

namespace helix {

enum class PolyDomain { Coeff, Ntt };

// A ring element in RNS form: one residue polynomial per active chain
// modulus, optionally followed by a special-prime limb used during key
// switching. limbs[i].size() == N for all i.
struct RnsPoly {
  std::vector<std::vector<u64>> limbs;
  bool has_special = false;
  PolyDomain domain = PolyDomain::Coeff;

  int chain_limbs() const { return static_cast<int>(limbs.size()) - (has_special ? 1 : 0); }
  int level() const { return chain_limbs() - 1; }
};

// Shared read-only lattice state: moduli, NTT tables, and the cross-modulus
// constants needed for rescale and special-prime mod-down.
class LatticeContext {
 public:
  explicit LatticeContext(const CkksParams& params);

  const CkksParams& params() const { return params_; }
  std::size_t n() const { return n_; }
  int max_level() const { return params_.max_level; }

  const Modulus& chain_modulus(int i) const { return chain_[i]; }
  const Modulus& special_modulus() const { return special_; }
  const NttTables& chain_ntt(int i) const { return ntt_[i]; }
  const NttTables& special_ntt() const { return ntt_special_; }

  // Modulus/tables for limb index within a poly (special-aware).
  const Modulus& limb_modulus(const RnsPoly& p, int limb) const;
  const NttTables& limb_ntt(const RnsPoly& p, int limb) const;

  RnsPoly zero(int chain_limbs, bool with_special, PolyDomain domain) const;

  void to_ntt(RnsPoly& p) const;
  void to_coeff(RnsPoly& p) const;

  RnsPoly add(const RnsPoly& a, const RnsPoly& b) const;
  RnsPoly sub(const RnsPoly& a, const RnsPoly& b) const;
  RnsPoly negate(const RnsPoly& a) const;
  // Pointwise product; both operands must be in NTT domain.
  RnsPoly mul(const RnsPoly& a, const RnsPoly& b) const;
  void mul_acc(const RnsPoly& a, const RnsPoly& b, RnsPoly& acc) const;

  // c = a * b mod (X^N + 1, q_i) per limb, via NTT. Accepts coefficient or
  // NTT domain inputs; output is in coefficient domain. Errors on limb-count
  // mismatch.
  RnsPoly ring_mul(const RnsPoly& a, const RnsPoly& b) const;

  // Galois map X -> X^g applied in coefficient domain; g odd.
  RnsPoly automorphism(const RnsPoly& a, u64 g) const;

  // Exact divide-and-round by the top chain modulus; drops the last limb.
  // Coefficient domain.
  RnsPoly rescale_drop_last(const RnsPoly& a) const;

  // Exact divide-and-round by the special prime; drops the special limb.
  // Coefficient domain.
  RnsPoly moddown_special(const RnsPoly& a) const;

  RnsPoly drop_to_level(const RnsPoly& a, int target_level) const;

  RnsPoly sample_uniform(int chain_limbs, bool with_special, PolyDomain domain,
                         std::mt19937_64& rng) const;
  // Ternary {-1,0,1} / rounded Gaussian (sigma = 3.2), sampled as integers
  // and reduced into every limb. Coefficient domain.
  RnsPoly sample_ternary(int chain_limbs, bool with_special, std::mt19937_64& rng) const;
  RnsPoly sample_gaussian(int chain_limbs, bool with_special, std::mt19937_64& rng) const;

  // Reduce small signed integers into RNS form.
  RnsPoly from_i64(const std::vector<std::int64_t>& coeffs, int chain_limbs,
                   bool with_special) const;

 private:
  void check_match(const RnsPoly& a, const RnsPoly& b, const char* what) const;

  CkksParams params_;
  std::size_t n_;
  std::vector<Modulus> chain_;
  Modulus special_;
  std::vector<NttTables> ntt_;
  NttTables ntt_special_;
};

}  // namespace helix
