// Copyright (c) 2026 The Helix Authors
// SPDX-License-Identifier: Apache-2.0

#include "helix/rns_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace helix {

LatticeContext::LatticeContext(const CkksParams& params)
    : params_(params), n_(params.ring_degree) {
  params_.validate();
  if (params_.special_primes.size() != 1)
    throw std::invalid_argument("lattice context: exactly one special prime required");
  for (u64 q : params_.moduli) {
    chain_.emplace_back(q);
    ntt_.emplace_back(Modulus(q), n_);
  }
  special_ = Modulus(params_.special_primes[0]);
  ntt_special_ = NttTables(special_, n_);
}

const Modulus& LatticeContext::limb_modulus(const RnsPoly& p, int limb) const {
  if (p.has_special && limb == static_cast<int>(p.limbs.size()) - 1) return special_;
  return chain_[limb];
}

const NttTables& LatticeContext::limb_ntt(const RnsPoly& p, int limb) const {
  if (p.has_special && limb == static_cast<int>(p.limbs.size()) - 1) return ntt_special_;
  return ntt_[limb];
}

RnsPoly LatticeContext::zero(int chain_limbs, bool with_special, PolyDomain domain) const {
  RnsPoly p;
  p.has_special = with_special;
  p.domain = domain;
  p.limbs.assign(chain_limbs + (with_special ? 1 : 0), std::vector<u64>(n_, 0));
  return p;
}

void LatticeContext::to_ntt(RnsPoly& p) const {
  if (p.domain == PolyDomain::Ntt) return;
  for (std::size_t i = 0; i < p.limbs.size(); ++i)
    limb_ntt(p, static_cast<int>(i)).forward(p.limbs[i]);
  p.domain = PolyDomain::Ntt;
}

void LatticeContext::to_coeff(RnsPoly& p) const {
  if (p.domain == PolyDomain::Coeff) return;
  for (std::size_t i = 0; i < p.limbs.size(); ++i)
    limb_ntt(p, static_cast<int>(i)).inverse(p.limbs[i]);
  p.domain = PolyDomain::Coeff;
}

void LatticeContext::check_match(const RnsPoly& a, const RnsPoly& b, const char* what) const {
  if (a.limbs.size() != b.limbs.size() || a.has_special != b.has_special)
    throw std::invalid_argument(std::string(what) + ": limb-count mismatch");
  if (a.domain != b.domain) throw std::invalid_argument(std::string(what) + ": domain mismatch");
}

RnsPoly LatticeContext::add(const RnsPoly& a, const RnsPoly& b) const {
  check_match(a, b, "poly add");
  RnsPoly out = a;
  for (std::size_t i = 0; i < out.limbs.size(); ++i) {
    const Modulus& m = limb_modulus(out, static_cast<int>(i));
    for (std::size_t t = 0; t < n_; ++t) out.limbs[i][t] = m.add(out.limbs[i][t], b.limbs[i][t]);
  }
  return out;
}

RnsPoly LatticeContext::sub(const RnsPoly& a, const RnsPoly& b) const {
  check_match(a, b, "poly sub");
  RnsPoly out = a;
  for (std::size_t i = 0; i < out.limbs.size(); ++i) {
    const Modulus& m = limb_modulus(out, static_cast<int>(i));
    for (std::size_t t = 0; t < n_; ++t) out.limbs[i][t] = m.sub(out.limbs[i][t], b.limbs[i][t]);
  }
  return out;
}

RnsPoly LatticeContext::negate(const RnsPoly& a) const {
  RnsPoly out = a;
  for (std::size_t i = 0; i < out.limbs.size(); ++i) {
    const Modulus& m = limb_modulus(out, static_cast<int>(i));
    for (auto& x : out.limbs[i]) x = m.neg(x);
  }
  return out;
}

RnsPoly LatticeContext::mul(const RnsPoly& a, const RnsPoly& b) const {
  check_match(a, b, "poly mul");
  if (a.domain != PolyDomain::Ntt) throw std::invalid_argument("poly mul: need NTT domain");
  RnsPoly out = a;
  for (std::size_t i = 0; i < out.limbs.size(); ++i) {
    const Modulus& m = limb_modulus(out, static_cast<int>(i));
    for (std::size_t t = 0; t < n_; ++t) out.limbs[i][t] = m.mul(out.limbs[i][t], b.limbs[i][t]);
  }
  return out;
}

void LatticeContext::mul_acc(const RnsPoly& a, const RnsPoly& b, RnsPoly& acc) const {
  check_match(a, b, "poly mul_acc");
  check_match(a, acc, "poly mul_acc");
  for (std::size_t i = 0; i < acc.limbs.size(); ++i) {
    const Modulus& m = limb_modulus(acc, static_cast<int>(i));
    for (std::size_t t = 0; t < n_; ++t)
      acc.limbs[i][t] = m.add(acc.limbs[i][t], m.mul(a.limbs[i][t], b.limbs[i][t]));
  }
}

RnsPoly LatticeContext::ring_mul(const RnsPoly& a, const RnsPoly& b) const {
  if (a.limbs.size() != b.limbs.size() || a.has_special != b.has_special)
    throw std::invalid_argument("ring_mul: limb-count mismatch");
  RnsPoly fa = a;
  RnsPoly fb = b;
  to_ntt(fa);
  to_ntt(fb);
  RnsPoly out = mul(fa, fb);
  to_coeff(out);
  return out;
}

RnsPoly LatticeContext::automorphism(const RnsPoly& a, u64 g) const {
  if (a.domain != PolyDomain::Coeff)
    throw std::invalid_argument("automorphism: need coefficient domain");
  const u64 two_n = 2 * n_;
  RnsPoly out = zero(a.chain_limbs(), a.has_special, PolyDomain::Coeff);
  for (std::size_t i = 0; i < a.limbs.size(); ++i) {
    const Modulus& m = limb_modulus(a, static_cast<int>(i));
    for (std::size_t t = 0; t < n_; ++t) {
      const u64 j = (static_cast<u128>(t) * g) % two_n;
      const u64 v = a.limbs[i][t];
      if (j < n_) {
        out.limbs[i][j] = v;  // X^t -> X^j
      } else {
        out.limbs[i][j - n_] = m.neg(v);  // X^j = -X^{j-N}
      }
    }
  }
  return out;
}

RnsPoly LatticeContext::rescale_drop_last(const RnsPoly& a) const {
  if (a.domain != PolyDomain::Coeff) throw std::invalid_argument("rescale: need coeff domain");
  if (a.has_special) throw std::invalid_argument("rescale: unexpected special limb");
  const int k = a.chain_limbs();
  if (k < 2) throw std::invalid_argument("rescale: no limb to drop");
  const Modulus& q_last = chain_[k - 1];
  RnsPoly out = zero(k - 1, false, PolyDomain::Coeff);
  for (int i = 0; i < k - 1; ++i) {
    const Modulus& m = chain_[i];
    const u64 q_last_inv = m.inv(q_last.q % m.q);
    for (std::size_t t = 0; t < n_; ++t) {
      // Centered lift keeps |rounding error| <= 1/2.
      const std::int64_t c = q_last.centered(a.limbs[k - 1][t]);
      const u64 diff = m.sub(a.limbs[i][t], m.reduce_i64(c));
      out.limbs[i][t] = m.mul(diff, q_last_inv);
    }
  }
  return out;
}

RnsPoly LatticeContext::moddown_special(const RnsPoly& a) const {
  if (a.domain != PolyDomain::Coeff) throw std::invalid_argument("moddown: need coeff domain");
  if (!a.has_special) throw std::invalid_argument("moddown: no special limb");
  const int k = a.chain_limbs();
  const auto& sp_limb = a.limbs.back();
  RnsPoly out = zero(k, false, PolyDomain::Coeff);
  for (int i = 0; i < k; ++i) {
    const Modulus& m = chain_[i];
    const u64 p_inv = m.inv(special_.q % m.q);
    for (std::size_t t = 0; t < n_; ++t) {
      const std::int64_t c = special_.centered(sp_limb[t]);
      const u64 diff = m.sub(a.limbs[i][t], m.reduce_i64(c));
      out.limbs[i][t] = m.mul(diff, p_inv);
    }
  }
  return out;
}

RnsPoly LatticeContext::drop_to_level(const RnsPoly& a, int target_level) const {
  if (a.has_special) throw std::invalid_argument("drop_to_level: unexpected special limb");
  if (target_level + 1 > a.chain_limbs())
    throw std::invalid_argument("drop_to_level: target above current");
  RnsPoly out = a;
  out.limbs.resize(target_level + 1);
  return out;
}

RnsPoly LatticeContext::sample_uniform(int chain_limbs, bool with_special, PolyDomain domain,
                                       std::mt19937_64& rng) const {
  RnsPoly p = zero(chain_limbs, with_special, domain);
  for (std::size_t i = 0; i < p.limbs.size(); ++i) {
    const Modulus& m = limb_modulus(p, static_cast<int>(i));
    std::uniform_int_distribution<u64> dist(0, m.q - 1);
    for (auto& x : p.limbs[i]) x = dist(rng);
  }
  return p;
}

RnsPoly LatticeContext::sample_ternary(int chain_limbs, bool with_special,
                                       std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> dist(-1, 1);
  std::vector<std::int64_t> coeffs(n_);
  for (auto& c : coeffs) c = dist(rng);
  return from_i64(coeffs, chain_limbs, with_special);
}

RnsPoly LatticeContext::sample_gaussian(int chain_limbs, bool with_special,
                                        std::mt19937_64& rng) const {
  std::normal_distribution<double> dist(0.0, 3.2);
  std::vector<std::int64_t> coeffs(n_);
  for (auto& c : coeffs) c = static_cast<std::int64_t>(std::llround(dist(rng)));
  return from_i64(coeffs, chain_limbs, with_special);
}

RnsPoly LatticeContext::from_i64(const std::vector<std::int64_t>& coeffs, int chain_limbs,
                                 bool with_special) const {
  if (coeffs.size() != n_) throw std::invalid_argument("from_i64: wrong length");
  RnsPoly p = zero(chain_limbs, with_special, PolyDomain::Coeff);
  for (std::size_t i = 0; i < p.limbs.size(); ++i) {
    const Modulus& m = limb_modulus(p, static_cast<int>(i));
    for (std::size_t t = 0; t < n_; ++t) p.limbs[i][t] = m.reduce_i64(coeffs[t]);
  }
  return p;
}

}  // namespace helix
