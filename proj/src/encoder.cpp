// Copyright (c) 2026 The Helix Authors
// SPDX-License-Identifier: Apache-2.0

#include "helix/encoder.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gmpxx.h>

namespace helix {

CkksEncoder::CkksEncoder(const LatticeContext& ctx)
    : ctx_(ctx), n_(ctx.n()), n_slots_(ctx.n() / 2) {
  while ((1ull << log_n_) < n_) ++log_n_;
  const std::size_t two_n = 2 * n_;

  slot_to_eval_.resize(n_slots_);
  std::size_t pow5 = 1;
  for (std::size_t j = 0; j < n_slots_; ++j) {
    slot_to_eval_[j] = (pow5 - 1) / 2;  // exponent 5^j = 2k+1 -> k
    pow5 = (pow5 * 5) % two_n;
  }

  zeta_.resize(n_);
  for (std::size_t t = 0; t < n_; ++t) {
    const double angle = std::numbers::pi * static_cast<double>(t) / static_cast<double>(n_);
    zeta_[t] = {std::cos(angle), std::sin(angle)};
  }

  bitrev_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t r = 0, x = i;
    for (int b = 0; b < log_n_; ++b) {
      r = (r << 1) | (x & 1);
      x >>= 1;
    }
    bitrev_[i] = r;
  }
}

// Radix-2 FFT with twiddles exp(+2*pi*i*k/N); inverse conjugates and scales
// by 1/N.
void CkksEncoder::fft(std::vector<std::complex<double>>& v, bool inverse) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (bitrev_[i] > i) std::swap(v[i], v[bitrev_[i]]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const double base = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? -1.0 : 1.0);
    const std::complex<double> wn{std::cos(base), std::sin(base)};
    for (std::size_t i = 0; i < n_; i += len) {
      std::complex<double> w{1.0, 0.0};
      for (std::size_t j = 0; j < len / 2; ++j) {
        const auto u = v[i + j];
        const auto t = w * v[i + j + len / 2];
        v[i + j] = u + t;
        v[i + j + len / 2] = u - t;
        w *= wn;
      }
    }
  }
  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n_);
    for (auto& x : v) x *= inv_n;
  }
}

std::vector<std::complex<double>> CkksEncoder::embed_to_complex(std::span<const double> m) const {
  if (m.size() > n_slots_) throw std::invalid_argument("encode: vector longer than slot count");
  // Evaluation vector with conjugate symmetry, then inverse transform and
  // untwist by zeta^-t.
  std::vector<std::complex<double>> v(n_, {0.0, 0.0});
  for (std::size_t j = 0; j < n_slots_; ++j) {
    const double mj = j < m.size() ? m[j] : 0.0;
    const std::size_t k = slot_to_eval_[j];
    v[k] = {mj, 0.0};
    v[n_ - 1 - k] = {mj, -0.0};  // conjugate pair
  }
  fft(v, true);
  for (std::size_t t = 0; t < n_; ++t) v[t] *= std::conj(zeta_[t]);
  return v;
}

CkksEncoder::Embedding CkksEncoder::embed_real(std::span<const double> m) const {
  auto u = embed_to_complex(m);
  Embedding e;
  e.coefficients.resize(n_);
  e.max_imag_residue = 0.0;
  for (std::size_t t = 0; t < n_; ++t) {
    e.coefficients[t] = u[t].real();
    e.max_imag_residue = std::max(e.max_imag_residue, std::abs(u[t].imag()));
  }
  return e;
}

RnsPoly CkksEncoder::encode(std::span<const double> m, int level, double scale) const {
  if (scale <= 0.0) throw std::invalid_argument("encode: non-positive scale");
  if (level < 0 || level > ctx_.max_level())
    throw std::invalid_argument("encode: level out of range");
  auto u = embed_to_complex(m);

  // Capacity check: coefficients must stay within (-Q_level/2, Q_level/2).
  double log2_capacity = -1.0;
  for (int i = 0; i <= level; ++i)
    log2_capacity += std::log2(static_cast<double>(ctx_.chain_modulus(i).q));

  std::vector<std::int64_t> coeffs(n_);
  for (std::size_t t = 0; t < n_; ++t) {
    const double scaled = u[t].real() * scale;
    if (std::abs(scaled) >= std::ldexp(1.0, 62) ||
        std::log2(std::abs(scaled) + 1.0) >= log2_capacity)
      throw std::overflow_error("encode: coefficient exceeds modulus capacity");
    coeffs[t] = static_cast<std::int64_t>(std::llround(scaled));
  }
  return ctx_.from_i64(coeffs, level + 1, false);
}

std::vector<double> CkksEncoder::decode(const RnsPoly& pt, double scale) const {
  if (pt.domain != PolyDomain::Coeff) throw std::invalid_argument("decode: need coeff domain");
  if (pt.has_special) throw std::invalid_argument("decode: unexpected special limb");
  const int k = pt.chain_limbs();

  // Exact CRT reconstruction, centered.
  mpz_class big_q = 1;
  for (int i = 0; i < k; ++i)
    big_q *= mpz_class(static_cast<unsigned long>(ctx_.chain_modulus(i).q));
  std::vector<mpz_class> m_hat(k);     // Q / q_i
  std::vector<u64> m_hat_inv(k);       // (Q/q_i)^-1 mod q_i
  for (int i = 0; i < k; ++i) {
    const Modulus& qi = ctx_.chain_modulus(i);
    m_hat[i] = big_q / static_cast<unsigned long>(qi.q);
    const u64 m_hat_mod = static_cast<u64>(mpz_class(m_hat[i] % static_cast<unsigned long>(qi.q))
                                               .get_ui());
    m_hat_inv[i] = qi.inv(m_hat_mod);
  }
  const mpz_class half_q = big_q / 2;

  std::vector<std::complex<double>> u(n_);
  mpz_class acc, term;
  for (std::size_t t = 0; t < n_; ++t) {
    acc = 0;
    for (int i = 0; i < k; ++i) {
      const Modulus& qi = ctx_.chain_modulus(i);
      const u64 c = qi.mul(pt.limbs[i][t], m_hat_inv[i]);
      term = m_hat[i] * static_cast<unsigned long>(c);
      acc += term;
    }
    acc %= big_q;
    if (acc > half_q) acc -= big_q;
    u[t] = {acc.get_d(), 0.0};
  }

  for (std::size_t t = 0; t < n_; ++t) u[t] *= zeta_[t];
  fft(u, false);
  std::vector<double> out(n_slots_);
  for (std::size_t j = 0; j < n_slots_; ++j) out[j] = u[slot_to_eval_[j]].real() / scale;
  return out;
}

}  // namespace helix
