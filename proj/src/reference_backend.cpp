// Copyright (c) 2026 The Helix Authors
// SPDX-License-Identifier: Apache-2.0

#include "helix/reference_backend.hpp"

#include <algorithm>

namespace helix {

struct ReferenceBackend::Payload final : CiphertextPayload, PlaintextPayload {
  std::vector<double> slots;
  explicit Payload(std::vector<double> s) : slots(std::move(s)) {}
};

ReferenceBackend::ReferenceBackend(CkksParams params) : params_(std::move(params)) {
  params_.validate();
}

void ReferenceBackend::generate_rotation_keys(std::span<const std::int64_t> amounts) {
  const auto n = static_cast<std::int64_t>(slots());
  for (std::int64_t a : amounts) rotation_keys_.insert(((a % n) + n) % n);
}

Plaintext ReferenceBackend::encode(std::span<const double> m, int level, const Scale& scale) {
  if (m.size() > slots()) throw std::invalid_argument("encode: vector longer than slot count");
  if (!scale.is_positive()) throw std::invalid_argument("encode: non-positive scale");
  if (level < 0 || level > params_.max_level)
    throw std::invalid_argument("encode: level out of range");
  std::vector<double> s(slots(), 0.0);
  std::copy(m.begin(), m.end(), s.begin());
  Plaintext pt;
  pt.payload = std::make_shared<Payload>(std::move(s));
  pt.level = level;
  pt.scale = scale;
  pt.slot_count = slots();
  return pt;
}

std::vector<double> ReferenceBackend::decode(const Plaintext& pt) {
  return static_cast<const Payload&>(*pt.payload).slots;
}

Ciphertext ReferenceBackend::encrypt(const Plaintext& pt) {
  return make_ct(static_cast<const Payload&>(*pt.payload).slots, pt.level, pt.scale);
}

std::vector<double> ReferenceBackend::decrypt(const Ciphertext& ct) { return slots_of(ct); }

const std::vector<double>& ReferenceBackend::slots_of(const Ciphertext& ct) const {
  return static_cast<const Payload&>(*ct.payload).slots;
}

Ciphertext ReferenceBackend::make_ct(std::vector<double> slots, int level, Scale scale) const {
  Ciphertext ct;
  ct.payload = std::make_shared<Payload>(std::move(slots));
  ct.level = level;
  ct.scale = std::move(scale);
  ct.slot_count = this->slots();
  ct.id = next_handle_id();
  return ct;
}

Ciphertext ReferenceBackend::add(const Ciphertext& a, const Ciphertext& b) {
  detail::require_same_level(a.level, b.level, "add");
  detail::require_same_scale(a.scale, b.scale, "add");
  std::vector<double> out = slots_of(a);
  const auto& bs = slots_of(b);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += bs[i];
  trace_.record(OpKind::CtAdd, a.level);
  return make_ct(std::move(out), a.level, a.scale);
}

Ciphertext ReferenceBackend::add_plain(const Ciphertext& a, const Plaintext& b) {
  detail::require_same_level(a.level, b.level, "add_plain");
  detail::require_same_scale(a.scale, b.scale, "add_plain");
  std::vector<double> out = slots_of(a);
  const auto& bs = static_cast<const Payload&>(*b.payload).slots;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += bs[i];
  trace_.record(OpKind::PtAdd, a.level);
  return make_ct(std::move(out), a.level, a.scale);
}

Ciphertext ReferenceBackend::mul(const Ciphertext& a, const Ciphertext& b) {
  detail::require_same_level(a.level, b.level, "mul");
  if (a.level < 1) throw LevelUnderflowError("mul: no level left for a following rescale");
  std::vector<double> out = slots_of(a);
  const auto& bs = slots_of(b);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= bs[i];
  trace_.record(OpKind::CtMul, a.level);
  return make_ct(std::move(out), a.level, a.scale * b.scale);
}

Ciphertext ReferenceBackend::mul_plain(const Ciphertext& a, const Plaintext& b) {
  detail::require_same_level(a.level, b.level, "mul_plain");
  if (a.level < 1) throw LevelUnderflowError("mul_plain: no level left for a following rescale");
  std::vector<double> out = slots_of(a);
  const auto& bs = static_cast<const Payload&>(*b.payload).slots;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= bs[i];
  trace_.record(OpKind::PtMul, a.level);
  return make_ct(std::move(out), a.level, a.scale * b.scale);
}

Ciphertext ReferenceBackend::rotate(const Ciphertext& a, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(slots());
  const std::int64_t r = ((k % n) + n) % n;
  if (r == 0) return make_ct(slots_of(a), a.level, a.scale);
  if (!rotation_keys_.contains(r))
    throw MissingRotationKeyError("rotate: no key for amount " + std::to_string(r));
  const auto& in = slots_of(a);
  std::vector<double> out(in.size());
  for (std::int64_t i = 0; i < n; ++i) out[i] = in[(i + r) % n];
  trace_.record(OpKind::Rotate, a.level);
  return make_ct(std::move(out), a.level, a.scale);
}

Ciphertext ReferenceBackend::rescale(const Ciphertext& a) {
  if (a.level < 1) throw LevelUnderflowError("rescale: no levels remain");
  const Scale delta = params_.delta();
  if (!(a.scale.log2() > delta.log2()))
    throw std::invalid_argument("rescale: scale not above Delta (no multiplication preceded)");
  // The tracked divisor is the top chain modulus at the current level.
  const Scale divisor = Scale::prime(modulus_at(a.level));
  trace_.record(OpKind::Rescale, a.level);
  return make_ct(slots_of(a), a.level - 1, a.scale / divisor);
}

Ciphertext ReferenceBackend::mod_down(const Ciphertext& a, int target_level) {
  if (target_level > a.level)
    throw std::invalid_argument("mod_down: target level above current level");
  if (target_level < 0) throw std::invalid_argument("mod_down: negative target level");
  if (target_level == a.level) return make_ct(slots_of(a), a.level, a.scale);
  trace_.record(OpKind::ModDown, a.level);
  return make_ct(slots_of(a), target_level, a.scale);
}

Ciphertext ReferenceBackend::bootstrap(const Ciphertext& a) {
  trace_.record(OpKind::Bootstrap, a.level);
  return make_ct(slots_of(a), params_.l_boot(), params_.delta());
}

}  // namespace helix
