// Copyright (c) 2026 The Helix Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <vector>

#include "helix/backend.hpp"

namespace helix {

// Exact reference backend: slot payloads are plain double vectors carrying
// the message values, so every operation is bit-exact real arithmetic and
// "encryption" is a metadata change only. Level and scale bookkeeping follow
// the same rules the lattice backend enforces, with scales tracked exactly.
class ReferenceBackend final : public SlotBackend {
 public:
  explicit ReferenceBackend(CkksParams params);

  const CkksParams& params() const override { return params_; }
  OpTrace& trace() override { return trace_; }
  const RotationKeySet& rotation_keys() const override { return rotation_keys_; }
  void generate_rotation_keys(std::span<const std::int64_t> amounts) override;

  Plaintext encode(std::span<const double> m, int level, const Scale& scale) override;
  std::vector<double> decode(const Plaintext& pt) override;
  Ciphertext encrypt(const Plaintext& pt) override;
  std::vector<double> decrypt(const Ciphertext& ct) override;

  Ciphertext add(const Ciphertext& a, const Ciphertext& b) override;
  Ciphertext add_plain(const Ciphertext& a, const Plaintext& b) override;
  Ciphertext mul(const Ciphertext& a, const Ciphertext& b) override;
  Ciphertext mul_plain(const Ciphertext& a, const Plaintext& b) override;
  Ciphertext rotate(const Ciphertext& a, std::int64_t k) override;
  Ciphertext rescale(const Ciphertext& a) override;
  Ciphertext mod_down(const Ciphertext& a, int target_level) override;
  Ciphertext bootstrap(const Ciphertext& a) override;

 private:
  struct Payload;
  const std::vector<double>& slots_of(const Ciphertext& ct) const;
  Ciphertext make_ct(std::vector<double> slots, int level, Scale scale) const;

  CkksParams params_;
  OpTrace trace_;
  RotationKeySet rotation_keys_;
};

}  // namespace helix
