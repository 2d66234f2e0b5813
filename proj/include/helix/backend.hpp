// Copyright (c) 2026 The Helix Authors
// SPDX-License-Identifier: Apache-2.0
//
// The backend-neutral slot-vector contract. Kernels are written against
// SlotOps and can therefore only use the operations CKKS permits: encode,
// add, multiply, rotate, rescale, mod-down, bootstrap. Key material and
// decryption live on the wider SlotBackend surface that kernels never see.

#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "helix/params.hpp"
#include "helix/scale.hpp"
#include "helix/trace.hpp"

namespace helix {

struct CiphertextPayload {
  virtual ~CiphertextPayload() = default;
};
struct PlaintextPayload {
  virtual ~PlaintextPayload() = default;
};

inline std::uint64_t next_handle_id() {
  static std::atomic<std::uint64_t> counter{0};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

// Value-like handle; the payload is shared and immutable, so copies are cheap
// and handles may move freely between threads.
struct Ciphertext {
  std::shared_ptr<const CiphertextPayload> payload;
  int level = 0;
  Scale scale;
  std::uint64_t slot_count = 0;
  std::uint64_t id = 0;
};

struct Plaintext {
  std::shared_ptr<const PlaintextPayload> payload;
  int level = 0;
  Scale scale;
  std::uint64_t slot_count = 0;
};

// Rotation amounts (mod n) for which switching keys exist. Rotating by an
// unregistered amount is an error, never a silent fallback.
class RotationKeySet {
 public:
  void insert(std::int64_t amount_mod_n) { amounts_.insert(amount_mod_n); }
  bool contains(std::int64_t amount_mod_n) const { return amounts_.count(amount_mod_n) > 0; }
  const std::set<std::int64_t>& amounts() const { return amounts_; }

 private:
  std::set<std::int64_t> amounts_;
};

class LevelMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class ScaleMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class MissingRotationKeyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class LevelUnderflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The seven operations kernels may use, plus read-only parameter/trace/key
// introspection. Implementations are immutable after key generation; all
// operations allocate their outputs and never mutate inputs.
class SlotOps {
 public:
  virtual ~SlotOps() = default;

  virtual const CkksParams& params() const = 0;
  virtual OpTrace& trace() = 0;
  virtual const RotationKeySet& rotation_keys() const = 0;

  // Zero-pads m to n slots. Errors: |m| > n, non-positive scale, level out of
  // range.
  virtual Plaintext encode(std::span<const double> m, int level, const Scale& scale) = 0;
  virtual std::vector<double> decode(const Plaintext& pt) = 0;

  // Equal level and equal scale required.
  virtual Ciphertext add(const Ciphertext& a, const Ciphertext& b) = 0;
  virtual Ciphertext add_plain(const Ciphertext& a, const Plaintext& b) = 0;

  // Equal level and level >= 1 required; output scale is the product of the
  // operand scales; callers rescale explicitly.
  virtual Ciphertext mul(const Ciphertext& a, const Ciphertext& b) = 0;
  virtual Ciphertext mul_plain(const Ciphertext& a, const Plaintext& b) = 0;

  // Left cyclic shift by k slots: out[i] = in[(i + k) mod n]. k = 0 (mod n)
  // is the identity and needs no key.
  virtual Ciphertext rotate(const Ciphertext& a, std::int64_t k) = 0;

  // Drops one level and divides the scale by q_level. Requires level >= 1 and
  // scale > Delta.
  virtual Ciphertext rescale(const Ciphertext& a) = 0;

  // Drops to target_level; scale and slot values unchanged.
  virtual Ciphertext mod_down(const Ciphertext& a, int target_level) = 0;

  // Level refresh to L_boot with slot values preserved; output scale Delta.
  virtual Ciphertext bootstrap(const Ciphertext& a) = 0;

  std::uint64_t slots() const { return params().slot_count(); }

  std::uint64_t modulus_at(int level) const {
    const auto& m = params().moduli;
    if (level < 0 || static_cast<std::size_t>(level) >= m.size())
      throw std::out_of_range("modulus_at: level out of range");
    return m[static_cast<std::size_t>(level)];
  }
};

// Full backend surface: key generation plus the client-side encrypt/decrypt
// path used by tests and the CLI.
class SlotBackend : public SlotOps {
 public:
  virtual void generate_rotation_keys(std::span<const std::int64_t> amounts) = 0;
  virtual Ciphertext encrypt(const Plaintext& pt) = 0;
  virtual std::vector<double> decrypt(const Ciphertext& ct) = 0;
};

// Shared precondition checks.
namespace detail {

inline void require_same_level(int la, int lb, const char* what) {
  if (la != lb)
    throw LevelMismatchError(std::string(what) + ": level mismatch (" + std::to_string(la) +
                             " vs " + std::to_string(lb) + ")");
}

inline void require_same_scale(const Scale& a, const Scale& b, const char* what) {
  if (a != b)
    throw ScaleMismatchError(std::string(what) + ": scale mismatch (" + a.str() + " vs " +
                             b.str() + ")");
}

}  // namespace detail

}  // namespace helix
