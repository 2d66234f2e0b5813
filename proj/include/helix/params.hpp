// Copyright (c) 2026 The Helix Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "helix/scale.hpp"

namespace helix {

enum class BackendKind { Reference, Lattice };

// Parameter set shared by both backends. The reference backend only uses the
// metadata (N, L, Delta, chain moduli); the lattice backend additionally
// requires NTT-friendly moduli and the insecure_toy acknowledgement.
struct CkksParams {
  std::uint64_t ring_degree = 0;        // N, power of two
  int max_level = 0;                    // L
  int delta_log2 = 0;                   // Delta = 2^delta_log2
  std::vector<std::uint64_t> moduli;    // q_0 .. q_L
  std::vector<std::uint64_t> special_primes;
  BackendKind backend = BackendKind::Reference;
  bool mock_bootstrap = true;
  bool insecure_toy = false;            // must be true to build a lattice backend
  int bootstrap_level = -1;             // L_boot; -1 means L

  std::uint64_t slot_count() const { return ring_degree / 2; }
  Scale delta() const { return Scale::pow2(delta_log2); }
  int l_boot() const { return bootstrap_level < 0 ? max_level : bootstrap_level; }

  // Throws std::invalid_argument when an invariant is broken: N a power of
  // two, |moduli| = L+1, every modulus = 1 (mod 2N).
  void validate() const;

  std::string to_json() const;
  static CkksParams from_json(const std::string& text);
  static CkksParams load(const std::string& path);
  void save(const std::string& path) const;

  // Desk-scale lattice parameters: N = 2^12, L = 8, Delta = 2^30, ~30-bit
  // chain primes (q_0 widened to 34 bits for level-0 headroom), one 36-bit
  // special prime.
  static CkksParams toy_lattice();

  // Reference-backend defaults at transformer benchmarking width
  // (N = 2^16, n = 2^15).
  static CkksParams reference_default(std::uint64_t ring_degree = 1ull << 16, int max_level = 20);
};

}  // namespace helix
