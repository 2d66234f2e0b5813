// Copyright (c) 2026 The Helix Authors
// SPDX-License-Identifier: Apache-2.0

#include "helix/params.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "helix/modmath.hpp"

namespace helix {

namespace {

bool is_pow2(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::string backend_name(BackendKind b) {
  return b == BackendKind::Reference ? "reference" : "lattice";
}

BackendKind backend_from_name(const std::string& s) {
  if (s == "reference") return BackendKind::Reference;
  if (s == "lattice") return BackendKind::Lattice;
  throw std::invalid_argument("unknown backend name: " + s);
}

}  // namespace

void CkksParams::validate() const {
  if (!is_pow2(ring_degree)) throw std::invalid_argument("params: N must be a power of two");
  if (max_level < 1) throw std::invalid_argument("params: L must be >= 1");
  if (delta_log2 <= 0) throw std::invalid_argument("params: delta_log2 must be positive");
  if (moduli.size() != static_cast<std::size_t>(max_level) + 1)
    throw std::invalid_argument("params: need exactly L+1 chain moduli");
  const std::uint64_t two_n = 2 * ring_degree;
  for (std::uint64_t q : moduli) {
    if (q % two_n != 1)
      throw std::invalid_argument("params: modulus " + std::to_string(q) + " is not 1 mod 2N");
    if (!is_prime_u64(q))
      throw std::invalid_argument("params: modulus " + std::to_string(q) + " is not prime");
  }
  for (std::uint64_t p : special_primes) {
    if (p % two_n != 1 || !is_prime_u64(p))
      throw std::invalid_argument("params: bad special prime " + std::to_string(p));
  }
  if (bootstrap_level > max_level)
    throw std::invalid_argument("params: L_boot exceeds L");
}

std::string CkksParams::to_json() const {
  nlohmann::json j;
  j["N"] = ring_degree;
  j["L"] = max_level;
  j["delta_log2"] = delta_log2;
  j["moduli"] = moduli;
  j["special_primes"] = special_primes;
  j["backend"] = backend_name(backend);
  j["mock_bootstrap"] = mock_bootstrap;
  j["insecure_toy"] = insecure_toy;
  if (bootstrap_level >= 0) j["L_boot"] = bootstrap_level;
  return j.dump(2);
}

CkksParams CkksParams::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CkksParams p;
  p.ring_degree = j.at("N").get<std::uint64_t>();
  p.max_level = j.at("L").get<int>();
  p.delta_log2 = j.at("delta_log2").get<int>();
  p.moduli = j.at("moduli").get<std::vector<std::uint64_t>>();
  if (j.contains("special_primes"))
    p.special_primes = j.at("special_primes").get<std::vector<std::uint64_t>>();
  if (j.contains("backend")) p.backend = backend_from_name(j.at("backend").get<std::string>());
  if (j.contains("mock_bootstrap")) p.mock_bootstrap = j.at("mock_bootstrap").get<bool>();
  if (j.contains("insecure_toy")) p.insecure_toy = j.at("insecure_toy").get<bool>();
  if (j.contains("L_boot")) p.bootstrap_level = j.at("L_boot").get<int>();
  p.validate();
  return p;
}

CkksParams CkksParams::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open params file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

void CkksParams::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write params file: " + path);
  out << to_json() << "\n";
}

CkksParams CkksParams::toy_lattice() {
  CkksParams p;
  p.ring_degree = 1ull << 12;
  p.max_level = 8;
  p.delta_log2 = 30;
  p.backend = BackendKind::Lattice;
  p.insecure_toy = true;
  const std::uint64_t two_n = 2 * p.ring_degree;
  // q_0 gets extra headroom so level-0 decodes of O(1) values stay exact.
  p.moduli = find_ntt_primes(1ull << 34, 1, two_n);
  auto rest = find_ntt_primes(1ull << 30, 8, two_n);
  p.moduli.insert(p.moduli.end(), rest.begin(), rest.end());
  p.special_primes = find_ntt_primes(1ull << 36, 1, two_n);
  p.validate();
  return p;
}

CkksParams CkksParams::reference_default(std::uint64_t ring_degree, int max_level) {
  CkksParams p;
  p.ring_degree = ring_degree;
  p.max_level = max_level;
  p.delta_log2 = 30;
  p.backend = BackendKind::Reference;
  const std::uint64_t two_n = 2 * p.ring_degree;
  p.moduli = find_ntt_primes(1ull << 30, static_cast<std::size_t>(max_level) + 1, two_n);
  p.special_primes = find_ntt_primes(1ull << 36, 1, two_n);
  p.validate();
  return p;
}

}  // namespace helix
