// Copyright (c) 2026 The Helix Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>

namespace helix {

enum class OpKind : int {
  CtAdd = 0,
  PtAdd,
  CtMul,
  PtMul,
  Rotate,
  Rescale,
  ModDown,
  Bootstrap,
  kCount
};

const char* op_kind_name(OpKind k);

// Session-global homomorphic operation counters. Increments are lock-free;
// the per-(op, level) histogram feeds the roofline trace model. Counters are
// monotone within a session; reset() is the only way down.
class OpTrace {
 public:
  void record(OpKind kind, int level) {
    counts_[static_cast<int>(kind)].fetch_add(1, std::memory_order_relaxed);
    std::lock_guard<std::mutex> lock(hist_mutex_);
    ++level_histogram_[{kind, level}];
  }

  std::uint64_t count(OpKind kind) const {
    return counts_[static_cast<int>(kind)].load(std::memory_order_relaxed);
  }

  // (op, input level) -> occurrences. Snapshot copy.
  std::map<std::pair<OpKind, int>, std::uint64_t> level_histogram() const {
    std::lock_guard<std::mutex> lock(hist_mutex_);
    return level_histogram_;
  }

  void reset() {
    for (auto& c : counts_) c.store(0, std::memory_order_relaxed);
    std::lock_guard<std::mutex> lock(hist_mutex_);
    level_histogram_.clear();
  }

  // Counter dump with the canonical key names; modeled totals are appended
  // when provided (they come from the roofline cost model).
  std::string to_json(std::uint64_t modeled_int_ops = 0, std::uint64_t modeled_bytes = 0) const;

 private:
  std::array<std::atomic<std::uint64_t>, static_cast<int>(OpKind::kCount)> counts_{};
  mutable std::mutex hist_mutex_;
  std::map<std::pair<OpKind, int>, std::uint64_t> level_histogram_;
};

// Plain snapshot of all counters, for scoped per-kernel deltas.
struct TraceSnapshot {
  std::array<std::uint64_t, static_cast<int>(OpKind::kCount)> counts{};

  static TraceSnapshot take(const OpTrace& t) {
    TraceSnapshot s;
    for (int i = 0; i < static_cast<int>(OpKind::kCount); ++i)
      s.counts[i] = t.count(static_cast<OpKind>(i));
    return s;
  }

  std::uint64_t delta(const OpTrace& t, OpKind k) const {
    return t.count(k) - counts[static_cast<int>(k)];
  }
};

}  // namespace helix
