// Copyright (c) 2026 The Helix Authors
// SPDX-License-Identifier: Apache-2.0

#include "helix/trace.hpp"

#include <json.hpp>

namespace helix {

const char* op_kind_name(OpKind k) {
  switch (k) {
    case OpKind::CtAdd: return "ct_add";
    case OpKind::PtAdd: return "pt_add";
    case OpKind::CtMul: return "ct_mul";
    case OpKind::PtMul: return "pt_mul";
    case OpKind::Rotate: return "rotate";
    case OpKind::Rescale: return "rescale";
    case OpKind::ModDown: return "mod_down";
    case OpKind::Bootstrap: return "bootstrap";
    default: return "unknown";
  }
}

std::string OpTrace::to_json(std::uint64_t modeled_int_ops, std::uint64_t modeled_bytes) const {
  nlohmann::json j;
  for (int i = 0; i < static_cast<int>(OpKind::kCount); ++i) {
    j["counts"][op_kind_name(static_cast<OpKind>(i))] = count(static_cast<OpKind>(i));
  }
  j["modeled_int_ops"] = modeled_int_ops;
  j["modeled_bytes"] = modeled_bytes;
  return j.dump(2);
}

}  // namespace helix
