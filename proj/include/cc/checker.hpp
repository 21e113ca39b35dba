#pragma once

#include <string>

#include "cc/kernel.hpp"

namespace cc {

struct CheckResult {
  bool ok = false;
  std::string message;  // on failure: inferred vs expected types
};

// Independent certificate check: infers the type of `proof` from scratch
// and compares it to `statement` up to definitional equality. Shares only
// the kernel with the proof producer.
CheckResult check_proof(const Term& proof, const Term& statement,
                        const Environment& env, const Context& ctx);

}  // namespace cc
