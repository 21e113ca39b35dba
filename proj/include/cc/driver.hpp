#pragma once

#include <iosfwd>
#include <string>

#include "cc/engine.hpp"

namespace cc {

struct DriverOptions {
  bool use_subsingletons = true;
  bool check = true;
  bool check_invariants = false;
  bool emit_partition = false;
  std::ostream* trace = nullptr;
};

// 0 proved and certificate checked (or --no-check), 1 not provable by
// congruence closure, 2 input error, 3 certificate rejected.
enum class DriverStatus { Proved = 0, Unknown = 1, InputError = 2, Rejected = 3 };

struct DriverResult {
  DriverStatus status = DriverStatus::Unknown;
  std::string report;      // human-readable outcome, ends with newline
  Term proof;              // final (possibly ofeq-wrapped) proof when proved
  Term statement;          // goal statement the proof was checked against
  SolveResult solve;       // engine output (valid unless InputError)
};

// Solves a parsed problem end to end: registers subsingletons, flattens,
// runs the closure, reconstructs and optionally checks the goal proof.
DriverResult run_problem(const Problem& problem, const DriverOptions& opts);

// Parses and solves; parse/elaboration failures yield InputError.
DriverResult run_text(const std::string& text, const DriverOptions& opts);

}  // namespace cc
