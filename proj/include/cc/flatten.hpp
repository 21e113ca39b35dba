#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cc/parser.hpp"

namespace cc {

// One node of the flattened problem DAG. Applications are curried local
// definitions `c := f a`; everything else (context assumptions, global
// constants, lambda/Pi subterms, Type) is an atom.
struct FlatVar {
  int id = -1;
  std::string name;   // surface name, or generated `c!k`; empty for atoms
  Term term;          // term used when this node appears in a proof
  Term type;          // normalized type
  int type_var = -1;  // node naming the normalized type
  bool is_def = false;
  int fn = -1;   // LocalDef only
  int arg = -1;  // LocalDef only
};

struct FlatEq {
  std::string name;  // hypothesis name or generated `e!k`
  int lhs = -1;
  int rhs = -1;
  Term proof;  // proof of term(lhs) == term(rhs)
};

// Processing order for the engine's pending queue: variable
// initializations and equality proofs interleaved in context order.
struct FlatEntry {
  bool is_eq = false;
  int var = -1;
  int eq_index = -1;  // into FlatProblem::eqs
};

struct FlatProblem {
  std::vector<FlatVar> vars;
  std::vector<FlatEq> eqs;
  std::vector<FlatEntry> entries;
  int goal_lhs = -1;
  int goal_rhs = -1;
  // Original (unflattened) goal statement for the checker.
  Term goal_statement;
  bool goal_hetero = true;
  // Original context extended with generated local definitions; emitted
  // proofs are checked against it.
  Context flat_ctx;
  // Longest application spine; bounds the hcongr arity ever needed.
  int max_spine = 1;
  // Flat vars of registered subsingleton types, parallel to the registry.
  std::vector<int> subsingleton_type_vars;
};

// Names every proper subterm of both goal sides and both sides of every
// equality hypothesis with curried local definitions, converts homogeneous
// hypotheses/goals to heterogeneous form, and flattens the normalized type
// of every node so types participate in the closure.
class Flattener {
 public:
  Flattener(const Problem& problem, SubsingletonRegistry* registry);

  FlatProblem run();

  // Exposed for tests: flatten one term, returning its node.
  int flatten_term(const Term& t);
  FlatProblem& result() { return fp_; }

 private:
  int flatten_const(const std::string& name);
  int new_app_node(int fn, int arg, const std::string& forced_name);
  int new_atom_node(const Term& t, const std::string& name);
  void finish_node(int id);
  Term node_type(int id) const;

  const Problem& problem_;
  SubsingletonRegistry* registry_;
  FlatProblem fp_;
  std::unordered_map<std::string, int> by_name_;
  std::unordered_map<long long, int> by_app_;
  // Atoms deduplicated up to alpha-equality (hash buckets + alpha_eq).
  std::unordered_map<std::size_t, std::vector<int>> atoms_;
  int gen_counter_ = 0;
};

FlatProblem flatten(const Problem& problem, SubsingletonRegistry* registry);

}  // namespace cc
