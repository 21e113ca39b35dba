#pragma once

#include <deque>
#include <iosfwd>
#include <unordered_map>
#include <unordered_set>

#include "cc/flatten.hpp"

namespace cc {

enum class EqReason { Hypothesis, Congruence, Subsingleton };

// A processed equality: proof term for term(lhs) == term(rhs).
struct EqProofRec {
  int lhs = -1;
  int rhs = -1;
  Term proof;
  std::string name;
  EqReason reason = EqReason::Hypothesis;
};

struct PrEdge {
  int target = -1;
  EqProofRec proof;
};

// Union-find with circular per-class lists and a proof forest.
struct CCState {
  std::vector<int> repr;
  std::vector<int> next;
  std::vector<int> size;
  std::vector<PrEdge> pr;
  std::vector<char> initialized;

  bool same_class(int a, int b) const { return repr[a] == repr[b]; }
};

// Proposition-1 congruence test over the current partition: arguments in
// the same class, and the functions either homogeneously equal (same class
// with definitionally equal types) or recursively congruent.
bool congruent(const CCState& st, const FlatProblem& fp, int d, int e);

// Congruence-respecting hash: combines the term hashes of the two
// representatives. congruent(d, e) implies congrhash(d) == congrhash(e).
std::size_t congrhash(const CCState& st, const FlatProblem& fp, int d);

struct SolveOptions {
  bool use_subsingletons = true;
  bool check_invariants = false;
  std::ostream* trace = nullptr;
};

struct SolveResult {
  bool proved = false;
  Term goal_proof;  // heterogeneous proof of term(goal_lhs) == term(goal_rhs)
  std::vector<EqProofRec> processed;  // all equalities seen, in order
  std::vector<std::vector<std::string>> partition;  // sorted classes
  std::size_t congrtable_size = 0;
  int invariant_violations = 0;
  int irredundancy_violations = 0;
};

class Engine {
 public:
  Engine(const FlatProblem& fp, AxiomTable& axioms,
         const SubsingletonRegistry* registry, SolveOptions options);

  SolveResult solve();

  const CCState& state() const { return st_; }
  bool same_class(int a, int b) const { return st_.same_class(a, b); }
  // Transitivity proof through the proof forest (tests and goal answer).
  Term prove(int a, int b);

 private:
  struct Pending {
    bool is_eq = false;
    int var = -1;
    EqProofRec eq;
  };

  void initialize(int v);
  void processeq(const EqProofRec& rec);
  void init_uselist(int def_var, int parent);
  void add_use(int repr_var, int def_var);
  void remove_uses(int r);
  void reinsert_uses(int r);
  void flip_proofs(int a);
  void enqueue_congruence(int d, int e);
  void subsingleton_init_hook(int v);
  void subsingleton_merge_hook(int old_repr, int new_repr,
                               std::vector<int> old_entries);
  void check_invariants_now();
  std::string fresh_eq_name();
  void trace_merge(int a, int b, EqReason reason);

  const FlatProblem& fp_;
  AxiomTable& axioms_;
  const SubsingletonRegistry* registry_;
  SolveOptions options_;
  CCState st_;

  struct TableHash {
    const Engine* e;
    std::size_t operator()(int d) const {
      return congrhash(e->st_, e->fp_, d);
    }
  };
  struct TableEq {
    const Engine* e;
    bool operator()(int d1, int d2) const {
      return congruent(e->st_, e->fp_, d1, d2);
    }
  };
  std::unordered_set<int, TableHash, TableEq> congrtable_;
  std::vector<std::vector<int>> uselists_;  // keyed by representative
  std::deque<Pending> pending_;
  std::vector<EqProofRec> processed_;
  int eq_counter_ = 0;
  int invariant_violations_ = 0;
  int irredundancy_violations_ = 0;

  // Subsingleton extension state, aligned with the registry entries.
  std::vector<int> subrep_;  // member var with exactly the entry's type
  std::unordered_map<int, std::vector<int>> sub_entries_by_repr_;
};

}  // namespace cc
