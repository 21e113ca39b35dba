#pragma once

#include "cc/engine.hpp"

namespace cc {

// Builds explicit proof terms from the proof forest and the hcongr family.
// Reads a frozen view of the engine state; never mutates it.
class ProofBuilder {
 public:
  ProofBuilder(const FlatProblem& fp, const CCState& st, AxiomTable& axioms,
               int* irredundancy_violations = nullptr)
      : fp_(fp),
        st_(st),
        axioms_(axioms),
        irredundancy_violations_(irredundancy_violations) {}

  // Proof of term(a) == term(b); requires a ~ b (throws otherwise).
  Term mkpr(int a, int b);

  // Congruence proof for the local definitions d and e; `es` proves the
  // already-peeled argument pairs in spine order (outermost first).
  Term mkcongr(int d, int e, std::vector<EqProofRec> es);

  // Proof of a == target^n[a] along the proof forest path.
  Term mktrans(int a, int n);

 private:
  struct Endpoint {
    Term proof;
    int end;
  };
  Endpoint mktrans_rec(int a, int n);
  Term hrefl_of(int v) const;
  Term hsymm_of(const Term& proof, int lhs, int rhs) const;
  Term htrans_of(const Term& p, const Term& q, int a, int b, int c) const;

  const FlatProblem& fp_;
  const CCState& st_;
  AxiomTable& axioms_;
  int* irredundancy_violations_;
};

}  // namespace cc
