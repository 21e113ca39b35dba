#pragma once

#include <string>
#include <vector>

#include "cc/kernel.hpp"

namespace cc {

// Names of the fixed equality constants installed by AxiomTable.
namespace names {
inline constexpr const char* eq = "eq";
inline constexpr const char* refl = "refl";
inline constexpr const char* erec = "erec";
inline constexpr const char* heq = "heq";
inline constexpr const char* hrefl = "hrefl";
inline constexpr const char* hsymm = "hsymm";
inline constexpr const char* htrans = "htrans";
inline constexpr const char* ofeq = "ofeq";
inline constexpr const char* ofheq = "ofheq";
}  // namespace names

// eq T a b  /  heq TA TB a b, fully applied.
Term mk_eq(const Term& type, const Term& a, const Term& b);
Term mk_heq(const Term& type_a, const Term& type_b, const Term& a,
            const Term& b);

// Trusted axiom store: the fixed equality constants plus generated
// hcongr_n and hsse entries. Every statement is kernel-checked on entry.
class AxiomTable {
 public:
  AxiomTable();

  const Environment& env() const { return env_; }

  // User-facing declarations (problem-file `axiom` lines and elaborated
  // hypothesis assumptions live in the context, not here).
  void add_axiom(const std::string& name, const Term& statement);

  // Generated n-ary congruence lemma; cached per arity. Throws on n < 1.
  const std::string& hcongr(int n);
  bool has_hcongr(int n) const;

  // hsse axiom for a subsingleton type A; statements may mention context
  // constants, so they are checked against the supplied context.
  std::string add_hsse(const Term& subsingleton_type, const Context& ctx);

 private:
  Environment env_;
  std::vector<std::string> hcongr_names_;  // index n-1
  int hsse_counter_ = 0;
};

// Registered subsingleton types with their supplied proofs and derived
// hsse axioms. Lookup is by alpha-equality of the normalized type.
class SubsingletonRegistry {
 public:
  struct Entry {
    Term type;  // normalized
    std::string sse_name;
    std::string hsse_name;
  };

  // Requires `sse_proof_name` to denote a proof of `Pi (a b : A), a = b`;
  // throws KernelError otherwise. Idempotent per normalized type.
  const Entry& register_subsingleton(const Term& type,
                                     const std::string& sse_proof_name,
                                     AxiomTable& axioms, const Context& ctx);

  const Entry* find(const Term& normalized_type) const;
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

enum class ProofStep { Refl, HRefl, HSymm, HTrans, OfEq, OfHeq };

// Builds the fully applied axiom term for one proof step, inferring the
// type arguments from the supplied arguments.
Term mk_proof_step(ProofStep kind, const std::vector<Term>& args,
                   const Environment& env, const Context& ctx);

}  // namespace cc
