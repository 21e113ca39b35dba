#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cc {

enum class Kind : uint8_t { Var, Const, Sort, App, Lambda, Pi };

class TermNode;
using Term = std::shared_ptr<const TermNode>;

// Immutable term of the dependent lambda-calculus. Bound variables are
// de Bruijn indices; binder names are kept only as printing hints and do
// not participate in equality or hashing.
class TermNode {
public:
  Kind kind;
  int index = -1;     // Var
  std::string name;   // Const name; binder hint for Lambda/Pi
  Term left, right;   // App: fn/arg; Lambda/Pi: domain/body
  std::size_t hash = 0;
};

Term mk_var(int index, std::string hint = {});
Term mk_const(std::string name);
Term sort();
Term mk_app(Term fn, Term arg);
Term mk_app(Term fn, const std::vector<Term>& args);
Term mk_lambda(std::string hint, Term domain, Term body);
Term mk_pi(std::string hint, Term domain, Term body);
// Non-dependent function space A -> B (B is not lifted under the binder,
// so it must not contain loose indices relative to the binder).
Term mk_arrow(Term domain, Term codomain);

// Alpha-equivalence; structural on de Bruijn terms.
bool alpha_eq(const Term& a, const Term& b);

// Shift loose indices >= cutoff by amount.
Term lift(const Term& t, int amount, int cutoff = 0);

// Substitute de Bruijn index 0 of a binder body and lower the others.
Term instantiate(const Term& body, const Term& value);

// Replace every occurrence of Const(name) with the appropriate de Bruijn
// index so the result can be wrapped in a binder (index 0 at depth 0).
Term abstract_const(const Term& t, const std::string& name);

bool has_loose_var(const Term& t, int index);
bool mentions_const(const Term& t, const std::string& name);

// Decompose nested applications into head and argument list.
std::pair<Term, std::vector<Term>> decompose_app(const Term& t);

// Pretty-printer for the surface syntax; print/parse round-trips up to alpha.
std::string show(const Term& t);

}  // namespace cc
