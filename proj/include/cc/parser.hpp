#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cc/axioms.hpp"
#include "cc/kernel.hpp"

namespace cc {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct EqStatement {
  std::string name;  // empty for the goal
  Term lhs;
  Term rhs;
  bool hetero = true;  // == vs =
};

struct SubsingletonDecl {
  Term type;
  std::string proof_name;
};

// Parsed and elaborated problem. Axiom lines go to the axiom table's
// environment; var/def/hyp lines go to the context in order.
struct Problem {
  std::shared_ptr<AxiomTable> axioms;
  Context ctx;
  std::vector<EqStatement> hyps;
  std::vector<SubsingletonDecl> subsingletons;
  EqStatement goal;
  bool has_goal = false;
};

// Parses the line-oriented surface syntax:
//   axiom <name> : <term>
//   var <name> : <term>
//   def <name> : <term> := <term>
//   hyp <name> : <term> (== | =) <term>
//   subsingleton <term> by <proof-name>
//   goal <term> (== | =) <term>
// Terms: fun (x : T) .., Pi (x : T) .., T -> U, application, parentheses.
// Every declaration is kernel-checked during elaboration.
Problem parse_problem(const std::string& text);

// Parses a single term against an existing environment/context (used by
// tests and for round-trip checks). Throws ParseError on bad syntax.
Term parse_term(const std::string& text);

// Renders a problem back to the surface syntax.
std::string print_problem(const Problem& p);

}  // namespace cc
