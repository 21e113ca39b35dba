#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cc/term.hpp"

namespace cc {

// Typing assumption (no value) or definition (with value).
struct Declaration {
  std::string name;
  Term type;
  Term value;  // null for assumptions
};

class KernelError : public std::runtime_error {
 public:
  explicit KernelError(const std::string& msg) : std::runtime_error(msg) {}
};

// Ordered sequence of declarations with lookup by name. Used both for the
// global environment and for local contexts.
class Decls {
 public:
  void add(Declaration d);
  const Declaration* find(const std::string& name) const;
  const std::vector<Declaration>& all() const { return decls_; }
  std::size_t size() const { return decls_.size(); }

 private:
  std::vector<Declaration> decls_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

using Environment = Decls;
using Context = Decls;

// Full beta/delta/eta/zeta normalization (iota is vacuous: there are no
// inductive types in the kernel; equality constants are opaque axioms).
Term normalize(const Term& t, const Environment& env, const Context& ctx);

// Definitional equality: alpha-equality of normal forms.
bool defeq(const Term& a, const Term& b, const Environment& env,
           const Context& ctx);

// Type inference under the standard rules; throws KernelError on ill-typed
// or out-of-scope input, naming the offending subterm.
Term infer_type(const Term& t, const Environment& env, const Context& ctx);

// Validates a declaration against env/ctx before it is appended: the type
// must be well-formed and a value, when present, must check against it.
void check_decl(const Declaration& d, const Environment& env,
                const Context& ctx);

}  // namespace cc
