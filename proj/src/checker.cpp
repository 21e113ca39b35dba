#include "cc/checker.hpp"

namespace cc {

CheckResult check_proof(const Term& proof, const Term& statement,
                        const Environment& env, const Context& ctx) {
  Term inferred;
  try {
    inferred = infer_type(proof, env, ctx);
  } catch (const KernelError& e) {
    return {false, std::string("proof does not typecheck: ") + e.what()};
  }
  try {
    Term st_sort = infer_type(statement, env, ctx);
    (void)st_sort;
  } catch (const KernelError& e) {
    return {false, std::string("statement does not typecheck: ") + e.what()};
  }
  if (defeq(inferred, statement, env, ctx)) return {true, ""};
  return {false, "proof proves `" + show(normalize(inferred, env, ctx)) +
                     "` but the statement is `" +
                     show(normalize(statement, env, ctx)) + "`"};
}

}  // namespace cc
