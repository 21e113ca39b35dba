#include "cc/driver.hpp"

#include <sstream>

#include "cc/checker.hpp"
#include "cc/parser.hpp"

namespace cc {

static void append_partition(std::ostringstream& out,
                             const SolveResult& res) {
  out << "partition:\n";
  for (const auto& cls : res.partition) {
    out << "  {";
    for (std::size_t i = 0; i < cls.size(); ++i)
      out << (i ? ", " : "") << cls[i];
    out << "}\n";
  }
}

DriverResult run_problem(const Problem& problem, const DriverOptions& opts) {
  DriverResult dr;
  std::ostringstream out;
  if (!problem.has_goal) {
    dr.status = DriverStatus::InputError;
    dr.report = "error: no goal\n";
    return dr;
  }

  SubsingletonRegistry registry;
  const Environment& env = problem.axioms->env();
  try {
    if (opts.use_subsingletons)
      for (const SubsingletonDecl& s : problem.subsingletons)
        registry.register_subsingleton(s.type, s.proof_name, *problem.axioms,
                                       problem.ctx);
    SubsingletonRegistry* reg = opts.use_subsingletons ? &registry : nullptr;
    FlatProblem fp = flatten(problem, reg);

    SolveOptions so;
    so.use_subsingletons = opts.use_subsingletons;
    so.check_invariants = opts.check_invariants;
    so.trace = opts.trace;
    Engine engine(fp, *problem.axioms, reg, so);
    dr.solve = engine.solve();

    if (opts.emit_partition) append_partition(out, dr.solve);
    if (!dr.solve.proved) {
      dr.status = DriverStatus::Unknown;
      out << "UNKNOWN\n";
      dr.report = out.str();
      return dr;
    }
    dr.statement = fp.goal_statement;
    dr.proof = fp.goal_hetero
                   ? dr.solve.goal_proof
                   : mk_proof_step(ProofStep::OfHeq, {dr.solve.goal_proof},
                                   env, fp.flat_ctx);
    if (opts.check) {
      CheckResult cr = check_proof(dr.proof, dr.statement, env, fp.flat_ctx);
      if (!cr.ok) {
        dr.status = DriverStatus::Rejected;
        out << "REJECTED: " << cr.message << "\n";
        dr.report = out.str();
        return dr;
      }
      out << "PROVED (certificate checked)\n";
    } else {
      out << "PROVED (certificate not checked)\n";
    }
    out << "proof: " << show(dr.proof) << "\n";
    dr.status = DriverStatus::Proved;
    dr.report = out.str();
    return dr;
  } catch (const KernelError& e) {
    dr.status = DriverStatus::InputError;
    dr.report = std::string("error: ") + e.what() + "\n";
    return dr;
  }
}

DriverResult run_text(const std::string& text, const DriverOptions& opts) {
  try {
    Problem p = parse_problem(text);
    return run_problem(p, opts);
  } catch (const ParseError& e) {
    DriverResult dr;
    dr.status = DriverStatus::InputError;
    dr.report = std::string("error: ") + e.what() + "\n";
    return dr;
  } catch (const KernelError& e) {
    DriverResult dr;
    dr.status = DriverStatus::InputError;
    dr.report = std::string("error: ") + e.what() + "\n";
    return dr;
  }
}

}  // namespace cc
