#include "cc/flatten.hpp"

#include <algorithm>

namespace cc {

Flattener::Flattener(const Problem& problem, SubsingletonRegistry* registry)
    : problem_(problem), registry_(registry) {
  for (const Declaration& d : problem.ctx.all()) fp_.flat_ctx.add(d);
}

Term Flattener::node_type(int id) const {
  return fp_.vars[static_cast<std::size_t>(id)].type;
}

// Number of local-definition links peeled when this node's spine is
// unwound down to a non-definition head.
static int def_depth(const FlatProblem& fp, int id) {
  int d = 0;
  while (fp.vars[static_cast<std::size_t>(id)].is_def) {
    ++d;
    id = fp.vars[static_cast<std::size_t>(id)].fn;
  }
  return d;
}

void Flattener::finish_node(int id) {
  const Environment& env = problem_.axioms->env();
  Term t = fp_.vars[static_cast<std::size_t>(id)].term;
  Term ty = normalize(infer_type(t, env, fp_.flat_ctx), env, fp_.flat_ctx);
  int tv = flatten_term(ty);
  FlatVar& x = fp_.vars[static_cast<std::size_t>(id)];
  x.type = ty;
  x.type_var = tv;
  fp_.entries.push_back(FlatEntry{false, id, -1});
}

int Flattener::new_atom_node(const Term& t, const std::string& name) {
  for (int id : atoms_[t->hash])
    if (alpha_eq(fp_.vars[static_cast<std::size_t>(id)].term, t)) {
      if (!name.empty()) by_name_[name] = id;
      return id;
    }
  int id = static_cast<int>(fp_.vars.size());
  FlatVar x;
  x.id = id;
  x.name = name;
  x.term = t;
  fp_.vars.push_back(std::move(x));
  atoms_[t->hash].push_back(id);
  if (!name.empty()) by_name_[name] = id;
  finish_node(id);
  return id;
}

int Flattener::new_app_node(int fn, int arg, const std::string& forced_name) {
  long long key = (static_cast<long long>(fn) << 32) |
                  static_cast<long long>(static_cast<unsigned>(arg));
  if (auto it = by_app_.find(key); it != by_app_.end()) {
    if (!forced_name.empty()) by_name_[forced_name] = it->second;
    return it->second;
  }
  int id = static_cast<int>(fp_.vars.size());
  FlatVar x;
  x.id = id;
  x.name = forced_name.empty() ? "c!" + std::to_string(gen_counter_++)
                               : forced_name;
  x.term = mk_const(x.name);
  x.is_def = true;
  x.fn = fn;
  x.arg = arg;
  Term value = mk_app(fp_.vars[static_cast<std::size_t>(fn)].term,
                      fp_.vars[static_cast<std::size_t>(arg)].term);
  if (forced_name.empty()) {
    const Environment& env = problem_.axioms->env();
    Term ty = infer_type(value, env, fp_.flat_ctx);
    fp_.flat_ctx.add(Declaration{x.name, ty, value});
  }
  fp_.vars.push_back(std::move(x));
  by_app_[key] = id;
  by_name_[fp_.vars[static_cast<std::size_t>(id)].name] = id;
  fp_.max_spine = std::max(fp_.max_spine, def_depth(fp_, id));
  finish_node(id);
  return id;
}

int Flattener::flatten_const(const std::string& name) {
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  const Declaration* d = fp_.flat_ctx.find(name);
  if (!d) d = problem_.axioms->env().find(name);
  if (!d) throw KernelError("flatten: unknown constant `" + name + "`");
  if (d->value) {
    int id;
    if (d->value->kind == Kind::App) {
      auto [head, args] = decompose_app(d->value);
      int cur = flatten_term(head);
      for (std::size_t i = 0; i < args.size(); ++i)
        cur = new_app_node(cur, flatten_term(args[i]),
                           i + 1 == args.size() ? name : "");
      id = cur;
    } else {
      id = flatten_term(d->value);
    }
    by_name_[name] = id;
    return id;
  }
  return new_atom_node(mk_const(name), name);
}

int Flattener::flatten_term(const Term& t) {
  switch (t->kind) {
    case Kind::Const:
      return flatten_const(t->name);
    case Kind::App: {
      auto [head, args] = decompose_app(t);
      int cur = flatten_term(head);
      for (const Term& a : args) cur = new_app_node(cur, flatten_term(a), "");
      return cur;
    }
    case Kind::Var:
      throw KernelError("flatten: loose bound variable");
    default:  // Sort, Lambda, Pi: opaque atoms shared up to alpha
      return new_atom_node(t, "");
  }
}

FlatProblem Flattener::run() {
  const Environment& env = problem_.axioms->env();
  if (registry_)
    for (const SubsingletonRegistry::Entry& e : registry_->entries())
      fp_.subsingleton_type_vars.push_back(flatten_term(e.type));
  for (const EqStatement& h : problem_.hyps) {
    int l = flatten_term(h.lhs);
    int r = flatten_term(h.rhs);
    Term proof = h.hetero ? mk_const(h.name)
                          : mk_proof_step(ProofStep::OfEq,
                                          {mk_const(h.name)}, env,
                                          fp_.flat_ctx);
    int ei = static_cast<int>(fp_.eqs.size());
    fp_.eqs.push_back(FlatEq{h.name, l, r, proof});
    fp_.entries.push_back(FlatEntry{true, -1, ei});
  }
  if (problem_.has_goal) {
    fp_.goal_lhs = flatten_term(problem_.goal.lhs);
    fp_.goal_rhs = flatten_term(problem_.goal.rhs);
    fp_.goal_hetero = problem_.goal.hetero;
    Term tl = normalize(infer_type(problem_.goal.lhs, env, fp_.flat_ctx), env,
                        fp_.flat_ctx);
    Term tr = normalize(infer_type(problem_.goal.rhs, env, fp_.flat_ctx), env,
                        fp_.flat_ctx);
    fp_.goal_statement =
        fp_.goal_hetero
            ? mk_heq(tl, tr, problem_.goal.lhs, problem_.goal.rhs)
            : mk_eq(tl, problem_.goal.lhs, problem_.goal.rhs);
  }
  return std::move(fp_);
}

FlatProblem flatten(const Problem& problem, SubsingletonRegistry* registry) {
  return Flattener(problem, registry).run();
}

}  // namespace cc
