#include "cc/axioms.hpp"

#include <sstream>

namespace cc {

Term mk_eq(const Term& type, const Term& a, const Term& b) {
  return mk_app(mk_const(names::eq), {type, a, b});
}

Term mk_heq(const Term& type_a, const Term& type_b, const Term& a,
            const Term& b) {
  return mk_app(mk_const(names::heq), {type_a, type_b, a, b});
}

namespace {

using Binder = std::pair<std::string, Term>;

Term close(const std::vector<Binder>& binders, Term body, bool pi) {
  Term acc = std::move(body);
  for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
    acc = abstract_const(acc, it->first);
    acc = pi ? mk_pi(it->first, it->second, acc)
             : mk_lambda(it->first, it->second, acc);
  }
  return acc;
}

Term close_pi(const std::vector<Binder>& binders, Term body) {
  return close(binders, std::move(body), true);
}

Term c(const std::string& n) { return mk_const(n); }

// Statement of hcongr_n per the dependent telescope schema.
Term hcongr_statement(int n) {
  auto A = [](int i) { return "A" + std::to_string(i); };
  auto a = [](int i) { return "a" + std::to_string(i); };
  auto b = [](int i) { return "b" + std::to_string(i); };
  auto e = [](int i) { return "e" + std::to_string(i); };

  // A_i applied to the first i-1 variables of a telescope vs.
  auto arg_type = [&](int i, auto vs) {
    std::vector<Term> args;
    for (int j = 1; j < i; ++j) args.push_back(c(vs(j)));
    return mk_app(c(A(i)), args);
  };
  auto telescope = [&](int upto) {
    std::vector<Binder> tel;
    for (int j = 1; j <= upto; ++j) tel.emplace_back(a(j), arg_type(j, a));
    return tel;
  };

  std::vector<Binder> bs;
  for (int i = 1; i <= n; ++i)
    bs.emplace_back(A(i), close_pi(telescope(i - 1), sort()));
  bs.emplace_back("B", close_pi(telescope(n), sort()));

  std::vector<Term> as, vbs;
  for (int j = 1; j <= n; ++j) as.push_back(c(a(j)));
  for (int j = 1; j <= n; ++j) vbs.push_back(c(b(j)));

  Term fun_type = close_pi(telescope(n), mk_app(c("B"), as));
  bs.emplace_back("f", fun_type);
  bs.emplace_back("g", fun_type);
  bs.emplace_back("e0", mk_eq(fun_type, c("f"), c("g")));
  for (int i = 1; i <= n; ++i) {
    bs.emplace_back(a(i), arg_type(i, a));
    bs.emplace_back(b(i), arg_type(i, b));
    bs.emplace_back(e(i), mk_heq(arg_type(i, a), arg_type(i, b), c(a(i)),
                                 c(b(i))));
  }
  Term conclusion = mk_heq(mk_app(c("B"), as), mk_app(c("B"), vbs),
                           mk_app(c("f"), as), mk_app(c("g"), vbs));
  return close_pi(bs, conclusion);
}

}  // namespace

AxiomTable::AxiomTable() {
  Term ty = sort();
  // eq : Pi (A : Type), A -> A -> Type
  env_.add({names::eq,
            close_pi({{"A", ty}}, mk_arrow(c("A"), mk_arrow(c("A"), ty))),
            nullptr});
  // refl : Pi (A : Type) (a : A), eq A a a
  env_.add({names::refl,
            close_pi({{"A", ty}, {"a", c("A")}}, mk_eq(c("A"), c("a"), c("a"))),
            nullptr});
  // erec : Pi (A : Type) (a : A) (C : A -> Type), C a -> Pi (b : A), eq A a b -> C b
  env_.add({names::erec,
            close_pi({{"A", ty},
                      {"a", c("A")},
                      {"C", mk_arrow(c("A"), ty)},
                      {"h", mk_app(c("C"), c("a"))},
                      {"b", c("A")},
                      {"e", mk_eq(c("A"), c("a"), c("b"))}},
                     mk_app(c("C"), c("b"))),
            nullptr});
  // heq : Pi (A B : Type), A -> B -> Type
  env_.add({names::heq,
            close_pi({{"A", ty}, {"B", ty}},
                     mk_arrow(c("A"), mk_arrow(c("B"), ty))),
            nullptr});
  // hrefl : Pi (A : Type) (a : A), a == a
  env_.add({names::hrefl,
            close_pi({{"A", ty}, {"a", c("A")}},
                     mk_heq(c("A"), c("A"), c("a"), c("a"))),
            nullptr});
  // hsymm : Pi (A B : Type) (a : A) (b : B), a == b -> b == a
  env_.add({names::hsymm,
            close_pi({{"A", ty},
                      {"B", ty},
                      {"a", c("A")},
                      {"b", c("B")},
                      {"e", mk_heq(c("A"), c("B"), c("a"), c("b"))}},
                     mk_heq(c("B"), c("A"), c("b"), c("a"))),
            nullptr});
  // htrans : Pi (A B C : Type) (a : A) (b : B) (c : C),
  //          a == b -> b == c -> a == c
  env_.add({names::htrans,
            close_pi({{"A", ty},
                      {"B", ty},
                      {"C", ty},
                      {"a", c("A")},
                      {"b", c("B")},
                      {"cc", c("C")},
                      {"e1", mk_heq(c("A"), c("B"), c("a"), c("b"))},
                      {"e2", mk_heq(c("B"), c("C"), c("b"), c("cc"))}},
                     mk_heq(c("A"), c("C"), c("a"), c("cc"))),
            nullptr});
  // ofeq : Pi (A : Type) (a b : A), a = b -> a == b
  env_.add({names::ofeq,
            close_pi({{"A", ty},
                      {"a", c("A")},
                      {"b", c("A")},
                      {"e", mk_eq(c("A"), c("a"), c("b"))}},
                     mk_heq(c("A"), c("A"), c("a"), c("b"))),
            nullptr});
  // ofheq (UIP) : Pi (A : Type) (a b : A), a == b -> a = b
  env_.add({names::ofheq,
            close_pi({{"A", ty},
                      {"a", c("A")},
                      {"b", c("A")},
                      {"e", mk_heq(c("A"), c("A"), c("a"), c("b"))}},
                     mk_eq(c("A"), c("a"), c("b"))),
            nullptr});
}

void AxiomTable::add_axiom(const std::string& name, const Term& statement) {
  Context empty;
  Term s = normalize(infer_type(statement, env_, empty), env_, empty);
  if (s->kind != Kind::Sort)
    throw KernelError("axiom statement of " + name + " is not a type");
  env_.add({name, statement, nullptr});
}

bool AxiomTable::has_hcongr(int n) const {
  return n >= 1 && static_cast<std::size_t>(n) <= hcongr_names_.size();
}

const std::string& AxiomTable::hcongr(int n) {
  if (n < 1) throw KernelError("hcongr arity must be positive");
  while (static_cast<std::size_t>(n) > hcongr_names_.size()) {
    int k = static_cast<int>(hcongr_names_.size()) + 1;
    std::string name = "hcongr_" + std::to_string(k);
    add_axiom(name, hcongr_statement(k));
    hcongr_names_.push_back(std::move(name));
  }
  return hcongr_names_[static_cast<std::size_t>(n - 1)];
}

std::string AxiomTable::add_hsse(const Term& subsingleton_type,
                                 const Context& ctx) {
  std::string name = "hsse_" + std::to_string(hsse_counter_++);
  // Pi (C : Type) (c : C) (a : A), C == A -> c == a.
  // Built with explicit indices: A may mention context constants whose
  // names would collide with the binder names.
  const Term& A = subsingleton_type;
  Term st = mk_pi(
      "C", sort(),
      mk_pi("c", mk_var(0),
            mk_pi("a", lift(A, 2),
                  mk_pi("e", mk_heq(sort(), sort(), mk_var(2), lift(A, 3)),
                        mk_heq(mk_var(3), lift(A, 4), mk_var(2),
                               mk_var(1))))));
  Term s = normalize(infer_type(st, env_, ctx), env_, ctx);
  if (s->kind != Kind::Sort)
    throw KernelError("hsse statement for `" + show(subsingleton_type) +
                      "` is not a type");
  env_.add({name, st, nullptr});
  return name;
}

const SubsingletonRegistry::Entry& SubsingletonRegistry::register_subsingleton(
    const Term& type, const std::string& sse_proof_name, AxiomTable& axioms,
    const Context& ctx) {
  Term norm_type = normalize(type, axioms.env(), ctx);
  if (const Entry* e = find(norm_type)) return *e;

  Term proof = mk_const(sse_proof_name);
  Term proof_type = infer_type(proof, axioms.env(), ctx);
  Term expected =
      mk_pi("a", norm_type,
            mk_pi("b", lift(norm_type, 1),
                  mk_eq(lift(norm_type, 2), mk_var(1), mk_var(0))));
  if (!defeq(proof_type, expected, axioms.env(), ctx))
    throw KernelError("subsingleton proof " + sse_proof_name +
                      " does not have type `" + show(expected) + "`");

  Entry entry;
  entry.type = norm_type;
  entry.sse_name = sse_proof_name;
  entry.hsse_name = axioms.add_hsse(norm_type, ctx);
  entries_.push_back(std::move(entry));
  return entries_.back();
}

const SubsingletonRegistry::Entry* SubsingletonRegistry::find(
    const Term& normalized_type) const {
  for (const Entry& e : entries_)
    if (alpha_eq(e.type, normalized_type)) return &e;
  return nullptr;
}

namespace {

// Expects `t` to normalize to `head a1 .. an`; returns the args.
std::vector<Term> expect_spine(const Term& t, const char* head, int arity,
                               const Environment& env, const Context& ctx) {
  Term n = normalize(t, env, ctx);
  auto [h, args] = decompose_app(n);
  if (h->kind != Kind::Const || h->name != head ||
      static_cast<int>(args.size()) != arity)
    throw KernelError(std::string("expected ") + head + " application, got `" +
                      show(n) + "`");
  return args;
}

}  // namespace

Term mk_proof_step(ProofStep kind, const std::vector<Term>& args,
                   const Environment& env, const Context& ctx) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw KernelError("proof step arity mismatch: expected " +
                        std::to_string(n) + " arguments, got " +
                        std::to_string(args.size()));
  };
  switch (kind) {
    case ProofStep::Refl: {
      need(1);
      Term a = infer_type(args[0], env, ctx);
      return mk_app(c(names::refl), {a, args[0]});
    }
    case ProofStep::HRefl: {
      need(1);
      Term a = infer_type(args[0], env, ctx);
      return mk_app(c(names::hrefl), {a, args[0]});
    }
    case ProofStep::HSymm: {
      need(1);
      auto s = expect_spine(infer_type(args[0], env, ctx), names::heq, 4, env,
                            ctx);
      return mk_app(c(names::hsymm), {s[0], s[1], s[2], s[3], args[0]});
    }
    case ProofStep::HTrans: {
      need(2);
      auto s1 = expect_spine(infer_type(args[0], env, ctx), names::heq, 4, env,
                             ctx);
      auto s2 = expect_spine(infer_type(args[1], env, ctx), names::heq, 4, env,
                             ctx);
      if (!alpha_eq(s1[3], s2[2]))
        throw KernelError("htrans endpoints do not meet: `" + show(s1[3]) +
                          "` vs `" + show(s2[2]) + "`");
      return mk_app(c(names::htrans),
                    {s1[0], s1[1], s2[1], s1[2], s1[3], s2[3], args[0],
                     args[1]});
    }
    case ProofStep::OfEq: {
      need(1);
      auto s = expect_spine(infer_type(args[0], env, ctx), names::eq, 3, env,
                            ctx);
      return mk_app(c(names::ofeq), {s[0], s[1], s[2], args[0]});
    }
    case ProofStep::OfHeq: {
      need(1);
      auto s = expect_spine(infer_type(args[0], env, ctx), names::heq, 4, env,
                            ctx);
      if (!alpha_eq(s[0], s[1]))
        throw KernelError("ofheq requires both sides at the same type, got `" +
                          show(s[0]) + "` and `" + show(s[1]) + "`");
      return mk_app(c(names::ofheq), {s[0], s[2], s[3], args[0]});
    }
  }
  throw KernelError("unknown proof step");
}

}  // namespace cc
