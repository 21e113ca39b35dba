#include "cc/kernel.hpp"

#include <sstream>

namespace cc {

void Decls::add(Declaration d) {
  if (by_name_.count(d.name))
    throw KernelError("duplicate declaration: " + d.name);
  by_name_[d.name] = decls_.size();
  decls_.push_back(std::move(d));
}

const Declaration* Decls::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return nullptr;
  return &decls_[it->second];
}

namespace {

const Declaration* lookup(const std::string& name, const Environment& env,
                          const Context& ctx) {
  if (const Declaration* d = ctx.find(name)) return d;
  return env.find(name);
}

// Substitution-based normalizer with a cache keyed on node identity.
// Normalization of a node does not depend on its binder depth, so open
// subterms can be cached safely.
class Normalizer {
 public:
  Normalizer(const Environment& env, const Context& ctx)
      : env_(env), ctx_(ctx) {}

  Term norm(const Term& t) {
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
    Term r = norm_core(t);
    memo_.emplace(t, r);
    return r;
  }

 private:
  Term norm_core(const Term& t) {
    switch (t->kind) {
      case Kind::Var:
      case Kind::Sort:
        return t;
      case Kind::Const: {
        const Declaration* d = lookup(t->name, env_, ctx_);
        if (d && d->value) return norm(d->value);  // delta / zeta
        return t;
      }
      case Kind::App: {
        Term f = norm(t->left);
        if (f->kind == Kind::Lambda)
          return norm(instantiate(f->right, t->right));  // beta
        return mk_app(f, norm(t->right));
      }
      case Kind::Lambda: {
        Term d = norm(t->left);
        Term b = norm(t->right);
        // eta: fun (x : A), f x  ~>  f  when x is not free in f
        if (b->kind == Kind::App && b->right->kind == Kind::Var &&
            b->right->index == 0 && !has_loose_var(b->left, 0))
          return lift(b->left, -1, 1);
        return mk_lambda(t->name, d, b);
      }
      case Kind::Pi:
        return mk_pi(t->name, norm(t->left), norm(t->right));
    }
    return t;
  }

  const Environment& env_;
  const Context& ctx_;
  // Keyed on the shared node itself: the key keeps the node alive, so a
  // recycled allocation can never alias a stale entry.
  std::unordered_map<Term, Term> memo_;
};

class TypeChecker {
 public:
  TypeChecker(const Environment& env, const Context& ctx)
      : env_(env), ctx_(ctx), normalizer_(env, ctx) {}

  Term infer(const Term& t) {
    switch (t->kind) {
      case Kind::Var: {
        int n = static_cast<int>(binders_.size());
        if (t->index < 0 || t->index >= n)
          throw KernelError("unbound variable index " +
                            std::to_string(t->index));
        return lift(binders_[static_cast<std::size_t>(n - 1 - t->index)],
                    t->index + 1);
      }
      case Kind::Const: {
        const Declaration* d = lookup(t->name, env_, ctx_);
        if (!d) throw KernelError("unbound name: " + t->name);
        return d->type;
      }
      case Kind::Sort:
        return sort();  // Type : Type
      case Kind::App: {
        Term ft = normalizer_.norm(infer(t->left));
        if (ft->kind != Kind::Pi)
          throw KernelError("applying non-function `" + show(t->left) +
                            "` of type `" + show(ft) + "`");
        Term at = infer(t->right);
        if (!equal_types(at, ft->left))
          throw KernelError("type mismatch at argument `" + show(t->right) +
                            "`: expected `" + show(ft->left) + "`, got `" +
                            show(at) + "`");
        return instantiate(ft->right, t->right);
      }
      case Kind::Lambda: {
        check_is_type(t->left);
        binders_.push_back(t->left);
        Term bt = infer(t->right);
        binders_.pop_back();
        return mk_pi(t->name, t->left, bt);
      }
      case Kind::Pi: {
        check_is_type(t->left);
        binders_.push_back(t->left);
        check_is_type(t->right);
        binders_.pop_back();
        return sort();
      }
    }
    throw KernelError("malformed term");
  }

 private:
  void check_is_type(const Term& t) {
    Term s = normalizer_.norm(infer(t));
    if (s->kind != Kind::Sort)
      throw KernelError("expected a type, got `" + show(t) + "` of type `" +
                        show(s) + "`");
  }

  bool equal_types(const Term& a, const Term& b) {
    if (alpha_eq(a, b)) return true;
    return alpha_eq(normalizer_.norm(a), normalizer_.norm(b));
  }

  const Environment& env_;
  const Context& ctx_;
  Normalizer normalizer_;
  std::vector<Term> binders_;
};

}  // namespace

Term normalize(const Term& t, const Environment& env, const Context& ctx) {
  return Normalizer(env, ctx).norm(t);
}

bool defeq(const Term& a, const Term& b, const Environment& env,
           const Context& ctx) {
  if (alpha_eq(a, b)) return true;
  Normalizer n(env, ctx);
  return alpha_eq(n.norm(a), n.norm(b));
}

Term infer_type(const Term& t, const Environment& env, const Context& ctx) {
  return TypeChecker(env, ctx).infer(t);
}

void check_decl(const Declaration& d, const Environment& env,
                const Context& ctx) {
  Term s = normalize(infer_type(d.type, env, ctx), env, ctx);
  if (s->kind != Kind::Sort)
    throw KernelError("declared type of " + d.name + " is not a type: `" +
                      show(d.type) + "`");
  if (d.value) {
    if (mentions_const(d.value, d.name))
      throw KernelError("definition " + d.name + " occurs in its own value");
    Term vt = infer_type(d.value, env, ctx);
    if (!defeq(vt, d.type, env, ctx))
      throw KernelError("value of " + d.name + " has type `" + show(vt) +
                        "`, which does not match declared `" + show(d.type) +
                        "`");
  }
}

}  // namespace cc
