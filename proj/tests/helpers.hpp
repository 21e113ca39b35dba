#pragma once

// Shared test utilities: fixture loading, a proof-skeleton normalizer for
// golden comparisons, a brute-force fixpoint oracle for the closure, and a
// random problem generator.

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cc/checker.hpp"
#include "cc/driver.hpp"
#include "cc/parser.hpp"

namespace cctest {

using namespace cc;

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Proof skeletons. A proof term is reduced to its combinatorial shape:
// inferable type/term arguments are dropped, and trivial glue
// (htrans _ (hrefl _), hsymm (hrefl _), double symmetry, ...) is erased,
// so golden tests can compare proofs modulo bookkeeping.

struct Sk {
  std::string op;        // refl hrefl symm trans congr ofeq ofheq sub leaf
  std::string text;      // refl/hrefl: the shown subject; leaf: the name
  int arity = 0;         // congr only
  std::vector<Sk> kids;
};

inline Sk sk_leaf(std::string name) { return Sk{"leaf", std::move(name)}; }

inline Sk skeletonize(const Term& p) {
  auto [head, args] = decompose_app(p);
  if (head->kind != Kind::Const) return sk_leaf(show(p));
  const std::string& n = head->name;
  auto kid = [&](std::size_t i) { return skeletonize(args[i]); };
  if (n == names::refl && args.size() == 2) return {"refl", show(args[1])};
  if (n == names::hrefl && args.size() == 2) return {"hrefl", show(args[1])};
  if (n == names::hsymm && args.size() == 5) return {"symm", "", 0, {kid(4)}};
  if (n == names::htrans && args.size() == 8)
    return {"trans", "", 0, {kid(6), kid(7)}};
  if (n == names::ofeq && args.size() == 4) return {"ofeq", "", 0, {kid(3)}};
  if (n == names::ofheq && args.size() == 4) return {"ofheq", "", 0, {kid(3)}};
  if (n.rfind("hsse_", 0) == 0 && args.size() == 4)
    return {"sub", "", 0, {kid(3)}};
  if (n.rfind("hcongr_", 0) == 0) {
    int k = std::stoi(n.substr(7));
    std::size_t expect = static_cast<std::size_t>(4 * k + 4);
    if (args.size() == expect) {
      Sk s{"congr", "", k, {}};
      s.kids.push_back(kid(static_cast<std::size_t>(k) + 3));  // e0
      for (int i = 0; i < k; ++i)
        s.kids.push_back(kid(static_cast<std::size_t>(k + 4 + 3 * i + 2)));
      return s;
    }
  }
  return sk_leaf(n);
}

inline Sk simplify(Sk s);

inline Sk sym(Sk s) {
  if (s.op == "hrefl" || s.op == "refl") return s;
  if (s.op == "symm") return simplify(s.kids[0]);
  if (s.op == "trans")
    return simplify(Sk{"trans", "", 0, {sym(s.kids[1]), sym(s.kids[0])}});
  if (s.op == "congr") {
    Sk r = s;
    for (auto& k : r.kids) k = sym(std::move(k));
    return r;
  }
  if (s.op == "ofeq" || s.op == "ofheq")
    return {s.op, "", 0, {sym(s.kids[0])}};
  return {"symm", "", 0, {std::move(s)}};
}

inline Sk simplify(Sk s) {
  for (auto& k : s.kids) k = simplify(std::move(k));
  if (s.op == "trans") {
    if (s.kids[1].op == "hrefl") return s.kids[0];
    if (s.kids[0].op == "hrefl") return s.kids[1];
  }
  if (s.op == "symm") return sym(std::move(s.kids[0]));
  if (s.op == "ofheq" && s.kids[0].op == "hrefl")
    return {"refl", s.kids[0].text};
  if (s.op == "ofeq" && s.kids[0].op == "refl")
    return {"hrefl", s.kids[0].text};
  return s;
}

inline std::string render(const Sk& s) {
  if (s.op == "leaf") return s.text;
  if (s.op == "refl" || s.op == "hrefl")
    return "(" + s.op + " " + s.text + ")";
  std::string head = s.op == "congr" ? "hcongr_" + std::to_string(s.arity)
                     : s.op == "symm" ? "hsymm"
                     : s.op == "trans" ? "htrans"
                                       : s.op;
  std::string out = "(" + head;
  for (const Sk& k : s.kids) out += " " + render(k);
  return out + ")";
}

inline std::string proof_skeleton(const Term& p) {
  return render(simplify(skeletonize(p)));
}

// All hcongr arities mentioned anywhere in a proof term.
inline void collect_congr_arities(const Term& p, std::vector<int>& out) {
  if (!p) return;
  if (p->kind == Kind::Const && p->name.rfind("hcongr_", 0) == 0)
    out.push_back(std::stoi(p->name.substr(7)));
  if (p->left) collect_congr_arities(p->left, out);
  if (p->right) collect_congr_arities(p->right, out);
}

// ---------------------------------------------------------------------------
// Brute-force oracle: naive union-find plus a pairwise congruence fixpoint,
// sharing nothing with the engine but the flat problem and Proposition 1.

struct Oracle {
  std::vector<int> parent;

  explicit Oracle(const FlatProblem& fp) {
    parent.resize(fp.vars.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const FlatEq& e : fp.eqs) unite(e.lhs, e.rhs);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const FlatVar& d : fp.vars) {
        if (!d.is_def) continue;
        for (const FlatVar& e : fp.vars) {
          if (!e.is_def || e.id <= d.id) continue;
          if (find(d.id) != find(e.id) && congruent(fp, d.id, e.id)) {
            unite(d.id, e.id);
            changed = true;
          }
        }
      }
    }
  }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)];
    return x;
  }
  void unite(int a, int b) {
    parent[static_cast<std::size_t>(find(a))] = find(b);
  }
  bool same(int a, int b) { return find(a) == find(b); }

  bool congruent(const FlatProblem& fp, int d, int e) {
    const FlatVar& D = fp.vars[static_cast<std::size_t>(d)];
    const FlatVar& E = fp.vars[static_cast<std::size_t>(e)];
    if (!same(D.arg, E.arg)) return false;
    const FlatVar& f = fp.vars[static_cast<std::size_t>(D.fn)];
    const FlatVar& g = fp.vars[static_cast<std::size_t>(E.fn)];
    if (same(D.fn, E.fn) && alpha_eq(f.type, g.type)) return true;
    return f.is_def && g.is_def && congruent(fp, D.fn, E.fn);
  }
};

// ---------------------------------------------------------------------------
// Random instance generator.

struct GenOptions {
  bool dependent = false;
  int max_base = 8;
  int max_defs = 12;
  int max_hyps = 10;
};

struct PoolEntry {
  Term term;
  Term type;  // normalized
};

inline Problem generate_problem(std::mt19937& rng, const GenOptions& go) {
  Problem p;
  p.axioms = std::make_shared<AxiomTable>();
  const Environment& env = p.axioms->env();
  auto pick = [&](int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
  };

  p.ctx.add({"N", sort(), nullptr});
  Term N = mk_const("N");
  if (go.dependent) p.ctx.add({"V", mk_arrow(N, sort()), nullptr});

  std::vector<PoolEntry> pool;
  int nbase = 1 + pick(go.max_base);
  for (int i = 0; i < nbase; ++i) {
    std::string nm = "x" + std::to_string(i);
    p.ctx.add({nm, N, nullptr});
    pool.push_back({mk_const(nm), N});
  }

  // function symbols: plain N^k -> N plus two dependent shapes
  std::vector<std::string> funcs;
  int nfun = 1 + pick(4);
  for (int i = 0; i < nfun; ++i) {
    std::string nm = "f" + std::to_string(i);
    int shape = pick(go.dependent ? 5 : 3);
    Term ty;
    switch (shape) {
      case 0: ty = mk_arrow(N, N); break;
      case 1: ty = mk_arrow(N, mk_arrow(N, N)); break;
      case 2: ty = mk_arrow(N, mk_arrow(N, mk_arrow(N, N))); break;
      case 3:  // Pi (x : N), V x
        ty = mk_pi("x", N, mk_app(mk_const("V"), mk_var(0)));
        break;
      default:  // Pi (x : N), V x -> N
        ty = mk_pi("x", N,
                   mk_arrow(mk_app(mk_const("V"), mk_var(0)), lift(N, 1)));
        break;
    }
    p.ctx.add({nm, ty, nullptr});
    funcs.push_back(nm);
  }

  // local definitions: random well-typed full applications
  int ndefs = pick(go.max_defs + 1);
  int made = 0;
  for (int attempt = 0; attempt < 4 * ndefs && made < ndefs; ++attempt) {
    const std::string& fn = funcs[static_cast<std::size_t>(pick(nfun))];
    Term cur = mk_const(fn);
    Term ty = normalize(p.ctx.find(fn)->type, env, p.ctx);
    bool ok = true;
    while (ty->kind == Kind::Pi) {
      Term dom = normalize(ty->left, env, p.ctx);
      std::vector<int> cands;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (alpha_eq(pool[i].type, dom)) cands.push_back(static_cast<int>(i));
      if (cands.empty()) {
        ok = false;
        break;
      }
      const PoolEntry& arg =
          pool[static_cast<std::size_t>(cands[static_cast<std::size_t>(
              pick(static_cast<int>(cands.size())))])];
      cur = mk_app(cur, arg.term);
      ty = normalize(instantiate(ty->right, arg.term), env, p.ctx);
    }
    if (!ok) continue;
    std::string nm = "d" + std::to_string(made++);
    p.ctx.add({nm, infer_type(cur, env, p.ctx), cur});
    pool.push_back({mk_const(nm), normalize(ty, env, p.ctx)});
  }

  // heterogeneous equality hypotheses; mostly between same-type members so
  // that congruences actually fire, occasionally across types
  int nhyps = 1 + pick(go.max_hyps);
  for (int i = 0; i < nhyps; ++i) {
    const PoolEntry& l = pool[static_cast<std::size_t>(
        pick(static_cast<int>(pool.size())))];
    std::vector<int> peers;
    if (pick(10) < 8) {
      for (std::size_t k = 0; k < pool.size(); ++k)
        if (alpha_eq(pool[k].type, l.type)) peers.push_back((int)k);
    } else {
      peers.resize(pool.size());
      std::iota(peers.begin(), peers.end(), 0);
    }
    const PoolEntry& r = pool[static_cast<std::size_t>(
        peers[static_cast<std::size_t>(pick((int)peers.size()))])];
    EqStatement h;
    h.name = "e" + std::to_string(i);
    h.lhs = l.term;
    h.rhs = r.term;
    h.hetero = true;
    p.ctx.add({h.name, mk_heq(l.type, r.type, l.term, r.term), nullptr});
    p.hyps.push_back(std::move(h));
  }
  return p;
}

// Runs one generated instance through engine + oracle + checker.
// Returns an empty string on success, a description of the first failure
// otherwise.
inline std::string verify_instance(const Problem& p) {
  const Environment& env = p.axioms->env();
  FlatProblem fp = flatten(p, nullptr);
  SolveOptions so;
  so.check_invariants = true;
  Engine eng(fp, *p.axioms, nullptr, so);
  SolveResult res = eng.solve();
  if (res.invariant_violations)
    return "invariant violations: " + std::to_string(res.invariant_violations);
  if (res.irredundancy_violations)
    return "irredundancy violations: " +
           std::to_string(res.irredundancy_violations);
  Oracle oracle(fp);
  for (std::size_t i = 0; i < fp.vars.size(); ++i)
    for (std::size_t j = i + 1; j < fp.vars.size(); ++j) {
      bool e = eng.same_class(static_cast<int>(i), static_cast<int>(j));
      bool o = oracle.same(static_cast<int>(i), static_cast<int>(j));
      if (e != o)
        return "partition mismatch on (" + std::to_string(i) + ", " +
               std::to_string(j) + "): engine=" + std::to_string(e) +
               " oracle=" + std::to_string(o);
    }
  for (const EqProofRec& rec : res.processed) {
    const FlatVar& l = fp.vars[static_cast<std::size_t>(rec.lhs)];
    const FlatVar& r = fp.vars[static_cast<std::size_t>(rec.rhs)];
    Term stmt = mk_heq(l.type, r.type, l.term, r.term);
    CheckResult cr = check_proof(rec.proof, stmt, env, fp.flat_ctx);
    if (!cr.ok)
      return "proof for " + rec.name + " rejected: " + cr.message;
  }
  return "";
}

}  // namespace cctest
