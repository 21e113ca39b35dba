#include "cc/proof.hpp"

#include <algorithm>
#include <unordered_map>

namespace cc {

Term ProofBuilder::hrefl_of(int v) const {
  const FlatVar& x = fp_.vars[static_cast<std::size_t>(v)];
  return mk_app(mk_const(names::hrefl), {x.type, x.term});
}

Term ProofBuilder::hsymm_of(const Term& proof, int lhs, int rhs) const {
  const FlatVar& a = fp_.vars[static_cast<std::size_t>(lhs)];
  const FlatVar& b = fp_.vars[static_cast<std::size_t>(rhs)];
  return mk_app(mk_const(names::hsymm), {a.type, b.type, a.term, b.term,
                                         proof});
}

Term ProofBuilder::htrans_of(const Term& p, const Term& q, int a, int b,
                             int c) const {
  const FlatVar& va = fp_.vars[static_cast<std::size_t>(a)];
  const FlatVar& vb = fp_.vars[static_cast<std::size_t>(b)];
  const FlatVar& vc = fp_.vars[static_cast<std::size_t>(c)];
  return mk_app(mk_const(names::htrans),
                {va.type, vb.type, vc.type, va.term, vb.term, vc.term, p, q});
}

ProofBuilder::Endpoint ProofBuilder::mktrans_rec(int a, int n) {
  if (n == 0) return {hrefl_of(a), a};
  const PrEdge& edge = st_.pr[static_cast<std::size_t>(a)];
  int b = edge.target;
  Endpoint rest = mktrans_rec(b, n - 1);
  Term step;
  if (edge.proof.lhs == a && edge.proof.rhs == b) {
    step = edge.proof.proof;
  } else {
    step = hsymm_of(edge.proof.proof, edge.proof.lhs, edge.proof.rhs);
  }
  return {htrans_of(step, rest.proof, a, b, rest.end), rest.end};
}

Term ProofBuilder::mktrans(int a, int n) {
  return mktrans_rec(a, n).proof;
}

Term ProofBuilder::mkpr(int a, int b) {
  if (a == b) return hrefl_of(a);
  // Find the smallest n, m with target^n[a] == target^m[b].
  std::unordered_map<int, int> pos;
  std::vector<int> path_a;
  int x = a;
  while (true) {
    pos[x] = static_cast<int>(path_a.size());
    path_a.push_back(x);
    int t = st_.pr[static_cast<std::size_t>(x)].target;
    if (t == x) break;
    x = t;
  }
  int y = b;
  int m = 0;
  std::vector<int> path_b;
  while (!pos.count(y)) {
    path_b.push_back(y);
    int t = st_.pr[static_cast<std::size_t>(y)].target;
    if (t == y)
      throw KernelError("mkpr: no common ancestor in the proof forest");
    y = t;
    ++m;
  }
  int n = pos[y];
  if (irredundancy_violations_) {
    // The visited sequence must be duplicate-free (local irredundancy).
    std::vector<int> seq(path_a.begin(), path_a.begin() + n + 1);
    seq.insert(seq.end(), path_b.begin(), path_b.end());
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      ++*irredundancy_violations_;
  }
  Endpoint ea = mktrans_rec(a, n);
  Endpoint eb = mktrans_rec(b, m);
  return htrans_of(ea.proof, hsymm_of(eb.proof, b, eb.end), a, eb.end, b);
}

Term ProofBuilder::mkcongr(int d, int e, std::vector<EqProofRec> es) {
  const FlatVar& D = fp_.vars[static_cast<std::size_t>(d)];
  const FlatVar& E = fp_.vars[static_cast<std::size_t>(e)];
  if (!D.is_def || !E.is_def)
    throw KernelError("mkcongr: not a local definition");
  int f = D.fn, a = D.arg;
  int g = E.fn, b = E.arg;

  EqProofRec e_ab;
  e_ab.lhs = a;
  e_ab.rhs = b;
  e_ab.proof = mkpr(a, b);

  const FlatVar& vf = fp_.vars[static_cast<std::size_t>(f)];
  const FlatVar& vg = fp_.vars[static_cast<std::size_t>(g)];
  if (vf.is_def && vg.is_def && congruent(st_, fp_, f, g)) {
    es.insert(es.begin(), std::move(e_ab));
    return mkcongr(f, g, std::move(es));
  }
  if (!alpha_eq(vf.type, vg.type))
    throw KernelError("mkcongr: function types are not definitionally equal");

  int n = static_cast<int>(es.size()) + 1;
  const std::string& lemma = axioms_.hcongr(n);

  // Peel the first n binders of the (normalized) function type.
  std::vector<Term> domains;
  std::vector<std::string> hints;
  Term rest = vf.type;
  for (int i = 0; i < n; ++i) {
    if (rest->kind != Kind::Pi)
      throw KernelError("mkcongr: function type has too few arguments");
    domains.push_back(rest->left);
    hints.push_back(rest->name);
    rest = rest->right;
  }
  auto close_lambda = [&](int upto, Term body) {
    for (int j = upto - 1; j >= 0; --j)
      body = mk_lambda(hints[static_cast<std::size_t>(j)],
                       domains[static_cast<std::size_t>(j)], body);
    return body;
  };

  std::vector<Term> args;
  for (int i = 0; i < n; ++i)
    args.push_back(close_lambda(i, domains[static_cast<std::size_t>(i)]));
  args.push_back(close_lambda(n, rest));  // B
  args.push_back(vf.term);
  args.push_back(vg.term);
  args.push_back(mk_app(mk_const(names::ofheq),
                        {vf.type, vf.term, vg.term, mkpr(f, g)}));
  std::vector<EqProofRec> pairs;
  pairs.push_back(std::move(e_ab));
  for (auto& p : es) pairs.push_back(std::move(p));
  for (const EqProofRec& p : pairs) {
    args.push_back(fp_.vars[static_cast<std::size_t>(p.lhs)].term);
    args.push_back(fp_.vars[static_cast<std::size_t>(p.rhs)].term);
    args.push_back(p.proof);
  }
  return mk_app(mk_const(lemma), args);
}

}  // namespace cc
