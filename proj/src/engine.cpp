#include "cc/engine.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "cc/proof.hpp"

namespace cc {

bool congruent(const CCState& st, const FlatProblem& fp, int d, int e) {
  const FlatVar& D = fp.vars[static_cast<std::size_t>(d)];
  const FlatVar& E = fp.vars[static_cast<std::size_t>(e)];
  if (!D.is_def || !E.is_def) return false;
  if (st.repr[static_cast<std::size_t>(D.arg)] !=
      st.repr[static_cast<std::size_t>(E.arg)])
    return false;
  const FlatVar& f = fp.vars[static_cast<std::size_t>(D.fn)];
  const FlatVar& g = fp.vars[static_cast<std::size_t>(E.fn)];
  if (st.repr[static_cast<std::size_t>(D.fn)] ==
          st.repr[static_cast<std::size_t>(E.fn)] &&
      alpha_eq(f.type, g.type))
    return true;
  if (f.is_def && g.is_def) return congruent(st, fp, D.fn, E.fn);
  return false;
}

std::size_t congrhash(const CCState& st, const FlatProblem& fp, int d) {
  const FlatVar& D = fp.vars[static_cast<std::size_t>(d)];
  int rf = st.repr[static_cast<std::size_t>(D.fn)];
  int ra = st.repr[static_cast<std::size_t>(D.arg)];
  std::size_t h1 = fp.vars[static_cast<std::size_t>(rf)].term->hash;
  std::size_t h2 = fp.vars[static_cast<std::size_t>(ra)].term->hash;
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Engine::Engine(const FlatProblem& fp, AxiomTable& axioms,
               const SubsingletonRegistry* registry, SolveOptions options)
    : fp_(fp),
      axioms_(axioms),
      registry_(registry),
      options_(options),
      congrtable_(16, TableHash{this}, TableEq{this}) {
  std::size_t n = fp_.vars.size();
  st_.repr.assign(n, -1);
  st_.next.assign(n, -1);
  st_.size.assign(n, 0);
  st_.pr.assign(n, PrEdge{});
  st_.initialized.assign(n, 0);
  uselists_.assign(n, {});
  if (registry_)
    subrep_.assign(registry_->entries().size(), -1);
  // hcongr arity is bounded by the longest application spine.
  axioms_.hcongr(std::max(2, fp_.max_spine));
}

std::string Engine::fresh_eq_name() {
  return "e!" + std::to_string(eq_counter_++);
}

Term Engine::prove(int a, int b) {
  ProofBuilder builder(fp_, st_, axioms_, &irredundancy_violations_);
  return builder.mkpr(a, b);
}

void Engine::trace_merge(int a, int b, EqReason reason) {
  if (!options_.trace) return;
  auto label = [&](int v) {
    const FlatVar& x = fp_.vars[static_cast<std::size_t>(v)];
    return x.name.empty() ? show(x.term) : x.name;
  };
  const char* r = reason == EqReason::Hypothesis     ? "hyp"
                  : reason == EqReason::Congruence   ? "congr"
                                                     : "subsingleton";
  *options_.trace << "merge " << label(a) << " " << label(b) << " reason=" << r
                  << "\n";
}

void Engine::add_use(int repr_var, int def_var) {
  std::vector<int>& us = uselists_[static_cast<std::size_t>(repr_var)];
  if (std::find(us.begin(), us.end(), def_var) == us.end())
    us.push_back(def_var);
}

void Engine::init_uselist(int def_var, int parent) {
  const FlatVar& d = fp_.vars[static_cast<std::size_t>(def_var)];
  add_use(st_.repr[static_cast<std::size_t>(d.fn)], parent);
  add_use(st_.repr[static_cast<std::size_t>(d.arg)], parent);
  if (fp_.vars[static_cast<std::size_t>(d.fn)].is_def)
    init_uselist(d.fn, parent);
}

void Engine::enqueue_congruence(int d, int e) {
  ProofBuilder builder(fp_, st_, axioms_, &irredundancy_violations_);
  EqProofRec rec;
  rec.lhs = d;
  rec.rhs = e;
  rec.proof = builder.mkcongr(d, e, {});
  rec.name = fresh_eq_name();
  rec.reason = EqReason::Congruence;
  pending_.push_back({true, -1, std::move(rec)});
}

void Engine::initialize(int v) {
  std::size_t i = static_cast<std::size_t>(v);
  if (st_.initialized[i])
    throw KernelError("engine: variable initialized twice");
  st_.initialized[i] = 1;
  st_.repr[i] = v;
  st_.next[i] = v;
  st_.size[i] = 1;
  st_.pr[i].target = v;
  st_.pr[i].proof = EqProofRec{v, v, nullptr, "", EqReason::Hypothesis};

  const FlatVar& x = fp_.vars[i];
  if (x.is_def) {
    init_uselist(v, v);
    auto it = congrtable_.find(v);
    if (it != congrtable_.end()) {
      enqueue_congruence(*it, v);
    } else {
      congrtable_.insert(v);
    }
  }
  if (registry_) {
    for (std::size_t k = 0; k < fp_.subsingleton_type_vars.size(); ++k)
      if (fp_.subsingleton_type_vars[k] == v)
        sub_entries_by_repr_[v].push_back(static_cast<int>(k));
    if (options_.use_subsingletons) subsingleton_init_hook(v);
  }
}

void Engine::subsingleton_init_hook(int v) {
  const FlatVar& x = fp_.vars[static_cast<std::size_t>(v)];
  if (x.type_var < 0) return;
  int tv = x.type_var;
  auto it = sub_entries_by_repr_.find(st_.repr[static_cast<std::size_t>(tv)]);
  if (it == sub_entries_by_repr_.end()) return;
  ProofBuilder builder(fp_, st_, axioms_, &irredundancy_violations_);
  for (int k : it->second) {
    std::size_t ku = static_cast<std::size_t>(k);
    int partner = subrep_[ku];
    if (partner >= 0 && partner != v &&
        !st_.same_class(partner, v)) {
      // hsse_A (type of v) v partner (proof that the types are ==)
      const SubsingletonRegistry::Entry& entry = registry_->entries()[ku];
      EqProofRec rec;
      rec.lhs = v;
      rec.rhs = partner;
      rec.proof = mk_app(
          mk_const(entry.hsse_name),
          {x.type, x.term, fp_.vars[static_cast<std::size_t>(partner)].term,
           builder.mkpr(tv, fp_.subsingleton_type_vars[ku])});
      rec.name = fresh_eq_name();
      rec.reason = EqReason::Subsingleton;
      pending_.push_back({true, -1, std::move(rec)});
      break;
    }
  }
  // Record v as the representative member for an exactly matching type.
  for (int k : it->second) {
    std::size_t ku = static_cast<std::size_t>(k);
    if (subrep_[ku] < 0 && fp_.subsingleton_type_vars[ku] == tv) {
      subrep_[ku] = v;
      break;
    }
  }
}

void Engine::subsingleton_merge_hook(int old_repr, int new_repr,
                                     std::vector<int> old_entries) {
  if (!registry_ || !options_.use_subsingletons) return;
  auto it = sub_entries_by_repr_.find(new_repr);
  std::vector<int> new_entries =
      it == sub_entries_by_repr_.end() ? std::vector<int>{} : it->second;
  // Move the registered entries of the absorbed class.
  if (!old_entries.empty()) {
    auto& dst = sub_entries_by_repr_[new_repr];
    for (int k : old_entries) dst.push_back(k);
  }
  sub_entries_by_repr_.erase(old_repr);

  int mi = -1, mj = -1;
  std::size_t ki = 0, kj = 0;
  for (int k : old_entries)
    if (subrep_[static_cast<std::size_t>(k)] >= 0) {
      mi = subrep_[static_cast<std::size_t>(k)];
      ki = static_cast<std::size_t>(k);
      break;
    }
  for (int k : new_entries)
    if (subrep_[static_cast<std::size_t>(k)] >= 0) {
      mj = subrep_[static_cast<std::size_t>(k)];
      kj = static_cast<std::size_t>(k);
      break;
    }
  if (mi < 0 || mj < 0 || st_.same_class(mi, mj)) return;
  // Apply hsse of the entry whose type is exactly mj's type.
  const SubsingletonRegistry::Entry& entry = registry_->entries()[kj];
  const FlatVar& vi = fp_.vars[static_cast<std::size_t>(mi)];
  ProofBuilder builder(fp_, st_, axioms_, &irredundancy_violations_);
  EqProofRec rec;
  rec.lhs = mi;
  rec.rhs = mj;
  rec.proof =
      mk_app(mk_const(entry.hsse_name),
             {vi.type, vi.term, fp_.vars[static_cast<std::size_t>(mj)].term,
              builder.mkpr(fp_.subsingleton_type_vars[ki],
                           fp_.subsingleton_type_vars[kj])});
  rec.name = fresh_eq_name();
  rec.reason = EqReason::Subsingleton;
  pending_.push_back({true, -1, std::move(rec)});
}

void Engine::remove_uses(int r) {
  for (int d : uselists_[static_cast<std::size_t>(r)]) {
    auto it = congrtable_.find(d);
    if (it != congrtable_.end() && *it == d) congrtable_.erase(it);
  }
}

void Engine::reinsert_uses(int r) {
  for (int d : uselists_[static_cast<std::size_t>(r)]) {
    auto it = congrtable_.find(d);
    if (it != congrtable_.end()) {
      enqueue_congruence(*it, d);
    } else {
      congrtable_.insert(d);
    }
  }
}

void Engine::flip_proofs(int a) {
  const PrEdge edge = st_.pr[static_cast<std::size_t>(a)];
  if (edge.target == a) return;
  flip_proofs(edge.target);
  st_.pr[static_cast<std::size_t>(edge.target)] =
      PrEdge{a, edge.proof};
}

void Engine::processeq(const EqProofRec& rec) {
  processed_.push_back(rec);
  int a = rec.lhs, b = rec.rhs;
  if (st_.same_class(a, b)) return;
  if (st_.size[static_cast<std::size_t>(st_.repr[static_cast<std::size_t>(a)])] >
      st_.size[static_cast<std::size_t>(st_.repr[static_cast<std::size_t>(b)])])
    std::swap(a, b);
  int ra = st_.repr[static_cast<std::size_t>(a)];
  int rb = st_.repr[static_cast<std::size_t>(b)];

  // Preserve the absorbed class's subsingleton entries before rekeying.
  std::vector<int> old_sub_entries;
  if (auto it = sub_entries_by_repr_.find(ra);
      it != sub_entries_by_repr_.end())
    old_sub_entries = it->second;

  remove_uses(ra);
  flip_proofs(a);
  int x = a;
  do {
    st_.repr[static_cast<std::size_t>(x)] = rb;
    x = st_.next[static_cast<std::size_t>(x)];
  } while (x != a);
  st_.pr[static_cast<std::size_t>(a)] = PrEdge{b, rec};
  reinsert_uses(ra);
  std::swap(st_.next[static_cast<std::size_t>(ra)],
            st_.next[static_cast<std::size_t>(rb)]);
  // move uselists[ra] to uselists[rb]
  {
    std::vector<int>& src = uselists_[static_cast<std::size_t>(ra)];
    std::vector<int>& dst = uselists_[static_cast<std::size_t>(rb)];
    for (int d : src)
      if (std::find(dst.begin(), dst.end(), d) == dst.end()) dst.push_back(d);
    src.clear();
  }
  st_.size[static_cast<std::size_t>(rb)] +=
      st_.size[static_cast<std::size_t>(ra)];

  trace_merge(rec.lhs, rec.rhs, rec.reason);
  subsingleton_merge_hook(ra, rb, std::move(old_sub_entries));
  if (options_.check_invariants) check_invariants_now();
}

void Engine::check_invariants_now() {
  std::size_t n = fp_.vars.size();
  auto violate = [&]() { ++invariant_violations_; };
  std::unordered_map<int, std::set<int>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (!st_.initialized[i]) continue;
    int v = static_cast<int>(i);
    int r = st_.repr[i];
    classes[r].insert(v);
    // Inv1: repr[next[x]] = repr[repr[x]] = repr[x]
    if (st_.repr[static_cast<std::size_t>(st_.next[i])] != r ||
        st_.repr[static_cast<std::size_t>(r)] != r)
      violate();
    // Inv3: the target path reaches repr[x] with consistent edges.
    int y = v;
    std::size_t steps = 0;
    while (st_.pr[static_cast<std::size_t>(y)].target != y) {
      const PrEdge& e = st_.pr[static_cast<std::size_t>(y)];
      bool forward = e.proof.lhs == y && e.proof.rhs == e.target;
      bool backward = e.proof.lhs == e.target && e.proof.rhs == y;
      if (!forward && !backward) violate();
      y = e.target;
      if (++steps > n) {
        violate();
        break;
      }
    }
    if (steps <= n && y != r) violate();
  }
  for (auto& [r, members] : classes) {
    // Inv4 (and Inv2): next induces one circular list per class whose
    // length is exactly size[r] and which visits every member.
    int s = st_.size[static_cast<std::size_t>(r)];
    if (static_cast<std::size_t>(s) != members.size()) violate();
    std::set<int> visited;
    int x = r;
    for (int k = 0; k < s; ++k) {
      visited.insert(x);
      x = st_.next[static_cast<std::size_t>(x)];
    }
    if (x != r || visited != members) violate();
  }
}

SolveResult Engine::solve() {
  for (const FlatEntry& e : fp_.entries) {
    if (e.is_eq) {
      const FlatEq& eq = fp_.eqs[static_cast<std::size_t>(e.eq_index)];
      EqProofRec rec;
      rec.lhs = eq.lhs;
      rec.rhs = eq.rhs;
      rec.proof = eq.proof;
      rec.name = eq.name;
      rec.reason = EqReason::Hypothesis;
      pending_.push_back({true, -1, std::move(rec)});
    } else {
      pending_.push_back({false, e.var, {}});
    }
  }
  while (!pending_.empty()) {
    Pending p = std::move(pending_.front());
    pending_.pop_front();
    if (p.is_eq)
      processeq(p.eq);
    else
      initialize(p.var);
  }

  SolveResult res;
  res.processed = processed_;
  res.congrtable_size = congrtable_.size();
  res.invariant_violations = invariant_violations_;
  res.proved = fp_.goal_lhs >= 0 && fp_.goal_rhs >= 0 &&
               st_.same_class(fp_.goal_lhs, fp_.goal_rhs);
  if (res.proved) res.goal_proof = prove(fp_.goal_lhs, fp_.goal_rhs);
  res.irredundancy_violations = irredundancy_violations_;

  // Deterministic partition report.
  std::unordered_map<int, std::vector<std::string>> classes;
  for (std::size_t i = 0; i < fp_.vars.size(); ++i) {
    if (!st_.initialized[i]) continue;
    const FlatVar& x = fp_.vars[i];
    classes[st_.repr[i]].push_back(x.name.empty() ? show(x.term) : x.name);
  }
  for (auto& [r, members] : classes) {
    std::sort(members.begin(), members.end());
    res.partition.push_back(std::move(members));
  }
  std::sort(res.partition.begin(), res.partition.end());
  return res;
}

}  // namespace cc
