#include "cc/term.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cc {

namespace {

std::size_t combine(std::size_t seed, std::size_t h) {
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

Term make(TermNode node) {
  std::size_t h = static_cast<std::size_t>(node.kind) * 0x100000001b3ULL;
  switch (node.kind) {
    case Kind::Var:
      h = combine(h, static_cast<std::size_t>(node.index));
      break;
    case Kind::Const:
      h = combine(h, std::hash<std::string>{}(node.name));
      break;
    case Kind::Sort:
      break;
    default:
      h = combine(h, node.left->hash);
      h = combine(h, node.right->hash);
      break;
  }
  node.hash = h;
  return std::make_shared<const TermNode>(std::move(node));
}

}  // namespace

Term mk_var(int index, std::string hint) {
  TermNode n;
  n.kind = Kind::Var;
  n.index = index;
  n.name = std::move(hint);
  return make(std::move(n));
}

Term mk_const(std::string name) {
  TermNode n;
  n.kind = Kind::Const;
  n.name = std::move(name);
  return make(std::move(n));
}

Term sort() {
  static const Term s = [] {
    TermNode n;
    n.kind = Kind::Sort;
    return make(std::move(n));
  }();
  return s;
}

Term mk_app(Term fn, Term arg) {
  TermNode n;
  n.kind = Kind::App;
  n.left = std::move(fn);
  n.right = std::move(arg);
  return make(std::move(n));
}

Term mk_app(Term fn, const std::vector<Term>& args) {
  Term t = std::move(fn);
  for (const Term& a : args) t = mk_app(t, a);
  return t;
}

Term mk_lambda(std::string hint, Term domain, Term body) {
  TermNode n;
  n.kind = Kind::Lambda;
  n.name = std::move(hint);
  n.left = std::move(domain);
  n.right = std::move(body);
  return make(std::move(n));
}

Term mk_pi(std::string hint, Term domain, Term body) {
  TermNode n;
  n.kind = Kind::Pi;
  n.name = std::move(hint);
  n.left = std::move(domain);
  n.right = std::move(body);
  return make(std::move(n));
}

Term mk_arrow(Term domain, Term codomain) {
  return mk_pi("", std::move(domain), lift(codomain, 1));
}

bool alpha_eq(const Term& a, const Term& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Var:
      return a->index == b->index;
    case Kind::Const:
      return a->name == b->name;
    case Kind::Sort:
      return true;
    default:
      return alpha_eq(a->left, b->left) && alpha_eq(a->right, b->right);
  }
}

Term lift(const Term& t, int amount, int cutoff) {
  if (amount == 0) return t;
  switch (t->kind) {
    case Kind::Var:
      if (t->index >= cutoff) return mk_var(t->index + amount, t->name);
      return t;
    case Kind::Const:
    case Kind::Sort:
      return t;
    case Kind::App: {
      Term l = lift(t->left, amount, cutoff);
      Term r = lift(t->right, amount, cutoff);
      if (l.get() == t->left.get() && r.get() == t->right.get()) return t;
      return mk_app(l, r);
    }
    case Kind::Lambda:
    case Kind::Pi: {
      Term d = lift(t->left, amount, cutoff);
      Term b = lift(t->right, amount, cutoff + 1);
      if (d.get() == t->left.get() && b.get() == t->right.get()) return t;
      return t->kind == Kind::Lambda ? mk_lambda(t->name, d, b)
                                     : mk_pi(t->name, d, b);
    }
  }
  return t;
}

namespace {

Term instantiate_rec(const Term& t, const Term& value, int depth) {
  switch (t->kind) {
    case Kind::Var:
      if (t->index == depth) return lift(value, depth);
      if (t->index > depth) return mk_var(t->index - 1, t->name);
      return t;
    case Kind::Const:
    case Kind::Sort:
      return t;
    case Kind::App:
      return mk_app(instantiate_rec(t->left, value, depth),
                    instantiate_rec(t->right, value, depth));
    case Kind::Lambda:
      return mk_lambda(t->name, instantiate_rec(t->left, value, depth),
                       instantiate_rec(t->right, value, depth + 1));
    case Kind::Pi:
      return mk_pi(t->name, instantiate_rec(t->left, value, depth),
                   instantiate_rec(t->right, value, depth + 1));
  }
  return t;
}

Term abstract_rec(const Term& t, const std::string& name, int depth) {
  switch (t->kind) {
    case Kind::Var:
      if (t->index >= depth) return mk_var(t->index + 1, t->name);
      return t;
    case Kind::Const:
      if (t->name == name) return mk_var(depth, name);
      return t;
    case Kind::Sort:
      return t;
    case Kind::App:
      return mk_app(abstract_rec(t->left, name, depth),
                    abstract_rec(t->right, name, depth));
    case Kind::Lambda:
      return mk_lambda(t->name, abstract_rec(t->left, name, depth),
                       abstract_rec(t->right, name, depth + 1));
    case Kind::Pi:
      return mk_pi(t->name, abstract_rec(t->left, name, depth),
                   abstract_rec(t->right, name, depth + 1));
  }
  return t;
}

}  // namespace

Term instantiate(const Term& body, const Term& value) {
  return instantiate_rec(body, value, 0);
}

Term abstract_const(const Term& t, const std::string& name) {
  return abstract_rec(t, name, 0);
}

bool has_loose_var(const Term& t, int index) {
  switch (t->kind) {
    case Kind::Var:
      return t->index == index;
    case Kind::Const:
    case Kind::Sort:
      return false;
    case Kind::App:
      return has_loose_var(t->left, index) || has_loose_var(t->right, index);
    case Kind::Lambda:
    case Kind::Pi:
      return has_loose_var(t->left, index) ||
             has_loose_var(t->right, index + 1);
  }
  return false;
}

bool mentions_const(const Term& t, const std::string& name) {
  switch (t->kind) {
    case Kind::Const:
      return t->name == name;
    case Kind::Var:
    case Kind::Sort:
      return false;
    default:
      return mentions_const(t->left, name) || mentions_const(t->right, name);
  }
}

std::pair<Term, std::vector<Term>> decompose_app(const Term& t) {
  std::vector<Term> args;
  Term head = t;
  while (head->kind == Kind::App) {
    args.push_back(head->right);
    head = head->left;
  }
  std::reverse(args.begin(), args.end());
  return {head, std::move(args)};
}

namespace {

bool is_atom(const Term& t) {
  return t->kind == Kind::Var || t->kind == Kind::Const ||
         t->kind == Kind::Sort;
}

void collect_consts(const Term& t, std::vector<std::string>& out) {
  switch (t->kind) {
    case Kind::Const:
      out.push_back(t->name);
      return;
    case Kind::Var:
    case Kind::Sort:
      return;
    default:
      collect_consts(t->left, out);
      collect_consts(t->right, out);
  }
}

std::string pick_name(const std::string& hint,
                      const std::vector<std::string>& taken,
                      const std::vector<std::string>& consts) {
  std::string base = hint.empty() ? "x" : hint;
  std::string candidate = base;
  auto used = [&](const std::string& n) {
    for (const auto& s : taken)
      if (s == n) return true;
    for (const auto& s : consts)
      if (s == n) return true;
    return false;
  };
  while (used(candidate)) candidate += "'";
  return candidate;
}

void show_rec(const Term& t, std::vector<std::string>& names,
              const std::vector<std::string>& consts, std::ostringstream& os,
              bool fn_pos, bool arg_pos) {
  switch (t->kind) {
    case Kind::Var: {
      int i = static_cast<int>(names.size()) - 1 - t->index;
      if (i >= 0)
        os << names[static_cast<std::size_t>(i)];
      else
        os << "#" << t->index;
      return;
    }
    case Kind::Const:
      os << t->name;
      return;
    case Kind::Sort:
      os << "Type";
      return;
    case Kind::App: {
      bool parens = arg_pos;
      if (parens) os << "(";
      show_rec(t->left, names, consts, os, true, false);
      os << " ";
      show_rec(t->right, names, consts, os, false, true);
      if (parens) os << ")";
      return;
    }
    case Kind::Lambda: {
      bool parens = fn_pos || arg_pos;
      if (parens) os << "(";
      std::string n = pick_name(t->name, names, consts);
      os << "fun (" << n << " : ";
      show_rec(t->left, names, consts, os, false, false);
      os << "), ";
      names.push_back(n);
      show_rec(t->right, names, consts, os, false, false);
      names.pop_back();
      if (parens) os << ")";
      return;
    }
    case Kind::Pi: {
      bool parens = fn_pos || arg_pos;
      if (parens) os << "(";
      if (!has_loose_var(t->right, 0)) {
        // non-dependent: print as arrow
        bool lp = t->left->kind == Kind::Pi || t->left->kind == Kind::Lambda;
        if (lp && !is_atom(t->left)) os << "(";
        show_rec(t->left, names, consts, os, lp, lp);
        if (lp && !is_atom(t->left)) os << ")";
        os << " -> ";
        names.push_back("_");
        show_rec(t->right, names, consts, os, false, false);
        names.pop_back();
      } else {
        std::string n = pick_name(t->name, names, consts);
        os << "Pi (" << n << " : ";
        show_rec(t->left, names, consts, os, false, false);
        os << "), ";
        names.push_back(n);
        show_rec(t->right, names, consts, os, false, false);
        names.pop_back();
      }
      if (parens) os << ")";
      return;
    }
  }
}

}  // namespace

std::string show(const Term& t) {
  std::ostringstream os;
  std::vector<std::string> names;
  std::vector<std::string> consts;
  collect_consts(t, consts);
  show_rec(t, names, consts, os, false, false);
  return os.str();
}

}  // namespace cc
