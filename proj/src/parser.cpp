#include "cc/parser.hpp"

#include <cctype>
#include <sstream>

namespace cc {

namespace {

enum class Tok {
  Name,
  LParen,
  RParen,
  Colon,
  Assign,  // :=
  Comma,
  Arrow,   // ->
  EqEq,    // ==
  Eq,      // =
  End
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

bool is_name_char(char ch) {
  unsigned char c = static_cast<unsigned char>(ch);
  if (c >= 0x80) return true;  // UTF-8 continuation / multibyte
  if (std::isalnum(c)) return true;
  return ch == '_' || ch == '\'' || ch == '!' || ch == '.';
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> toks;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string s) {
    toks.push_back({k, std::move(s), line, col});
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (ch == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (ch == '(') {
      push(Tok::LParen, "(");
      ++i;
      ++col;
      continue;
    }
    if (ch == ')') {
      push(Tok::RParen, ")");
      ++i;
      ++col;
      continue;
    }
    if (ch == ',') {
      push(Tok::Comma, ",");
      ++i;
      ++col;
      continue;
    }
    if (ch == ':') {
      if (i + 1 < text.size() && text[i + 1] == '=') {
        push(Tok::Assign, ":=");
        i += 2;
        col += 2;
      } else {
        push(Tok::Colon, ":");
        ++i;
        ++col;
      }
      continue;
    }
    if (ch == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      push(Tok::Arrow, "->");
      i += 2;
      col += 2;
      continue;
    }
    if (ch == '=') {
      if (i + 1 < text.size() && text[i + 1] == '=') {
        push(Tok::EqEq, "==");
        i += 2;
        col += 2;
      } else {
        push(Tok::Eq, "=");
        ++i;
        ++col;
      }
      continue;
    }
    if (is_name_char(ch)) {
      std::size_t start = i;
      int start_col = col;
      while (i < text.size() && is_name_char(text[i])) {
        ++i;
        ++col;
      }
      toks.push_back(
          {Tok::Name, text.substr(start, i - start), line, start_col});
      continue;
    }
    throw ParseError(line, col, std::string("unexpected character `") + ch +
                                    "`");
  }
  toks.push_back({Tok::End, "", line, col});
  return toks;
}

class TermParser {
 public:
  TermParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Term parse_full() {
    Term t = parse_term();
    expect(Tok::End, "end of input");
    return t;
  }

  // Parses a term, stopping at any of the given top-level delimiters.
  Term parse_term() {
    const Token& t = peek();
    if (t.kind == Tok::Name && (t.text == "fun" || t.text == "Pi")) {
      bool is_fun = t.text == "fun";
      next();
      std::vector<std::pair<std::string, Term>> groups;
      while (peek().kind == Tok::LParen) {
        next();
        std::vector<std::string> ns;
        while (peek().kind == Tok::Name) ns.push_back(next().text);
        if (ns.empty()) fail("expected binder name");
        expect(Tok::Colon, "`:`");
        Term ty = parse_term();
        expect(Tok::RParen, "`)`");
        // `(x y : T)` binds y under x; T is lifted per extra binder.
        for (std::size_t k = 0; k < ns.size(); ++k) {
          groups.emplace_back(ns[k], lift(ty, static_cast<int>(k)));
          binders_.push_back(ns[k]);
        }
      }
      if (groups.empty()) fail("expected binder group `(x : T)`");
      expect(Tok::Comma, "`,`");
      Term body = parse_term();
      for (std::size_t k = groups.size(); k-- > 0;) {
        binders_.pop_back();
        body = is_fun ? mk_lambda(groups[k].first, groups[k].second, body)
                      : mk_pi(groups[k].first, groups[k].second, body);
      }
      return body;
    }
    return parse_arrow();
  }

  Term parse_arrow() {
    Term lhs = parse_app();
    if (peek().kind == Tok::Arrow) {
      next();
      Term rhs = parse_arrow_with_shift();
      return mk_pi("", lhs, rhs);
    }
    return lhs;
  }

  void fail(const std::string& msg) {
    const Token& t = peek();
    throw ParseError(t.line, t.col,
                     msg + " (got `" + (t.kind == Tok::End ? "<end>" : t.text) +
                         "`)");
  }

 private:
  Term parse_arrow_with_shift() {
    binders_.push_back("");  // anonymous binder for the arrow codomain
    Term t = parse_term();
    binders_.pop_back();
    return t;
  }

  Term parse_app() {
    Term t = parse_atom();
    while (true) {
      const Token& p = peek();
      if (p.kind == Tok::LParen ||
          (p.kind == Tok::Name && p.text != "fun" && p.text != "Pi")) {
        t = mk_app(t, parse_atom());
      } else {
        break;
      }
    }
    return t;
  }

  Term parse_atom() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Term inner = parse_term();
      expect(Tok::RParen, "`)`");
      return inner;
    }
    if (t.kind == Tok::Name) {
      next();
      if (t.text == "Type") return sort();
      for (std::size_t k = binders_.size(); k-- > 0;) {
        if (!binders_[k].empty() && binders_[k] == t.text)
          return mk_var(static_cast<int>(binders_.size() - 1 - k), t.text);
      }
      return mk_const(t.text);
    }
    fail("expected a term");
    return nullptr;
  }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    ++pos_;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> binders_;
};

}  // namespace

Term parse_term(const std::string& text) {
  return TermParser(tokenize(text)).parse_full();
}

namespace {

// Splits a token span at the first top-level == or = and returns both the
// sides and whether the equality is heterogeneous.
struct Line {
  std::vector<Token> toks;
  int line_no;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream is(text);
  std::string raw;
  int no = 0;
  while (std::getline(is, raw)) {
    ++no;
    // tokenize per line; adjust line numbers
    std::vector<Token> toks = tokenize(raw);
    for (auto& t : toks) t.line = no;
    if (toks.size() <= 1) continue;  // only End
    lines.push_back({std::move(toks), no});
  }
  return lines;
}

Term parse_tokens_as_term(std::vector<Token> toks) {
  return TermParser(std::move(toks)).parse_full();
}

std::pair<std::vector<Token>, std::vector<Token>> split_equality(
    const std::vector<Token>& toks, std::size_t from, bool& hetero, int line) {
  int depth = 0;
  for (std::size_t i = from; i < toks.size(); ++i) {
    if (toks[i].kind == Tok::LParen) ++depth;
    if (toks[i].kind == Tok::RParen) --depth;
    if (depth == 0 &&
        (toks[i].kind == Tok::EqEq || toks[i].kind == Tok::Eq)) {
      hetero = toks[i].kind == Tok::EqEq;
      std::vector<Token> l(toks.begin() + static_cast<long>(from),
                           toks.begin() + static_cast<long>(i));
      std::vector<Token> r(toks.begin() + static_cast<long>(i) + 1,
                           toks.end() - 1);
      l.push_back({Tok::End, "", line, 0});
      r.push_back({Tok::End, "", line, 0});
      return {std::move(l), std::move(r)};
    }
  }
  throw ParseError(line, 1, "expected `==` or `=` in equality statement");
}

}  // namespace

Problem parse_problem(const std::string& text) {
  Problem p;
  p.axioms = std::make_shared<AxiomTable>();
  std::vector<Line> lines = split_lines(text);

  for (Line& ln : lines) {
    const std::vector<Token>& toks = ln.toks;
    if (toks[0].kind != Tok::Name)
      throw ParseError(ln.line_no, toks[0].col, "expected a declaration");
    const std::string& kw = toks[0].text;
    auto name_at = [&](std::size_t i) -> const std::string& {
      if (i >= toks.size() || toks[i].kind != Tok::Name)
        throw ParseError(ln.line_no, 1, "expected a name in " + kw + " line");
      return toks[i].text;
    };
    auto slice = [&](std::size_t from, std::size_t to) {
      std::vector<Token> s(toks.begin() + static_cast<long>(from),
                           toks.begin() + static_cast<long>(to));
      s.push_back({Tok::End, "", ln.line_no, 0});
      return s;
    };
    auto find_top = [&](Tok k) -> std::size_t {
      int depth = 0;
      for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        if (toks[i].kind == Tok::LParen) ++depth;
        if (toks[i].kind == Tok::RParen) --depth;
        if (depth == 0 && toks[i].kind == k) return i;
      }
      return toks.size();
    };

    try {
      if (kw == "axiom" || kw == "var") {
        const std::string& name = name_at(1);
        if (toks.size() < 4 || toks[2].kind != Tok::Colon)
          throw ParseError(ln.line_no, 1, "expected `" + kw + " name : type`");
        Term ty = parse_tokens_as_term(slice(3, toks.size() - 1));
        Declaration d{name, ty, nullptr};
        check_decl(d, p.axioms->env(), p.ctx);
        if (kw == "axiom")
          p.axioms->add_axiom(name, ty);
        else
          p.ctx.add(std::move(d));
      } else if (kw == "def") {
        const std::string& name = name_at(1);
        std::size_t assign = find_top(Tok::Assign);
        if (toks[2].kind != Tok::Colon || assign >= toks.size())
          throw ParseError(ln.line_no, 1,
                           "expected `def name : type := value`");
        Term ty = parse_tokens_as_term(slice(3, assign));
        Term val = parse_tokens_as_term(slice(assign + 1, toks.size() - 1));
        Declaration d{name, ty, val};
        check_decl(d, p.axioms->env(), p.ctx);
        p.ctx.add(std::move(d));
      } else if (kw == "hyp") {
        const std::string& name = name_at(1);
        if (toks.size() < 4 || toks[2].kind != Tok::Colon)
          throw ParseError(ln.line_no, 1, "expected `hyp name : a == b`");
        bool hetero = true;
        auto [lt, rt] = split_equality(toks, 3, hetero, ln.line_no);
        EqStatement h;
        h.name = name;
        h.lhs = parse_tokens_as_term(std::move(lt));
        h.rhs = parse_tokens_as_term(std::move(rt));
        h.hetero = hetero;
        Term tl = infer_type(h.lhs, p.axioms->env(), p.ctx);
        Term tr = infer_type(h.rhs, p.axioms->env(), p.ctx);
        Term stmt;
        if (hetero) {
          stmt = mk_heq(tl, tr, h.lhs, h.rhs);
        } else {
          if (!defeq(tl, tr, p.axioms->env(), p.ctx))
            throw ParseError(ln.line_no, 1,
                             "homogeneous equality between distinct types `" +
                                 show(tl) + "` and `" + show(tr) + "`");
          stmt = mk_eq(tl, h.lhs, h.rhs);
        }
        p.ctx.add({name, stmt, nullptr});
        p.hyps.push_back(std::move(h));
      } else if (kw == "subsingleton") {
        std::size_t by = toks.size();
        int depth = 0;
        for (std::size_t i = 1; i + 1 < toks.size(); ++i) {
          if (toks[i].kind == Tok::LParen) ++depth;
          if (toks[i].kind == Tok::RParen) --depth;
          if (depth == 0 && toks[i].kind == Tok::Name && toks[i].text == "by") {
            by = i;
            break;
          }
        }
        if (by + 2 + 1 != toks.size())
          throw ParseError(ln.line_no, 1,
                           "expected `subsingleton type by proof-name`");
        SubsingletonDecl sd;
        sd.type = parse_tokens_as_term(slice(1, by));
        sd.proof_name = name_at(by + 1);
        infer_type(sd.type, p.axioms->env(), p.ctx);
        p.subsingletons.push_back(std::move(sd));
      } else if (kw == "goal") {
        if (p.has_goal)
          throw ParseError(ln.line_no, 1, "duplicate goal line");
        bool hetero = true;
        auto [lt, rt] = split_equality(toks, 1, hetero, ln.line_no);
        p.goal.lhs = parse_tokens_as_term(std::move(lt));
        p.goal.rhs = parse_tokens_as_term(std::move(rt));
        p.goal.hetero = hetero;
        Term tl = infer_type(p.goal.lhs, p.axioms->env(), p.ctx);
        Term tr = infer_type(p.goal.rhs, p.axioms->env(), p.ctx);
        if (!hetero && !defeq(tl, tr, p.axioms->env(), p.ctx))
          throw ParseError(ln.line_no, 1,
                           "homogeneous goal between distinct types `" +
                               show(tl) + "` and `" + show(tr) + "`");
        p.has_goal = true;
      } else {
        throw ParseError(ln.line_no, toks[0].col,
                         "unknown declaration `" + kw + "`");
      }
    } catch (const KernelError& e) {
      throw ParseError(ln.line_no, 1, e.what());
    }
  }
  if (!p.has_goal) throw ParseError(0, 0, "missing goal line");
  return p;
}

std::string print_problem(const Problem& p) {
  std::ostringstream os;
  // Fixed prelude constants are implicit; print user axioms only.
  static const char* prelude[] = {"eq",     "refl", "erec", "heq", "hrefl",
                                  "hsymm",  "htrans", "ofeq", "ofheq"};
  auto is_prelude = [&](const std::string& n) {
    for (const char* s : prelude)
      if (n == s) return true;
    return n.rfind("hcongr_", 0) == 0 || n.rfind("hsse_", 0) == 0;
  };
  for (const Declaration& d : p.axioms->env().all())
    if (!is_prelude(d.name))
      os << "axiom " << d.name << " : " << show(d.type) << "\n";
  std::size_t hyp_idx = 0;
  for (const Declaration& d : p.ctx.all()) {
    if (hyp_idx < p.hyps.size() && p.hyps[hyp_idx].name == d.name) {
      const EqStatement& h = p.hyps[hyp_idx++];
      os << "hyp " << h.name << " : " << show(h.lhs)
         << (h.hetero ? " == " : " = ") << show(h.rhs) << "\n";
    } else if (d.value) {
      os << "def " << d.name << " : " << show(d.type) << " := "
         << show(d.value) << "\n";
    } else {
      os << "var " << d.name << " : " << show(d.type) << "\n";
    }
  }
  for (const SubsingletonDecl& s : p.subsingletons)
    os << "subsingleton " << show(s.type) << " by " << s.proof_name << "\n";
  if (p.has_goal)
    os << "goal " << show(p.goal.lhs) << (p.goal.hetero ? " == " : " = ")
       << show(p.goal.rhs) << "\n";
  return os.str();
}

}  // namespace cc
