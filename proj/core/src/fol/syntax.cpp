#include "tc/fol/syntax.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace tc::fol {

namespace {

struct Tok {
  enum Kind { Ident, Number, Sym, End } kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Tok> lex(const std::string& s) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), i});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, s.substr(i, j - i), i});
      i = j;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::Sym, "->", i});
      i += 2;
    } else if (std::string("().,~&|=<+*").find(c) != std::string::npos) {
      out.push_back({Tok::Sym, std::string(1, c), i});
      ++i;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool reserved(const std::string& w) { return w == "forall" || w == "exists" || w == "in" || w == "s"; }

class Parser {
 public:
  explicit Parser(std::vector<Tok> toks) : t_(std::move(toks)) {}

  Formula formula() {
    Formula lhs = disjunction();
    if (sym("->")) {
      ++p_;
      return Formula::imp(lhs, formula());
    }
    return lhs;
  }

  Term term() {
    Term lhs = product();
    while (sym("+")) {
      ++p_;
      lhs = Term::add(lhs, product());
    }
    return lhs;
  }

  void expect_end() {
    if (t_[p_].kind != Tok::End) fail("unexpected '" + t_[p_].text + "'");
  }

 private:
  Formula disjunction() {
    Formula lhs = conjunction();
    if (sym("|")) {
      ++p_;
      return Formula::disj(lhs, disjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    if (sym("&")) {
      ++p_;
      return Formula::conj(lhs, conjunction());
    }
    return lhs;
  }

  Formula unary() {
    if (sym("~")) {
      ++p_;
      return Formula::neg(unary());
    }
    if (word("forall") || word("exists")) return quantifier();
    if (sym("(")) {
      // A parenthesised formula, unless the parenthesis opens a term.
      std::size_t save = p_;
      try {
        ++p_;
        Formula f = formula();
        expect(")");
        if (!relation_op()) return f;
      } catch (const SyntaxError&) {
      }
      p_ = save;
    }
    return atom();
  }

  Formula quantifier() {
    bool all = t_[p_].text == "forall";
    ++p_;
    std::string v = variable_name();
    std::optional<Term> bound;
    if (sym("<")) {
      ++p_;
      bound = term();
    }
    expect(".");
    Formula body = formula();
    if (bound) return all ? Formula::forall_lt(v, *bound, body) : Formula::exists_lt(v, *bound, body);
    return all ? Formula::forall(v, body) : Formula::exists(v, body);
  }

  Formula atom() {
    // Relation or propositional atom: an identifier not continued by a term operator.
    if (t_[p_].kind == Tok::Ident && !reserved(t_[p_].text)) {
      std::size_t save = p_;
      std::string name = t_[p_].text;
      ++p_;
      std::vector<Term> args;
      if (sym("(")) args = arguments();
      if (!relation_op() && !sym("+") && !sym("*")) return Formula::rel(name, std::move(args));
      p_ = save;
    }
    Term lhs = term();
    if (sym("=")) {
      ++p_;
      return Formula::eq(lhs, term());
    }
    if (sym("<")) {
      ++p_;
      return Formula::less(lhs, term());
    }
    if (word("in")) {
      ++p_;
      return Formula::in(lhs, term());
    }
    fail("expected '=', '<' or 'in'");
  }

  Term product() {
    Term lhs = primary();
    while (sym("*")) {
      ++p_;
      lhs = Term::mul(lhs, primary());
    }
    return lhs;
  }

  Term primary() {
    const Tok& t = t_[p_];
    if (t.kind == Tok::Number) {
      ++p_;
      return numeral(Natural(t.text));
    }
    if (sym("(")) {
      ++p_;
      Term inner = term();
      expect(")");
      return inner;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "s") {
        ++p_;
        expect("(");
        Term inner = term();
        expect(")");
        return Term::succ(inner);
      }
      if (reserved(t.text)) fail("unexpected keyword '" + t.text + "'");
      ++p_;
      if (sym("(")) return Term::apply(t.text, arguments());
      return Term::var(t.text);
    }
    fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  std::vector<Term> arguments() {
    expect("(");
    std::vector<Term> args;
    if (!sym(")")) {
      args.push_back(term());
      while (sym(",")) {
        ++p_;
        args.push_back(term());
      }
    }
    expect(")");
    return args;
  }

  std::string variable_name() {
    const Tok& t = t_[p_];
    if (t.kind != Tok::Ident || reserved(t.text)) fail("expected a variable");
    ++p_;
    return t.text;
  }

  bool relation_op() const { return sym("=") || sym("<") || word("in"); }
  bool sym(const char* s) const { return t_[p_].kind == Tok::Sym && t_[p_].text == s; }
  bool word(const char* s) const { return t_[p_].kind == Tok::Ident && t_[p_].text == s; }
  void expect(const char* s) {
    if (!sym(s)) fail(std::string("expected '") + s + "'");
    ++p_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, t_[p_].pos); }

  std::vector<Tok> t_;
  std::size_t p_ = 0;
};

// ---- printing ----

int term_prec(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Add: return 1;
    case Term::Kind::Mul: return 2;
    default: return 3;
  }
}

void print_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var: out += t.name(); return;
    case Term::Kind::Zero: out += "0"; return;
    case Term::Kind::Succ:
      out += "s(";
      print_term(t.arg(0), out);
      out += ")";
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul: {
      int p = term_prec(t);
      bool lp = term_prec(t.arg(0)) < p, rp = term_prec(t.arg(1)) <= p;
      if (lp) out += "(";
      print_term(t.arg(0), out);
      if (lp) out += ")";
      out += t.kind() == Term::Kind::Add ? " + " : " * ";
      if (rp) out += "(";
      print_term(t.arg(1), out);
      if (rp) out += ")";
      return;
    }
    case Term::Kind::Apply:
      out += t.name() + "(";
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ", ";
        print_term(t.arg(i), out);
      }
      out += ")";
      return;
  }
}

int formula_prec(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Imp: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
    case Formula::Kind::ForallLt:
    case Formula::Kind::ExistsLt: return 0;
    default: return 4;
  }
}

// True when the printed form ends in an unparenthesised quantifier body,
// which would swallow anything written after it.
bool open_ended(const Formula& f) {
  if (f.is_quantifier()) return true;
  int p = formula_prec(f);
  if (f.kind() == Formula::Kind::Not) {
    int q = formula_prec(f.sub(0));
    return !(q >= 1 && q <= 3) && open_ended(f.sub(0));
  }
  if (p >= 1 && p <= 3) {
    int q = formula_prec(f.sub(1));
    return !(q >= 1 && q < p) && open_ended(f.sub(1));
  }
  return false;
}

void print_formula(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  auto wrap = [&](const Formula& g, bool parens) {
    if (parens) out += "(";
    print_formula(g, out);
    if (parens) out += ")";
  };
  switch (f.kind()) {
    case K::Eq:
    case K::Less:
    case K::In:
      print_term(f.terms()[0], out);
      out += f.kind() == K::Eq ? " = " : f.kind() == K::Less ? " < " : " in ";
      print_term(f.terms()[1], out);
      return;
    case K::Rel:
      out += f.symbol();
      if (!f.terms().empty()) {
        out += "(";
        for (std::size_t i = 0; i < f.terms().size(); ++i) {
          if (i) out += ", ";
          print_term(f.terms()[i], out);
        }
        out += ")";
      }
      return;
    case K::Not: {
      out += "~";
      const Formula& g = f.sub(0);
      wrap(g, formula_prec(g) >= 1 && formula_prec(g) <= 3);
      return;
    }
    case K::And:
    case K::Or:
    case K::Imp: {
      int p = formula_prec(f);
      const Formula& l = f.sub(0);
      const Formula& r = f.sub(1);
      wrap(l, formula_prec(l) <= p || open_ended(l));
      out += f.kind() == K::And ? " & " : f.kind() == K::Or ? " | " : " -> ";
      wrap(r, formula_prec(r) >= 1 && formula_prec(r) < p);
      return;
    }
    case K::Forall:
    case K::Exists:
    case K::ForallLt:
    case K::ExistsLt:
      out += (f.kind() == K::Forall || f.kind() == K::ForallLt) ? "forall " : "exists ";
      out += f.var();
      if (f.is_bounded_quantifier()) {
        out += " < ";
        print_term(f.bound(), out);
      }
      out += ". ";
      print_formula(f.body(), out);
      return;
  }
}

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser p(lex(text));
  Formula f = p.formula();
  p.expect_end();
  return f;
}

Term parse_term(const std::string& text) {
  Parser p(lex(text));
  Term t = p.term();
  p.expect_end();
  return t;
}

std::string print(const Formula& f) {
  std::string out;
  print_formula(f, out);
  return out;
}

std::string print(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

}  // namespace tc::fol
