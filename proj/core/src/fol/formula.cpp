#include "tc/fol/formula.hpp"

#include <optional>
#include <stdexcept>

namespace tc::fol {

// ---- terms ----

Term Term::var(std::string name) { return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}})); }
Term Term::zero() { return Term(std::make_shared<const Node>(Node{Kind::Zero, {}, {}})); }
Term Term::succ(Term t) { return Term(std::make_shared<const Node>(Node{Kind::Succ, {}, {std::move(t)}})); }
Term Term::add(Term a, Term b) {
  return Term(std::make_shared<const Node>(Node{Kind::Add, {}, {std::move(a), std::move(b)}}));
}
Term Term::mul(Term a, Term b) {
  return Term(std::make_shared<const Node>(Node{Kind::Mul, {}, {std::move(a), std::move(b)}}));
}
Term Term::apply(std::string symbol, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{Kind::Apply, std::move(symbol), std::move(args)}));
}

namespace {

int compare(const Term& a, const Term& b);

int compare_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (int c = compare(a[i], b[i])) return c;
  return 0;
}

int compare(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (int c = a.name().compare(b.name())) return c < 0 ? -1 : 1;
  return compare_terms(a.args(), b.args());
}

}  // namespace

bool operator==(const Term& a, const Term& b) { return a.node_ == b.node_ || compare(a, b) == 0; }
bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

Term numeral(const Natural& n) {
  if (n < 0) throw std::invalid_argument("negative numeral");
  if (n <= 16) {
    Term t = Term::zero();
    for (unsigned long i = 0; i < n.get_ui(); ++i) t = Term::succ(t);
    return t;
  }
  const Term two = Term::succ(Term::succ(Term::zero()));
  std::string bits = n.get_str(2);
  Term t = Term::succ(Term::zero());
  for (std::size_t i = 1; i < bits.size(); ++i) {
    t = Term::mul(t, two);
    if (bits[i] == '1') t = Term::succ(t);
  }
  return t;
}

std::optional<Natural> term_value(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return Natural(0);
    case Term::Kind::Succ: {
      auto v = term_value(t.arg(0));
      if (!v) return std::nullopt;
      return *v + 1;
    }
    case Term::Kind::Add:
    case Term::Kind::Mul: {
      auto a = term_value(t.arg(0)), b = term_value(t.arg(1));
      if (!a || !b) return std::nullopt;
      return t.kind() == Term::Kind::Add ? Natural(*a + *b) : Natural(*a * *b);
    }
    default: return std::nullopt;
  }
}

// ---- formulas ----

Formula Formula::make(Kind k, std::string name, std::vector<Term> terms, std::vector<Formula> subs) {
  std::size_t size = 1;
  for (const auto& s : subs) size += s.size();
  return Formula(std::make_shared<const Node>(Node{k, std::move(name), std::move(terms), std::move(subs), size}));
}

std::size_t Formula::size() const { return node_->size; }

Formula Formula::eq(Term a, Term b) { return make(Kind::Eq, {}, {std::move(a), std::move(b)}, {}); }
Formula Formula::less(Term a, Term b) { return make(Kind::Less, {}, {std::move(a), std::move(b)}, {}); }
Formula Formula::in(Term a, Term b) { return make(Kind::In, {}, {std::move(a), std::move(b)}, {}); }
Formula Formula::rel(std::string symbol, std::vector<Term> args) {
  return make(Kind::Rel, std::move(symbol), std::move(args), {});
}
Formula Formula::neg(Formula f) { return make(Kind::Not, {}, {}, {std::move(f)}); }
Formula Formula::conj(Formula a, Formula b) { return make(Kind::And, {}, {}, {std::move(a), std::move(b)}); }
Formula Formula::disj(Formula a, Formula b) { return make(Kind::Or, {}, {}, {std::move(a), std::move(b)}); }
Formula Formula::imp(Formula a, Formula b) { return make(Kind::Imp, {}, {}, {std::move(a), std::move(b)}); }
Formula Formula::forall(std::string var, Formula body) { return make(Kind::Forall, std::move(var), {}, {std::move(body)}); }
Formula Formula::exists(std::string var, Formula body) { return make(Kind::Exists, std::move(var), {}, {std::move(body)}); }
Formula Formula::forall_lt(std::string var, Term bound, Formula body) {
  return make(Kind::ForallLt, std::move(var), {std::move(bound)}, {std::move(body)});
}
Formula Formula::exists_lt(std::string var, Term bound, Formula body) {
  return make(Kind::ExistsLt, std::move(var), {std::move(bound)}, {std::move(body)});
}

Formula Formula::all_of(const std::vector<Formula>& fs) {
  if (fs.empty()) return eq(Term::zero(), Term::zero());
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = conj(fs[i], acc);
  return acc;
}

Formula Formula::any_of(const std::vector<Formula>& fs) {
  if (fs.empty()) return neg(eq(Term::zero(), Term::zero()));
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = disj(fs[i], acc);
  return acc;
}

namespace {

int compare(const Formula& a, const Formula& b) {
  if (&a == &b) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.is_atomic() || a.is_quantifier()) {
    if (int c = a.symbol().compare(b.symbol())) return c < 0 ? -1 : 1;
    if (int c = compare_terms(a.terms(), b.terms())) return c;
  }
  std::size_t n = a.is_atomic() ? 0 : (a.kind() == Formula::Kind::Not || a.is_quantifier() ? 1 : 2);
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compare(a.sub(i), b.sub(i))) return c;
  return 0;
}

}  // namespace

bool operator==(const Formula& a, const Formula& b) { return a.node_ == b.node_ || compare(a, b) == 0; }
bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

// ---- variables and substitution ----

namespace {

void collect(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::Var) out.insert(t.name());
  for (const auto& a : t.args()) collect(a, out);
}

void collect_all_vars(const Formula& f, std::set<std::string>& out) {
  for (const auto& t : f.terms()) collect(t, out);
  if (f.is_quantifier()) out.insert(f.var());
  if (!f.is_atomic()) {
    std::size_t n = f.kind() == Formula::Kind::Not || f.is_quantifier() ? 1 : 2;
    for (std::size_t i = 0; i < n; ++i) collect_all_vars(f.sub(i), out);
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect(t, out);
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  using K = Formula::Kind;
  std::set<std::string> out;
  switch (f.kind()) {
    case K::Eq:
    case K::Less:
    case K::In:
    case K::Rel:
      for (const auto& t : f.terms()) collect(t, out);
      return out;
    case K::Not: return free_vars(f.sub(0));
    case K::And:
    case K::Or:
    case K::Imp: {
      out = free_vars(f.sub(0));
      auto b = free_vars(f.sub(1));
      out.insert(b.begin(), b.end());
      return out;
    }
    case K::Forall:
    case K::Exists:
      out = free_vars(f.body());
      out.erase(f.var());
      return out;
    case K::ForallLt:
    case K::ExistsLt:
      out = free_vars(f.body());
      out.erase(f.var());
      collect(f.bound(), out);
      return out;
  }
  return out;
}

bool is_closed(const Formula& f) { return free_vars(f).empty(); }

std::string fresh_var(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (unsigned i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

Term substitute(const Term& t, const std::string& var, const Term& replacement) {
  switch (t.kind()) {
    case Term::Kind::Var: return t.name() == var ? replacement : t;
    case Term::Kind::Zero: return t;
    default: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      bool changed = false;
      for (const auto& a : t.args()) {
        args.push_back(substitute(a, var, replacement));
        changed = changed || !(args.back() == a);
      }
      if (!changed) return t;
      switch (t.kind()) {
        case Term::Kind::Succ: return Term::succ(args[0]);
        case Term::Kind::Add: return Term::add(args[0], args[1]);
        case Term::Kind::Mul: return Term::mul(args[0], args[1]);
        default: return Term::apply(t.name(), std::move(args));
      }
    }
  }
}

Formula substitute(const Formula& f, const std::string& var, const Term& replacement) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq: return Formula::eq(substitute(f.terms()[0], var, replacement), substitute(f.terms()[1], var, replacement));
    case K::Less:
      return Formula::less(substitute(f.terms()[0], var, replacement), substitute(f.terms()[1], var, replacement));
    case K::In: return Formula::in(substitute(f.terms()[0], var, replacement), substitute(f.terms()[1], var, replacement));
    case K::Rel: {
      std::vector<Term> args;
      for (const auto& t : f.terms()) args.push_back(substitute(t, var, replacement));
      return Formula::rel(f.symbol(), std::move(args));
    }
    case K::Not: return Formula::neg(substitute(f.sub(0), var, replacement));
    case K::And: return Formula::conj(substitute(f.sub(0), var, replacement), substitute(f.sub(1), var, replacement));
    case K::Or: return Formula::disj(substitute(f.sub(0), var, replacement), substitute(f.sub(1), var, replacement));
    case K::Imp: return Formula::imp(substitute(f.sub(0), var, replacement), substitute(f.sub(1), var, replacement));
    case K::Forall:
    case K::Exists:
    case K::ForallLt:
    case K::ExistsLt: {
      std::optional<Term> bound;
      if (f.is_bounded_quantifier()) bound = substitute(f.bound(), var, replacement);
      auto rebuild = [&](const std::string& v, const Formula& body) {
        switch (f.kind()) {
          case K::Forall: return Formula::forall(v, body);
          case K::Exists: return Formula::exists(v, body);
          case K::ForallLt: return Formula::forall_lt(v, *bound, body);
          default: return Formula::exists_lt(v, *bound, body);
        }
      };
      if (f.var() == var) return rebuild(f.var(), f.body());
      auto body_free = free_vars(f.body());
      if (!body_free.count(var)) return rebuild(f.var(), f.body());
      auto repl_free = free_vars(replacement);
      if (!repl_free.count(f.var())) return rebuild(f.var(), substitute(f.body(), var, replacement));
      std::set<std::string> avoid = repl_free;
      collect_all_vars(f.body(), avoid);
      avoid.insert(var);
      std::string renamed = fresh_var(f.var(), avoid);
      Formula body = substitute(f.body(), f.var(), Term::var(renamed));
      return rebuild(renamed, substitute(body, var, replacement));
    }
  }
  return f;
}

Formula expand_bounded(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Less:
    case K::In:
    case K::Rel: return f;
    case K::Not: return Formula::neg(expand_bounded(f.sub(0)));
    case K::And: return Formula::conj(expand_bounded(f.sub(0)), expand_bounded(f.sub(1)));
    case K::Or: return Formula::disj(expand_bounded(f.sub(0)), expand_bounded(f.sub(1)));
    case K::Imp: return Formula::imp(expand_bounded(f.sub(0)), expand_bounded(f.sub(1)));
    case K::Forall: return Formula::forall(f.var(), expand_bounded(f.body()));
    case K::Exists: return Formula::exists(f.var(), expand_bounded(f.body()));
    case K::ForallLt:
      return Formula::forall(f.var(), Formula::imp(Formula::less(Term::var(f.var()), f.bound()), expand_bounded(f.body())));
    case K::ExistsLt:
      return Formula::exists(f.var(), Formula::conj(Formula::less(Term::var(f.var()), f.bound()), expand_bounded(f.body())));
  }
  return f;
}

}  // namespace tc::fol
