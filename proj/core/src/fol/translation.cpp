#include "tc/fol/translation.hpp"

#include <set>

namespace tc::fol {

std::optional<Translation> translation_from_id(const Natural& id) {
  if (id == 0) return Translation::Identity;
  if (id == 1) return Translation::VonNeumann;
  return std::nullopt;
}

Natural translation_id(Translation t) { return static_cast<unsigned>(t); }

std::string to_string(Translation t) { return t == Translation::Identity ? "identity" : "von-neumann"; }

namespace {

void all_names(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::Var) out.insert(t.name());
  for (const auto& a : t.args()) all_names(a, out);
}

void all_names(const Formula& f, std::set<std::string>& out) {
  for (const auto& t : f.terms()) all_names(t, out);
  if (f.is_quantifier()) out.insert(f.var());
  if (f.is_atomic()) return;
  std::size_t n = f.is_quantifier() || f.kind() == Formula::Kind::Not ? 1 : 2;
  for (std::size_t i = 0; i < n; ++i) all_names(f.sub(i), out);
}

std::string fresh(std::set<std::string>& taken) {
  std::string v;
  for (unsigned i = 0;; ++i) {
    v = "u" + std::to_string(i);
    if (!taken.count(v)) break;
  }
  taken.insert(v);
  return v;
}

Formula nat(const std::string& x) { return Formula::rel("nat", {Term::var(x)}); }

// y denotes the value of t. Bound names avoid `taken`, which must hold every
// name of t and y.
Formula value(const Term& t, const std::string& y, std::set<std::string>& taken) {
  using F = Formula;
  Term Y = Term::var(y);
  switch (t.kind()) {
    case Term::Kind::Var: return F::eq(Y, t);
    case Term::Kind::Zero: {
      std::string w = fresh(taken);
      return F::forall(w, F::neg(F::in(Term::var(w), Y)));
    }
    case Term::Kind::Succ: {
      std::string x = fresh(taken), w = fresh(taken);
      Term X = Term::var(x), W = Term::var(w);
      Formula in_succ = F::disj(F::in(W, X), F::eq(W, X));
      Formula ext = F::forall(w, F::conj(F::imp(F::in(W, Y), in_succ), F::imp(in_succ, F::in(W, Y))));
      return F::exists(x, F::conj(value(t.arg(0), x, taken), ext));
    }
    case Term::Kind::Add:
    case Term::Kind::Mul: {
      std::string a = fresh(taken), b = fresh(taken);
      Formula op = F::rel(t.kind() == Term::Kind::Add ? "add" : "mul", {Term::var(a), Term::var(b), Y});
      Formula lhs = value(t.arg(0), a, taken);
      Formula rhs = value(t.arg(1), b, taken);
      return F::exists(a, F::exists(b, F::conj(lhs, F::conj(rhs, op))));
    }
    case Term::Kind::Apply: {
      std::vector<std::string> names;
      std::vector<Term> args;
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        names.push_back(fresh(taken));
        args.push_back(Term::var(names.back()));
      }
      Formula body = F::eq(Y, Term::apply(t.name(), args));
      for (std::size_t i = t.args().size(); i-- > 0;)
        body = F::exists(names[i], F::conj(value(t.arg(i), names[i], taken), body));
      return body;
    }
  }
  return F::eq(Y, t);
}

// Depends only on f, so the translation commutes with the connectives.
Formula von_neumann(const Formula& f) {
  using K = Formula::Kind;
  using F = Formula;
  switch (f.kind()) {
    case K::Eq:
    case K::Less: {
      const Term& a = f.terms()[0];
      const Term& b = f.terms()[1];
      auto atom = [&](Term x, Term y) { return f.kind() == K::Eq ? F::eq(x, y) : F::in(x, y); };
      if (a.kind() == Term::Kind::Var && b.kind() == Term::Kind::Var) return atom(a, b);
      std::set<std::string> taken;
      all_names(f, taken);
      std::string u = fresh(taken), v = fresh(taken);
      Formula da = value(a, u, taken);
      Formula db = value(b, v, taken);
      return F::exists(u, F::exists(v, F::conj(da, F::conj(db, atom(Term::var(u), Term::var(v))))));
    }
    case K::In:
    case K::Rel: return f;
    case K::Not: return F::neg(von_neumann(f.sub(0)));
    case K::And: return F::conj(von_neumann(f.sub(0)), von_neumann(f.sub(1)));
    case K::Or: return F::disj(von_neumann(f.sub(0)), von_neumann(f.sub(1)));
    case K::Imp: return F::imp(von_neumann(f.sub(0)), von_neumann(f.sub(1)));
    case K::Forall: return F::forall(f.var(), F::imp(nat(f.var()), von_neumann(f.body())));
    case K::Exists: return F::exists(f.var(), F::conj(nat(f.var()), von_neumann(f.body())));
    case K::ForallLt:
    case K::ExistsLt: {
      std::set<std::string> taken;
      all_names(f, taken);
      std::string b = fresh(taken);
      Formula member = F::in(Term::var(f.var()), Term::var(b));
      Formula body = von_neumann(f.body());
      Formula inner = f.kind() == K::ForallLt ? F::forall(f.var(), F::imp(member, body))
                                              : F::exists(f.var(), F::conj(member, body));
      return F::exists(b, F::conj(value(f.bound(), b, taken), inner));
    }
  }
  return f;
}

}  // namespace

Formula translate(Translation t, const Formula& f) {
  if (t == Translation::Identity) return f;
  return von_neumann(f);
}

}  // namespace tc::fol
