#include "tc/fol/proof.hpp"

namespace tc::fol {

std::string to_string(Schema s) {
  switch (s) {
    case Schema::Weaken: return "weaken";
    case Schema::Distribute: return "distribute";
    case Schema::Contrapose: return "contrapose";
    case Schema::AndLeft: return "and-left";
    case Schema::AndRight: return "and-right";
    case Schema::AndIntro: return "and-intro";
    case Schema::OrLeft: return "or-left";
    case Schema::OrRight: return "or-right";
    case Schema::OrElim: return "or-elim";
    case Schema::Instantiate: return "instantiate";
    case Schema::ForallOverImp: return "forall-over-imp";
    case Schema::ExistsIntro: return "exists-intro";
    case Schema::ExistsToForall: return "exists-to-forall";
    case Schema::ForallToExists: return "forall-to-exists";
    case Schema::BoundedForallOut: return "bounded-forall-out";
    case Schema::BoundedForallIn: return "bounded-forall-in";
    case Schema::BoundedExistsOut: return "bounded-exists-out";
    case Schema::BoundedExistsIn: return "bounded-exists-in";
    case Schema::EqRefl: return "eq-refl";
    case Schema::EqSubst: return "eq-subst";
  }
  return "?";
}

namespace {

using K = Formula::Kind;

bool is(const Formula& f, K k) { return f.kind() == k; }
bool imp(const Formula& f) { return is(f, K::Imp); }
const Formula& lhs(const Formula& f) { return f.sub(0); }
const Formula& rhs(const Formula& f) { return f.sub(1); }

enum class Walk { Continue, Found, Mismatch };

Walk witness_in(const Term& a, const Term& c, const std::string& x, bool shadowed, std::optional<Term>& w) {
  if (a.kind() == Term::Kind::Var && a.name() == x && !shadowed) {
    w = c;
    return Walk::Found;
  }
  if (a.kind() != c.kind() || a.name() != c.name() || a.args().size() != c.args().size()) return Walk::Mismatch;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    Walk r = witness_in(a.arg(i), c.arg(i), x, shadowed, w);
    if (r != Walk::Continue) return r;
  }
  return Walk::Continue;
}

Walk witness_in(const Formula& a, const Formula& c, const std::string& x, bool shadowed, std::optional<Term>& w) {
  if (a.kind() != c.kind() || a.terms().size() != c.terms().size()) return Walk::Mismatch;
  if (a.is_bounded_quantifier()) {
    Walk r = witness_in(a.bound(), c.bound(), x, shadowed, w);
    if (r != Walk::Continue) return r;
    return witness_in(a.body(), c.body(), x, shadowed || a.var() == x, w);
  }
  if (a.is_quantifier()) return witness_in(a.body(), c.body(), x, shadowed || a.var() == x, w);
  if (a.is_atomic()) {
    if (a.kind() == K::Rel && a.symbol() != c.symbol()) return Walk::Mismatch;
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
      Walk r = witness_in(a.terms()[i], c.terms()[i], x, shadowed, w);
      if (r != Walk::Continue) return r;
    }
    return Walk::Continue;
  }
  std::size_t n = is(a, K::Not) ? 1 : 2;
  for (std::size_t i = 0; i < n; ++i) {
    Walk r = witness_in(a.sub(i), c.sub(i), x, shadowed, w);
    if (r != Walk::Continue) return r;
  }
  return Walk::Continue;
}

// c is a[t/x] for some term t.
bool instance_of(const Formula& a, const std::string& x, const Formula& c) {
  std::optional<Term> w;
  if (witness_in(a, c, x, false, w) == Walk::Found) return substitute(a, x, *w) == c;
  return a == c;
}

bool congruent(const Term& a, const Term& b, const Term& s, const Term& t) {
  if (a == b) return true;
  if (a == s && b == t) return true;
  if (a.kind() != b.kind() || a.name() != b.name() || a.args().size() != b.args().size()) return false;
  if (a.args().empty()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!congruent(a.arg(i), b.arg(i), s, t)) return false;
  return true;
}

bool bounded_expansion(const Formula& bounded, const Formula& expanded, bool universal) {
  K bk = universal ? K::ForallLt : K::ExistsLt;
  K ek = universal ? K::Forall : K::Exists;
  K ck = universal ? K::Imp : K::And;
  if (!is(bounded, bk) || !is(expanded, ek) || bounded.var() != expanded.var()) return false;
  const std::string& x = bounded.var();
  if (free_vars(bounded.bound()).count(x)) return false;
  const Formula& e = expanded.body();
  return is(e, ck) && lhs(e) == Formula::less(Term::var(x), bounded.bound()) && rhs(e) == bounded.body();
}

}  // namespace

bool is_instance(const Formula& f, Schema s) {
  switch (s) {
    case Schema::EqRefl: return is(f, K::Eq) && f.terms()[0] == f.terms()[1];
    default: break;
  }
  if (!imp(f)) return false;
  const Formula& p = lhs(f);
  const Formula& q = rhs(f);
  switch (s) {
    case Schema::Weaken: return imp(q) && rhs(q) == p;
    case Schema::Distribute:
      return imp(p) && imp(rhs(p)) && imp(q) && imp(lhs(q)) && imp(rhs(q)) &&
             lhs(lhs(q)) == lhs(p) && rhs(lhs(q)) == lhs(rhs(p)) && lhs(rhs(q)) == lhs(p) &&
             rhs(rhs(q)) == rhs(rhs(p));
    case Schema::Contrapose:
      return imp(p) && is(lhs(p), K::Not) && is(rhs(p), K::Not) && imp(q) && lhs(q) == rhs(p).sub(0) &&
             rhs(q) == lhs(p).sub(0);
    case Schema::AndLeft: return is(p, K::And) && lhs(p) == q;
    case Schema::AndRight: return is(p, K::And) && rhs(p) == q;
    case Schema::AndIntro:
      return imp(q) && is(rhs(q), K::And) && lhs(rhs(q)) == p && rhs(rhs(q)) == lhs(q);
    case Schema::OrLeft: return is(q, K::Or) && lhs(q) == p;
    case Schema::OrRight: return is(q, K::Or) && rhs(q) == p;
    case Schema::OrElim: {
      if (!imp(p) || !imp(q) || !imp(lhs(q)) || !imp(rhs(q))) return false;
      const Formula& c = rhs(p);
      const Formula& fin = rhs(q);
      return rhs(lhs(q)) == c && is(lhs(fin), K::Or) && lhs(lhs(fin)) == lhs(p) &&
             rhs(lhs(fin)) == lhs(lhs(q)) && rhs(fin) == c;
    }
    case Schema::Instantiate: return is(p, K::Forall) && instance_of(p.body(), p.var(), q);
    case Schema::ForallOverImp: {
      if (!is(p, K::Forall) || !imp(p.body()) || !imp(q) || !is(rhs(q), K::Forall)) return false;
      const std::string& x = p.var();
      return rhs(q).var() == x && lhs(q) == lhs(p.body()) && !free_vars(lhs(q)).count(x) &&
             rhs(q).body() == rhs(p.body());
    }
    case Schema::ExistsIntro: return is(q, K::Exists) && instance_of(q.body(), q.var(), p);
    case Schema::ExistsToForall:
      return is(p, K::Exists) && is(q, K::Not) && is(q.sub(0), K::Forall) && q.sub(0).var() == p.var() &&
             q.sub(0).body() == Formula::neg(p.body());
    case Schema::ForallToExists:
      return is(q, K::Exists) && is(p, K::Not) && is(p.sub(0), K::Forall) && p.sub(0).var() == q.var() &&
             p.sub(0).body() == Formula::neg(q.body());
    case Schema::BoundedForallOut: return bounded_expansion(p, q, true);
    case Schema::BoundedForallIn: return bounded_expansion(q, p, true);
    case Schema::BoundedExistsOut: return bounded_expansion(p, q, false);
    case Schema::BoundedExistsIn: return bounded_expansion(q, p, false);
    case Schema::EqSubst: {
      if (!is(p, K::Eq) || !imp(q)) return false;
      const Formula& a = lhs(q);
      const Formula& b = rhs(q);
      if (!a.is_atomic() || a.kind() != b.kind() || a.symbol() != b.symbol() ||
          a.terms().size() != b.terms().size())
        return false;
      for (std::size_t i = 0; i < a.terms().size(); ++i)
        if (!congruent(a.terms()[i], b.terms()[i], p.terms()[0], p.terms()[1])) return false;
      return true;
    }
    default: return false;
  }
}

std::optional<Schema> identify_axiom(const Formula& f) {
  for (int s = 0; s <= static_cast<int>(Schema::EqSubst); ++s)
    if (is_instance(f, static_cast<Schema>(s))) return static_cast<Schema>(s);
  return std::nullopt;
}

namespace {

bool free_in_premises(const std::string& x, const std::vector<Formula>& premises) {
  for (const auto& p : premises)
    if (free_vars(p).count(x)) return true;
  return false;
}

}  // namespace

ProofCheck check_proof(const Proof& proof, const std::vector<Formula>& premises) {
  auto bad = [](std::size_t i, std::string why) { return ProofCheck{false, i, std::move(why)}; };
  for (std::size_t i = 0; i < proof.size(); ++i) {
    const Step& st = proof[i];
    switch (st.rule) {
      case Step::Rule::Premise:
        if (st.a >= premises.size() || premises[st.a] != st.formula) return bad(i, "not the cited premise");
        break;
      case Step::Rule::Axiom:
        if (!is_instance(st.formula, st.schema)) return bad(i, "not an instance of " + to_string(st.schema));
        break;
      case Step::Rule::ModusPonens:
        if (st.a >= i || st.b >= i) return bad(i, "modus ponens cites a later line");
        if (proof[st.b].formula != Formula::imp(proof[st.a].formula, st.formula))
          return bad(i, "cited lines do not fit modus ponens");
        break;
      case Step::Rule::Generalize:
        if (st.a >= i) return bad(i, "generalization cites a later line");
        if (!is(st.formula, K::Forall) || st.formula.body() != proof[st.a].formula)
          return bad(i, "not a generalization of the cited line");
        if (free_in_premises(st.formula.var(), premises)) return bad(i, "variable is free in a premise");
        break;
    }
  }
  return {};
}

std::optional<Proof> justify(const std::vector<Formula>& lines, const std::vector<Formula>& premises) {
  Proof out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Formula& f = lines[i];
    bool done = false;
    for (std::size_t p = 0; p < premises.size() && !done; ++p)
      if (premises[p] == f) {
        out.push_back({f, Step::Rule::Premise, Schema::Weaken, p, 0});
        done = true;
      }
    if (!done)
      if (auto s = identify_axiom(f)) {
        out.push_back({f, Step::Rule::Axiom, *s, 0, 0});
        done = true;
      }
    for (std::size_t b = 0; b < i && !done; ++b) {
      if (!imp(lines[b]) || rhs(lines[b]) != f) continue;
      for (std::size_t a = 0; a < i && !done; ++a)
        if (lines[a] == lhs(lines[b])) {
          out.push_back({f, Step::Rule::ModusPonens, Schema::Weaken, a, b});
          done = true;
        }
    }
    if (!done && is(f, K::Forall) && !free_in_premises(f.var(), premises))
      for (std::size_t a = 0; a < i && !done; ++a)
        if (lines[a] == f.body()) {
          out.push_back({f, Step::Rule::Generalize, Schema::Weaken, a, 0});
          done = true;
        }
    if (!done) return std::nullopt;
  }
  return out;
}

}  // namespace tc::fol
