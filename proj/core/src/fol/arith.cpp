#include "tc/fol/arith.hpp"

#include "tc/fol/syntax.hpp"

namespace tc::fol {

std::string to_string(const Level& l) {
  switch (l.kind) {
    case Level::Kind::Delta0: return "Delta0";
    case Level::Kind::Sigma: return "Sigma" + std::to_string(l.n);
    case Level::Kind::Pi: return "Pi" + std::to_string(l.n);
  }
  return "?";
}

namespace {

bool arithmetic_term(const Term& t) {
  if (t.kind() == Term::Kind::Apply) return false;
  for (const auto& a : t.args())
    if (!arithmetic_term(a)) return false;
  return true;
}

Level flip(Level l) {
  if (l.kind == Level::Kind::Sigma) l.kind = Level::Kind::Pi;
  else if (l.kind == Level::Kind::Pi) l.kind = Level::Kind::Sigma;
  return l;
}

}  // namespace

bool is_arithmetic(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Less:
      return arithmetic_term(f.terms()[0]) && arithmetic_term(f.terms()[1]);
    case K::In:
    case K::Rel: return false;
    case K::Not: return is_arithmetic(f.sub(0));
    case K::And:
    case K::Or:
    case K::Imp: return is_arithmetic(f.sub(0)) && is_arithmetic(f.sub(1));
    case K::Forall:
    case K::Exists: return is_arithmetic(f.body());
    case K::ForallLt:
    case K::ExistsLt: return arithmetic_term(f.bound()) && is_arithmetic(f.body());
  }
  return false;
}

bool is_delta0(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Forall:
    case K::Exists: return false;
    case K::Not: return is_delta0(f.sub(0));
    case K::And:
    case K::Or:
    case K::Imp: return is_delta0(f.sub(0)) && is_delta0(f.sub(1));
    case K::ForallLt:
    case K::ExistsLt: return is_delta0(f.body());
    default: return true;
  }
}

Level classify_prenex(const Formula& f) {
  if (!is_arithmetic(f)) throw NotArithmetic("formula is not in the language of arithmetic");
  if (is_delta0(f)) return {};
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Not: return flip(classify_prenex(f.sub(0)));
    case K::Forall:
    case K::Exists: {
      bool ex = f.kind() == K::Exists;
      Level inner = classify_prenex(f.body());
      Level::Kind mine = ex ? Level::Kind::Sigma : Level::Kind::Pi;
      if (inner.kind == Level::Kind::Delta0) return {mine, 1};
      if (inner.kind == mine) return inner;
      return {mine, inner.n + 1};
    }
    default: throw std::invalid_argument("formula is not in prenex form");
  }
}

Natural eval_term(const Term& t, const std::map<std::string, Natural>& env) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) throw std::invalid_argument("unbound variable " + t.name());
      return it->second;
    }
    case Term::Kind::Zero: return 0;
    case Term::Kind::Succ: return eval_term(t.arg(0), env) + 1;
    case Term::Kind::Add: return eval_term(t.arg(0), env) + eval_term(t.arg(1), env);
    case Term::Kind::Mul: return eval_term(t.arg(0), env) * eval_term(t.arg(1), env);
    case Term::Kind::Apply: throw NotArithmetic("function symbol " + t.name());
  }
  return 0;
}

namespace {

// x = t (either side) with x not occurring in t: the only candidate witness.
std::optional<Term> pinned_value(const Formula& f, const std::string& x) {
  if (f.kind() != Formula::Kind::Eq) return std::nullopt;
  const Term& l = f.terms()[0];
  const Term& r = f.terms()[1];
  if (l.kind() == Term::Kind::Var && l.name() == x && !free_vars(r).count(x)) return r;
  if (r.kind() == Term::Kind::Var && r.name() == x && !free_vars(l).count(x)) return l;
  return std::nullopt;
}

struct Division {
  Term dividend, divisor;
  Formula rest;
};

// f = exists y < k. exists q < B. (u = q * k + y & rest), y and q not in u, k, B.
std::optional<Division> division_pattern(const Formula& f) {
  using K = Formula::Kind;
  if (f.kind() != K::ExistsLt) return std::nullopt;
  const Formula& inner = f.body();
  if (inner.kind() != K::ExistsLt || inner.body().kind() != K::And) return std::nullopt;
  const std::string& y = f.var();
  const std::string& q = inner.var();
  if (y == q) return std::nullopt;
  const Formula& eq = inner.body().sub(0);
  if (eq.kind() != K::Eq) return std::nullopt;
  const Term& u = eq.terms()[0];
  const Term& rhs = eq.terms()[1];
  if (rhs.kind() != Term::Kind::Add || rhs.arg(0).kind() != Term::Kind::Mul) return std::nullopt;
  const Term& qv = rhs.arg(0).arg(0);
  const Term& k = rhs.arg(0).arg(1);
  const Term& yv = rhs.arg(1);
  if (qv.kind() != Term::Kind::Var || qv.name() != q || yv.kind() != Term::Kind::Var || yv.name() != y)
    return std::nullopt;
  if (!(k == f.bound())) return std::nullopt;
  for (const Term* t : {&u, &k, &inner.bound()}) {
    auto fv = free_vars(*t);
    if (fv.count(y) || fv.count(q)) return std::nullopt;
  }
  return Division{u, k, inner.body().sub(1)};
}

// z + z = (x + y) * s(x + y) + (y + y) + 2, i.e. z = pair(x, y); z free of x, y.
bool is_pairing_equation(const Formula& f, const std::string& x, const std::string& y, Term& z) {
  if (f.kind() != Formula::Kind::Eq) return false;
  const Term& l = f.terms()[0];
  if (l.kind() != Term::Kind::Add || !(l.arg(0) == l.arg(1))) return false;
  z = l.arg(0);
  auto fv = free_vars(z);
  if (fv.count(x) || fv.count(y)) return false;
  Term X = Term::var(x), Y = Term::var(y), S = Term::add(X, Y);
  Term want = Term::add(Term::add(Term::mul(S, Term::succ(S)), Term::add(Y, Y)), numeral(2));
  return f.terms()[1] == want;
}

struct PairSplit {
  Term packed;
  Formula rest;
};

// exists x < B. exists y < C. (z = pair(x, y) & R), or the forall/-> dual.
std::optional<PairSplit> pairing_pattern(const Formula& f) {
  using K = Formula::Kind;
  const bool all = f.kind() == K::ForallLt;
  if (!all && f.kind() != K::ExistsLt) return std::nullopt;
  const Formula& inner = f.body();
  if (inner.kind() != f.kind() || inner.var() == f.var()) return std::nullopt;
  if (free_vars(inner.bound()).count(f.var())) return std::nullopt;
  const Formula& body = inner.body();
  if (body.kind() != (all ? K::Imp : K::And)) return std::nullopt;
  Term z = Term::zero();
  if (!is_pairing_equation(body.sub(0), f.var(), inner.var(), z)) return std::nullopt;
  return PairSplit{z, body.sub(1)};
}

bool eval(const Formula& f, std::map<std::string, Natural>& env);

// Scoped binding of a variable, restoring the previous value.
class Bind {
 public:
  Bind(std::map<std::string, Natural>& env, const std::string& x, const Natural& v) : env_(env), x_(x) {
    if (auto it = env.find(x); it != env.end()) saved_ = it->second;
    env[x] = v;
  }
  ~Bind() {
    if (saved_) env_[x_] = *saved_;
    else env_.erase(x_);
  }

 private:
  std::map<std::string, Natural>& env_;
  std::string x_;
  std::optional<Natural> saved_;
};

bool eval_pairing(const Formula& f, const PairSplit& split, std::map<std::string, Natural>& env) {
  const bool all = f.kind() == Formula::Kind::ForallLt;
  auto xy = unpair(eval_term(split.packed, env));
  if (!xy || xy->first >= eval_term(f.bound(), env)) return all;
  Bind bx(env, f.var(), xy->first);
  if (xy->second >= eval_term(f.body().bound(), env)) return all;
  Bind by(env, f.body().var(), xy->second);
  return eval(split.rest, env);
}

bool eval(const Formula& f, std::map<std::string, Natural>& env) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq: return eval_term(f.terms()[0], env) == eval_term(f.terms()[1], env);
    case K::Less: return eval_term(f.terms()[0], env) < eval_term(f.terms()[1], env);
    case K::In:
    case K::Rel: throw NotArithmetic("non-arithmetic atom");
    case K::Not: return !eval(f.sub(0), env);
    case K::And: return eval(f.sub(0), env) && eval(f.sub(1), env);
    case K::Or: return eval(f.sub(0), env) || eval(f.sub(1), env);
    case K::Imp: return !eval(f.sub(0), env) || eval(f.sub(1), env);
    case K::Forall:
    case K::Exists: throw std::invalid_argument("unbounded quantifier in a bounded sentence");
    case K::ForallLt:
    case K::ExistsLt: {
      const bool all = f.kind() == K::ForallLt;
      const Natural bound = eval_term(f.bound(), env);
      const std::string& x = f.var();
      std::optional<Natural> saved;
      if (auto it = env.find(x); it != env.end()) saved = it->second;
      auto restore = [&] {
        if (saved) env[x] = *saved;
        else env.erase(x);
      };
      const Formula& body = f.body();
      if (auto split = pairing_pattern(f)) {
        restore();
        return eval_pairing(f, *split, env);
      }
      // exists y < k. exists q < B. (u = q * k + y & R): division fixes q and y.
      if (!all) {
        if (auto split = division_pattern(f)) {
          Natural k = eval_term(split->divisor, env);
          bool result = false;
          if (k > 0) {
            Natural u = eval_term(split->dividend, env), quot, rem;
            mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), u.get_mpz_t(), k.get_mpz_t());
            if (quot < eval_term(body.bound(), env)) {
              std::optional<Natural> saved_q;
              const std::string& q = body.var();
              if (auto it = env.find(q); it != env.end()) saved_q = it->second;
              env[x] = rem;
              env[q] = quot;
              result = eval(split->rest, env);
              if (saved_q) env[q] = *saved_q;
              else env.erase(q);
            }
          }
          restore();
          return result;
        }
      }
      // exists x < b. (x = t & R) and forall x < b. (x = t -> R) have one relevant x.
      if ((all ? body.kind() == K::Imp : body.kind() == K::And)) {
        if (auto pinned = pinned_value(body.sub(0), x)) {
          Natural v = eval_term(*pinned, env);
          bool result = all;
          if (v < bound) {
            env[x] = v;
            result = eval(body.sub(1), env);
          }
          restore();
          return result;
        }
      }
      bool result = all;
      for (Natural v = 0; v < bound; ++v) {
        env[x] = v;
        if (eval(body, env) != all) {
          result = !all;
          break;
        }
      }
      restore();
      return result;
    }
  }
  return false;
}

}  // namespace

bool eval_delta0(const Formula& f, const std::map<std::string, Natural>& env) {
  if (!is_delta0(f)) throw std::invalid_argument("formula has unbounded quantifiers");
  auto copy = env;
  return eval(f, copy);
}

bool eval_sigma0(const Formula& sentence) {
  if (!is_closed(sentence)) throw std::invalid_argument("not a sentence");
  return eval_delta0(sentence, {});
}

std::vector<Formula> q_axioms() {
  static const char* text[] = {
      "forall x. ~s(x) = 0",
      "forall x. forall y. s(x) = s(y) -> x = y",
      "forall x. x = 0 | (exists y. x = s(y))",
      "forall x. x + 0 = x",
      "forall x. forall y. x + s(y) = s(x + y)",
      "forall x. x * 0 = 0",
      "forall x. forall y. x * s(y) = x * y + x",
      "forall x. forall y. x < y -> (exists z. s(z) + x = y)",
      "forall x. forall y. (exists z. s(z) + x = y) -> x < y",
  };
  std::vector<Formula> out;
  for (const char* t : text) out.push_back(parse_formula(t));
  return out;
}

}  // namespace tc::fol
