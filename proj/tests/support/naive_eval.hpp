#pragma once

// Plain recursive evaluator for bounded arithmetic, without the library's
// shortcuts. Oracle for eval_sigma0 and the F0 truth values.

#include <map>
#include <stdexcept>
#include <string>

#include "tc/fol/encoding.hpp"
#include "tc/fol/formula.hpp"

namespace tc::testing {

using fol::Formula;
using fol::Term;

inline Natural naive_term(const Term& t, std::map<std::string, Natural>& env) {
  switch (t.kind()) {
    case Term::Kind::Var: return env.at(t.name());
    case Term::Kind::Zero: return 0;
    case Term::Kind::Succ: return naive_term(t.arg(0), env) + 1;
    case Term::Kind::Add: return naive_term(t.arg(0), env) + naive_term(t.arg(1), env);
    case Term::Kind::Mul: return naive_term(t.arg(0), env) * naive_term(t.arg(1), env);
    default: throw std::logic_error("not arithmetic");
  }
}

inline bool naive(const Formula& f, std::map<std::string, Natural>& env) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq: return naive_term(f.terms()[0], env) == naive_term(f.terms()[1], env);
    case K::Less: return naive_term(f.terms()[0], env) < naive_term(f.terms()[1], env);
    case K::Not: return !naive(f.sub(0), env);
    case K::And: return naive(f.sub(0), env) && naive(f.sub(1), env);
    case K::Or: return naive(f.sub(0), env) || naive(f.sub(1), env);
    case K::Imp: return !naive(f.sub(0), env) || naive(f.sub(1), env);
    case K::ForallLt:
    case K::ExistsLt: {
      bool all = f.kind() == K::ForallLt;
      Natural bound = naive_term(f.bound(), env);
      auto saved = env;
      bool result = all;
      for (Natural v = 0; v < bound; ++v) {
        env[f.var()] = v;
        if (naive(f.body(), env) != all) {
          result = !all;
          break;
        }
      }
      env = saved;
      return result;
    }
    default: throw std::logic_error("unbounded");
  }
}

inline bool naive_at(const Formula& phi, unsigned long m) {
  std::map<std::string, Natural> env{{fol::kF0Var, Natural(m)}};
  return naive(phi, env);
}

}  // namespace tc::testing
