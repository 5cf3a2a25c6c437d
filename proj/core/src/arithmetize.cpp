// Delta0 trace predicate for counter programs and the sentence s(T).

#include <array>

#include "tc/goedel.hpp"
#include "tc/synthesis.hpp"

namespace tc::goedel {

namespace {

using fol::Formula;
using fol::Term;

Term var(const std::string& n) { return Term::var(n); }
Term num(const Natural& n) { return fol::numeral(n); }
Term num(unsigned long n) { return fol::numeral(Natural(n)); }
Term plus(Term a, Term b) { return Term::add(std::move(a), std::move(b)); }
Term times(Term a, Term b) { return Term::mul(std::move(a), std::move(b)); }

Formula exists_upto(const std::string& x, const Term& bound, Formula body) {
  return Formula::exists_lt(x, Term::succ(bound), std::move(body));
}
Formula forall_upto(const std::string& x, const Term& bound, Formula body) {
  return Formula::forall_lt(x, Term::succ(bound), std::move(body));
}

struct Coding {
  Term c, d;
  std::uint32_t width;  // slots per configuration
};

// Variable names stay one letter where possible: a formula code spends
// roughly (name number) * log(prime) bits on every variable occurrence.
const std::string kFixedNames = "MNmnwuaecdfghkjtvpPoO";

std::string pooled_name(std::size_t i) {
  static const std::vector<std::string> pool = [] {
    std::vector<std::string> out;
    for (char c : std::string("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"))
      if (c != 's' && kFixedNames.find(c) == std::string::npos) out.emplace_back(1, c);
    return out;
  }();
  if (i < pool.size()) return pool[i];
  return "x" + std::to_string(i - pool.size());
}

std::string pc_name(bool next) { return next ? "P" : "p"; }
std::string pc_quotient(bool next) { return next ? "O" : "o"; }
std::string reg_name(std::uint32_t r, bool next) { return pooled_name(4 * std::size_t(r) + (next ? 1 : 0)); }
std::string reg_quotient(std::uint32_t r, bool next) { return pooled_name(4 * std::size_t(r) + (next ? 3 : 2)); }

// exists y < K. exists q < c + 1. (c = q * K + y & body), K = 1 + (i + 1) d:
// binds y to beta(c, d, i).
Formula with_beta(const Coding& k, const Term& index, const std::string& y, const std::string& q, Formula body) {
  Term K = plus(num(1), times(Term::succ(index), k.d));
  Formula eq = Formula::eq(k.c, plus(times(var(q), K), var(y)));
  return Formula::exists_lt(y, K, Formula::exists_lt(q, Term::succ(k.c), Formula::conj(eq, std::move(body))));
}

Term slot(const Coding& k, const Term& config, std::uint32_t i) {
  return plus(times(config, num(k.width)), num(i));
}

// Binds pc and every register of `config` around body.
Formula with_config(const Coding& k, const Program& q, const Term& config, bool next, Formula body) {
  for (std::uint32_t r = q.register_count(); r-- > 0;)
    body = with_beta(k, slot(k, config, r + 1), reg_name(r, next), reg_quotient(r, next), std::move(body));
  return with_beta(k, slot(k, config, 0), pc_name(next), pc_quotient(next), std::move(body));
}

Formula same_except(const Program& q, std::optional<std::uint32_t> changed) {
  std::vector<Formula> eqs;
  for (std::uint32_t r = 0; r < q.register_count(); ++r)
    if (!changed || r != *changed) eqs.push_back(Formula::eq(var(reg_name(r, true)), var(reg_name(r, false))));
  return Formula::all_of(eqs);
}

Formula transition(const Program& q) {
  std::vector<Formula> cases;
  auto pc_is = [](bool next, unsigned long v) { return Formula::eq(var(pc_name(next)), num(v)); };
  for (std::size_t l = 0; l < q.size(); ++l) {
    const Instruction& ins = q.instructions()[l];
    Term cur = var(reg_name(ins.reg, false)), nxt = var(reg_name(ins.reg, true));
    Formula effect = Formula::eq(num(0), num(0));
    switch (ins.op) {
      case Op::Inc:
        effect = Formula::all_of({pc_is(true, l + 1), Formula::eq(nxt, Term::succ(cur)), same_except(q, ins.reg)});
        break;
      case Op::DecJz:
        effect = Formula::disj(
            Formula::all_of({Formula::eq(cur, num(0)), pc_is(true, ins.arg), same_except(q, std::nullopt)}),
            Formula::all_of({Formula::eq(cur, Term::succ(nxt)), pc_is(true, l + 1), same_except(q, ins.reg)}));
        break;
      case Op::Const:
        effect = Formula::all_of({pc_is(true, l + 1), Formula::eq(nxt, num(ins.constant)), same_except(q, ins.reg)});
        break;
      case Op::Copy:
        effect = Formula::all_of(
            {pc_is(true, l + 1), Formula::eq(nxt, var(reg_name(ins.arg, false))), same_except(q, ins.reg)});
        break;
      case Op::Jmp: effect = Formula::conj(pc_is(true, ins.arg), same_except(q, std::nullopt)); break;
      case Op::Halt: continue;
    }
    cases.push_back(Formula::conj(pc_is(false, l), effect));
  }
  return Formula::any_of(cases);
}

Formula halts_with(const Program& q, const Term& v) {
  std::vector<Formula> cases;
  for (std::size_t l = 0; l < q.size(); ++l) {
    const Instruction& ins = q.instructions()[l];
    if (ins.op == Op::Halt)
      cases.push_back(Formula::conj(Formula::eq(var(pc_name(false)), num(l)),
                                    Formula::eq(var(reg_name(ins.reg, false)), v)));
  }
  cases.push_back(Formula::conj(Formula::eq(var(pc_name(false)), num(q.size())),
                                Formula::eq(var(reg_name(0, false)), v)));
  return Formula::any_of(cases);
}

Formula trace_with(const Program& q, const Term& c, const Term& d, const Term& t, const Term& v,
                   const std::function<Formula(const Term&)>& input) {
  Coding k{c, d, q.register_count() + 1};
  Term zero = Term::zero();
  std::vector<Formula> parts;
  parts.push_back(Formula::less(zero, t));
  parts.push_back(
      with_beta(k, slot(k, zero, 0), pc_name(false), pc_quotient(false), Formula::eq(var(pc_name(false)), zero)));
  parts.push_back(
      with_beta(k, slot(k, zero, 1), reg_name(0, false), reg_quotient(0, false), input(var(reg_name(0, false)))));
  for (std::uint32_t r = 1; r < q.register_count(); ++r)
    parts.push_back(with_beta(k, slot(k, zero, r + 1), reg_name(r, false), reg_quotient(r, false),
                              Formula::eq(var(reg_name(r, false)), zero)));
  Term j = var("j");
  Formula step = with_config(k, q, j, false, with_config(k, q, Term::succ(j), true, transition(q)));
  parts.push_back(Formula::forall_lt("j", t, Formula::imp(Formula::less(Term::succ(j), t), step)));
  Formula last = with_config(k, q, j, false, halts_with(q, v));
  parts.push_back(Formula::exists_lt("j", t, Formula::conj(Formula::eq(Term::succ(j), t), last)));
  return Formula::all_of(parts);
}

Program arithmetizable(const MachineCode& code) {
  CodeBody body = decode(code);
  if (!std::holds_alternative<Program>(body))
    throw Unsupported("only counter programs can be arithmetized; this code is a composite node");
  CodeBody omega = decode(restrict_to_sign(code));
  return std::get<Program>(omega);
}

}  // namespace

Natural beta(const Natural& c, const Natural& d, const Natural& i) {
  Natural k = 1 + (i + 1) * d;
  Natural r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  return r;
}

BetaCode beta_witness(const std::vector<Natural>& seq) {
  Natural top = seq.size();
  for (const auto& s : seq)
    if (s > top) top = s;
  Natural l = 1;
  for (unsigned long i = 2; i <= seq.size(); ++i) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), i);
  Natural d = l * ((top + l) / l);  // a multiple of l above every entry
  Natural c = 0, modulus = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Natural mi = 1 + Natural(i + 1) * d;
    // c + modulus * u == seq[i] (mod mi)
    Natural inv, diff = seq[i] - c, u;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), mi.get_mpz_t());
    u = diff * inv;
    mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), mi.get_mpz_t());
    c += modulus * u;
    modulus *= mi;
  }
  return {c, d};
}

std::optional<std::vector<Natural>> trace_sequence(const Program& q, const Natural& x, const Natural& fuel) {
  std::vector<Natural> out;
  StepState s = initial_state(q, x);
  for (Natural used = 0;; ++used) {
    out.push_back(s.pc);
    out.insert(out.end(), s.registers.begin(), s.registers.end());
    if (is_halting(q, s)) return out;
    if (used + 1 >= fuel) return std::nullopt;
    s = step(q, s);
  }
}

Formula trace_formula(const Program& q, const std::function<Formula(const Term&)>& input) {
  return trace_with(q, var("c"), var("d"), var("t"), var("v"), input);
}

bool trace_holds(const Program& q, const Natural& c, const Natural& d, const Natural& x, const Natural& t,
                 const Natural& v) {
  if (t == 0 || !t.fits_ulong_p()) return false;
  const unsigned long steps = t.get_ui();
  const std::uint32_t width = q.register_count() + 1;
  StepState s = initial_state(q, x);
  for (unsigned long j = 0; j < steps; ++j) {
    if (beta(c, d, Natural(j * width)) != s.pc) return false;
    for (std::uint32_t r = 0; r < q.register_count(); ++r)
      if (beta(c, d, Natural(j * width + r + 1)) != s.registers[r]) return false;
    bool halting = is_halting(q, s);
    if (j + 1 == steps) return halting && output_of(q, s) == v;
    if (halting) return false;
    s = step(q, s);
  }
  return false;
}

Formula pair_eq(const Term& z, const Term& a, const Term& b) {
  Term sum = plus(a, b);
  return Formula::eq(plus(z, z), plus(plus(times(sum, Term::succ(sum)), plus(b, b)), num(2)));
}

bool matrix_oracle(const Program& q, const Natural& b, const Natural& M, const Natural& N) {
  auto split3 = [](const Natural& z) -> std::optional<std::array<Natural, 4>> {
    auto a = unpair(z);
    if (!a) return std::nullopt;
    auto b2 = unpair(a->second);
    if (!b2) return std::nullopt;
    auto c = unpair(b2->second);
    if (!c) return std::nullopt;
    return std::array<Natural, 4>{a->first, b2->first, c->first, c->second};
  };
  auto outer = split3(M);
  if (!outer) return false;
  auto [m, t1, c1, d1] = *outer;
  if (!trace_holds(q, c1, d1, pair(b, m), t1, 1)) return false;
  auto inner = split3(N);
  if (!inner) return true;
  auto [n, t2, c2, d2] = *inner;
  if (!(m <= n)) return true;
  return !trace_holds(q, c2, d2, pair(b, n), t2, 0);
}

GoedelSentence sentence_s(const MachineCode& code) {
  const Program q = arithmetizable(code);
  const Term b = num(code.value);
  const Term M = var(kOuterVar), N = var(kInnerVar);
  auto input_for = [&](const std::string& index) {
    return [&b, index](const Term& y) { return pair_eq(y, b, var(index)); };
  };
  // Outer witnesses: M = pair(m, pair(a, pair(c, d))), a trace of a steps to output 1 (+).
  // Inner: N = pair(n, pair(f, pair(h, k))), no trace of f steps to output 0 (-) at n >= m.
  Formula plus_trace = trace_with(q, var("c"), var("d"), var("a"), num(1), input_for("m"));
  Formula minus_trace = trace_with(q, var("h"), var("k"), var("f"), num(0), input_for("n"));
  Formula no_minus_after =
      forall_upto("n", N, forall_upto("u", N, Formula::imp(pair_eq(N, var("n"), var("u")),
      forall_upto("f", var("u"), forall_upto("g", var("u"), Formula::imp(pair_eq(var("u"), var("f"), var("g")),
      forall_upto("h", var("g"), forall_upto("k", var("g"), Formula::imp(pair_eq(var("g"), var("h"), var("k")),
      Formula::imp(Formula::less(var("m"), Term::succ(var("n"))), Formula::neg(minus_trace)))))))))));
  Formula gamma =
      exists_upto("m", M, exists_upto("w", M, Formula::conj(pair_eq(M, var("m"), var("w")),
      exists_upto("a", var("w"), exists_upto("e", var("w"), Formula::conj(pair_eq(var("w"), var("a"), var("e")),
      exists_upto("c", var("e"), exists_upto("d", var("e"), Formula::conj(pair_eq(var("e"), var("c"), var("d")),
      Formula::conj(plus_trace, no_minus_after))))))))));

  Formula negation = Formula::exists(kOuterVar, Formula::forall(kInnerVar, gamma));
  Formula sentence = Formula::forall(kOuterVar, Formula::exists(kInnerVar, Formula::neg(gamma)));
  return {sentence,
          negation,
          gamma,
          fol::classify_prenex(sentence),
          fol::classify_prenex(negation),
          fol::classify_prenex(gamma),
          std::nullopt};
}

}  // namespace tc::goedel
