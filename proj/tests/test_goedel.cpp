#include <set>

#include "doctest.h"
#include "support/generators.hpp"
#include "support/naive_eval.hpp"
#include "tc/fol/encoding.hpp"
#include "tc/fol/f0.hpp"
#include "tc/fol/syntax.hpp"
#include "tc/goedel.hpp"
#include "tc/programs.hpp"
#include "tc/sorts.hpp"
#include "tc/stability.hpp"
#include "tc/synthesis.hpp"

using namespace tc;
using namespace tc::goedel;
using fol::Formula;
using fol::Term;

namespace {

Formula P(const std::string& s) { return fol::parse_formula(s); }

std::pair<Natural, Natural> triangle_index(const Natural& n) {
  Natural k = 0;
  while ((k + 1) * (k + 2) / 2 <= n) ++k;
  return {k, n - k * (k + 1) / 2};
}

stability::Entry sentence_entry(const std::string& s, bool plus) { return {fol::formula_code(P(s)), plus}; }

const Program kTiny = parse_program("CONST r1 1\nHALT r1\n");

Program sign_program(const MachineCode& t) { return std::get<Program>(decode(restrict_to_sign(t))); }

Natural pack(const Natural& a, const Natural& b, const Natural& c, const Natural& d) {
  return pair(a, pair(b, pair(c, d)));
}

// M = pair(m, pair(steps, pair(c, d))) for the run of q on pair(b, m).
std::optional<Natural> real_witness(const Program& q, const Natural& b, const Natural& m) {
  auto seq = trace_sequence(q, pair(b, m), 100000);
  if (!seq) return std::nullopt;
  auto w = beta_witness(*seq);
  Natural steps = seq->size() / (q.register_count() + 1);
  return pack(m, steps, w.c, w.d);
}

Formula instance(const Formula& matrix, const Natural& M, const Natural& N) {
  return fol::substitute(fol::substitute(matrix, kOuterVar, fol::numeral(M)), kInnerVar, fol::numeral(N));
}

}  // namespace

TEST_CASE("beta coding") {
  testing::Gen g(61);
  for (int k = 0; k < 100; ++k) {
    std::vector<Natural> seq;
    for (std::size_t i = 0, n = g.range(1, 12); i < n; ++i) seq.push_back(g.natural(50));
    auto w = beta_witness(seq);
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(beta(w.c, w.d, i) == seq[i]);
  }
}

TEST_CASE("trace sequences follow the interpreter") {
  testing::Gen g(62);
  for (int k = 0; k < 200; ++k) {
    Program p = g.program(3, g.range(1, 6));
    Natural x = g.natural(4);
    auto o = run(p, x, 200);
    auto seq = trace_sequence(p, x, 200);
    REQUIRE(o.halted() == seq.has_value());
    if (!seq) continue;
    std::size_t w = p.register_count() + 1;
    REQUIRE(seq->size() % w == 0);
    CHECK(seq->size() / w == o.steps);
    auto c = beta_witness(*seq);
    Natural t = o.steps;
    CHECK(trace_holds(p, c.c, c.d, x, t, o.value));
    CHECK_FALSE(trace_holds(p, c.c, c.d, x, t, o.value + 1));
    CHECK_FALSE(trace_holds(p, c.c, c.d, x, t + 1, o.value));
  }
}

TEST_CASE("trace formula agrees with the simulation oracle on real witnesses") {
  testing::Gen g(63);
  int checked = 0;
  for (int k = 0; k < 60; ++k) {
    Program p = g.program(2, g.range(1, 5));
    Natural x = g.natural(3);
    auto seq = trace_sequence(p, x, 60);
    if (!seq) continue;
    auto w = beta_witness(*seq);
    Natural t = seq->size() / (p.register_count() + 1);
    auto tf = trace_formula(p, [&](const Term& y) { return Formula::eq(y, fol::numeral(x)); });
    for (const Natural& c : {w.c, Natural(w.c + 1)})
      for (unsigned long v = 0; v < 3; ++v) {
        std::map<std::string, Natural> env{{"c", c}, {"d", w.d}, {"t", t}, {"v", Natural(v)}};
        CHECK(fol::eval_delta0(tf, env) == trace_holds(p, c, w.d, x, t, v));
      }
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("pair equation") {
  for (unsigned long a = 0; a < 6; ++a)
    for (unsigned long b = 0; b < 6; ++b) {
      Formula f = pair_eq(fol::numeral(pair(a, b)), fol::numeral(Natural(a)), fol::numeral(Natural(b)));
      std::map<std::string, Natural> env;
      CHECK(testing::naive(f, env));
      Formula g = pair_eq(fol::numeral(pair(a, b) + 1), fol::numeral(Natural(a)), fol::numeral(Natural(b)));
      CHECK_FALSE(fol::eval_sigma0(g));
    }
  // the evaluator's unpairing shortcut against plain search
  for (unsigned long z = 0; z < 40; ++z) {
    Formula f = Formula::exists_lt(
        "x", fol::numeral(Natural(z + 1)),
        Formula::exists_lt("y", fol::numeral(Natural(z + 1)),
                           Formula::conj(pair_eq(fol::numeral(Natural(z)), Term::var("x"), Term::var("y")),
                                         Formula::less(Term::var("y"), Term::var("x")))));
    std::map<std::string, Natural> env;
    CHECK(fol::eval_sigma0(f) == testing::naive(f, env));
  }
}

TEST_CASE("s(T): shape of the sentence") {
  testing::Gen g(64);
  for (int k = 0; k < 10; ++k) {
    MachineCode t = encode_program(g.program(3, g.range(1, 6)));
    auto s = sentence_s(t);
    CHECK(fol::is_closed(s.sentence));
    CHECK(fol::is_closed(s.negation));
    CHECK(s.sentence_level == fol::Level{fol::Level::Kind::Pi, 2});
    CHECK(s.negation_level == fol::Level{fol::Level::Kind::Sigma, 2});
    CHECK(s.matrix_level == fol::Level{});
    CHECK(fol::free_vars(s.matrix) == std::set<std::string>{kOuterVar, kInnerVar});
    CHECK(fol::print(sentence_s(t).sentence) == fol::print(s.sentence));
  }
}

TEST_CASE("gamma agrees with the oracle on the [0,8]^2 grid") {
  MachineCode t = encode_program(kTiny);
  auto s = sentence_s(t);
  Program q = sign_program(t);
  int disagreements = 0;
  for (unsigned long M = 0; M <= 8; ++M)
    for (unsigned long N = 0; N <= 8; ++N)
      disagreements += fol::eval_sigma0(instance(s.matrix, M, N)) != matrix_oracle(q, t.value, M, N);
  CHECK(disagreements == 0);
}

TEST_CASE("gamma at real witnesses") {
  for (const char* text : {"CONST r1 1\nHALT r1\n", "CONST r1 0\nHALT r1\n"}) {
    Program p = parse_program(text);
    MachineCode t = encode_program(p);
    auto s = sentence_s(t);
    Program q = sign_program(t);
    const bool always_plus = std::string(text).find("CONST r1 1") != std::string::npos;
    for (unsigned long m = 0; m < 2; ++m) {
      auto M = real_witness(q, t.value, m);
      REQUIRE(M);
      auto N = real_witness(q, t.value, m + 1);
      REQUIRE(N);
      auto bad = pack(m, 1, 0, 0);
      for (const Natural& outer : {*M, bad})
        for (const Natural& inner : {Natural(0), Natural(7), *N}) {
          bool formula = fol::eval_sigma0(instance(s.matrix, outer, inner));
          CHECK(formula == matrix_oracle(q, t.value, outer, inner));
          if (outer == *M) CHECK(formula == always_plus);
        }
    }
  }
}

TEST_CASE("J: speculative signs") {
  auto plus_idx = fol::f0_index(P("m + 0 = m"));
  auto less_idx = fol::f0_index(P("m < 2"));
  REQUIRE(plus_idx);
  REQUIRE(less_idx);
  for (std::size_t k = *plus_idx; k < *plus_idx + 6; ++k) {
    auto e = enumerator_J(Natural(k * (k + 1) / 2 + *plus_idx));
    CHECK(e.formula == P("m + 0 = m"));
    CHECK(e.plus);
  }
  for (std::size_t k = *less_idx; k < *less_idx + 6; ++k) {
    auto e = enumerator_J(Natural(k * (k + 1) / 2 + *less_idx));
    CHECK(e.formula == P("m < 2"));
    CHECK_FALSE(e.plus);
  }
  // sign + iff phi holds at 0..k, checked by the naive evaluator
  for (unsigned long n = 0; n < 2000; n += 3) {
    auto [k, m] = triangle_index(n);
    auto e = enumerator_J(n);
    CHECK(e.formula == fol::f0_at(m.get_ui()));
    bool all = true;
    for (unsigned long i = 0; i <= k && all; ++i) all = testing::naive_at(e.formula, i);
    CHECK(e.plus == all);
  }
  for (unsigned long n = 0; n < 60; ++n) {
    Fuel f(Natural(100000000));
    auto e = enumerator_J(n);
    CHECK(evaluate(enumerator_j_code(), n, f) == pair(fol::formula_code(e.formula), Natural(e.plus ? 1 : 0)));
  }
}

TEST_CASE("Spec: parity layout") {
  stability::StreamSpec s{{sentence_entry("0 = 0", true)}, {sentence_entry("s(0) = 0", false), sentence_entry("p", true)}};
  auto spec = spec_i(stability::stream_code(s), fol::Translation::Identity);
  auto k_code = stability::coerce_K(stability::stream_code(s), sorts::formula());
  for (unsigned long n = 0; n < 40; ++n) {
    Fuel f(Natural(100000000));
    Natural got = evaluate(spec, n, f);
    if (n % 2 == 1) {
      Fuel g(Natural(100000000));
      CHECK(got == evaluate(k_code, n / 2, g));
    } else {
      auto e = enumerator_J(n / 2);
      CHECK(got == pair(fol::formula_code(alpha(e.formula)), Natural(e.plus ? 1 : 0)));
    }
  }
  auto empty = spec_i(stability::stream_code({}), fol::Translation::VonNeumann);
  for (unsigned long n = 0; n < 10; ++n) {
    Fuel f(Natural(100000000));
    auto v = evaluate_capped(empty, n, 100000, f);
    CHECK(v.has_value() == (n % 2 == 0));
    if (v) {
      auto e = enumerator_J(n / 2);
      CHECK(*v == pair(fol::formula_code(fol::translate(fol::Translation::VonNeumann, alpha(e.formula))),
                       Natural(e.plus ? 1 : 0)));
    }
  }
}

TEST_CASE("closure: provenance and proofs") {
  stability::StreamSpec s{{}, {sentence_entry("p", true), sentence_entry("p -> q", true)}};
  auto stream = stability::stream_code(s);
  bool found = false;
  for (unsigned long n = 0; n < 40; ++n) {
    Fuel f(Natural(1000000000));
    auto e = closure_entry(stream, 0, n, f);
    REQUIRE(e.indices.size() == e.premises.size());
    for (std::size_t i = 0; i < e.indices.size(); ++i) {
      CHECK(e.indices[i] <= e.stage);
      CHECK(e.premises[i] == P(e.indices[i] % 2 == 0 ? "p" : "p -> q"));
    }
    CHECK(fol::check_proof(e.proof, e.premises).ok);
    CHECK(e.proof.back().formula == e.sentence);
    CHECK(e.plus);
    found = found || e.sentence == P("q");
    Fuel g(Natural(1000000000));
    CHECK(evaluate(closure_C(stream), n, g) == pair(fol::formula_code(e.sentence), Natural(1)));
  }
  CHECK(found);
  // empty input: only theorems of pure logic, each with a checked proof
  auto none = stability::stream_code({{}, {}});
  for (unsigned long n = 0; n < 20; ++n) {
    Fuel f(Natural(1000000000));
    auto e = closure_entry(none, 5, n, f);
    CHECK(e.premises.empty());
    CHECK(fol::check_proof(e.proof, {}).ok);
  }
}

TEST_CASE("closure: a struck premise gives -") {
  stability::StreamSpec s{{}, {sentence_entry("p", true), sentence_entry("p", false)}};
  auto stream = stability::stream_code(s);
  bool saw_minus = false;
  for (unsigned long n = 0; n < 32; ++n) {
    Fuel f(Natural(1000000000));
    auto e = closure_entry(stream, 0, n, f);
    if (!e.premises.empty()) saw_minus = saw_minus || !e.plus;
  }
  CHECK(saw_minus);
}

TEST_CASE("Tur: construction is total and D^F runs") {
  testing::Gen g(65);
  std::vector<MachineCode> codes;
  for (int k = 0; k < 10; ++k) codes.push_back(encode_program(g.program(3, g.range(0, 6))));
  for (int k = 0; k < 5; ++k) codes.push_back(stability::stream_code(g.stream(4, 3, 3)));
  codes.push_back(encode_program(programs::diverge()));
  codes.push_back(totalize(encode_program(programs::diverge())));
  codes.push_back(enumerator_j_code());
  codes.push_back(closure_C(stability::stream_code({})));
  codes.push_back(stability::dec_B(stability::stream_code({}), sorts::formula()));
  REQUIRE(codes.size() == 20);
  for (const auto& f : codes) {
    auto tur = build_H_and_Tur(f, fol::Translation::Identity);
    CHECK(is_valid_code(tur.value));
    CHECK(build_H_and_Tur(f, fol::Translation::Identity) == tur);
  }
  auto tur = build_H_and_Tur(stability::stream_code({}), fol::Translation::Identity);
  Natural t = encode_program(kTiny).value;
  for (unsigned long n = 0; n <= 3; ++n) {
    Fuel f(Natural(100000000));
    Natural v = evaluate(tur, pair(t, n), f);
    CHECK((v == 0 || v == 1));
  }
}

TEST_CASE("G(F) needs an arithmetization of composite codes") {
  CHECK_THROWS_AS(goedel_G(stability::stream_code({}), fol::Translation::Identity), Unsupported);
  CHECK_THROWS_AS(sentence_s(totalize(encode_program(programs::identity()))), Unsupported);
}
