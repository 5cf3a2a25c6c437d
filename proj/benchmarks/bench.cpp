#include <benchmark/benchmark.h>

#include "tc/fol/arith.hpp"
#include "tc/fol/encoding.hpp"
#include "tc/fol/proof.hpp"
#include "tc/fol/syntax.hpp"
#include "tc/goedel.hpp"
#include "tc/machine.hpp"
#include "tc/synthesis.hpp"

using namespace tc;

namespace {

// Multiplies r0 by 3 through repeated addition.
const Program kLoop = parse_program(
    "top: DECJZ r0 done\n"
    "INC r1\nINC r1\nINC r1\n"
    "JMP top\n"
    "done: HALT r1\n");

void interpreter(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run(kLoop, Natural(state.range(0)), Natural(100000000)));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 5);
}
BENCHMARK(interpreter)->Arg(1000)->Arg(100000);

void universal_machine(benchmark::State& state) {
  auto code = encode_program(kLoop);
  for (auto _ : state) benchmark::DoNotOptimize(universal(code, Natural(state.range(0)), Natural(100000000)));
}
BENCHMARK(universal_machine)->Arg(1000);

void formula_codes(benchmark::State& state) {
  auto f = fol::parse_formula("forall m. exists n < m. m + n = s(n) * m -> ~(n < s(s(0)))");
  for (auto _ : state) {
    auto c = fol::formula_code(f);
    benchmark::DoNotOptimize(fol::decode_formula(c));
  }
}
BENCHMARK(formula_codes);

void bounded_eval(benchmark::State& state) {
  auto f = fol::parse_formula("forall x < 60. exists y < 60. x + y = 59 & ~(y < x & x < y)");
  for (auto _ : state) benchmark::DoNotOptimize(fol::eval_sigma0(f));
}
BENCHMARK(bounded_eval);

void consequences(benchmark::State& state) {
  std::vector<fol::Sentence> prem{fol::parse_formula("p"), fol::parse_formula("p -> q"),
                                  fol::parse_formula("q -> r")};
  for (auto _ : state) {
    fol::DerivationEnumerator e(prem);
    benchmark::DoNotOptimize(e.at(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(consequences)->Arg(100)->Arg(1000);

void gamma_instance(benchmark::State& state) {
  auto s = goedel::sentence_s(encode_program(parse_program("CONST r1 1\nHALT r1\n")));
  auto inst = fol::substitute(fol::substitute(s.matrix, goedel::kOuterVar, fol::numeral(Natural(7))),
                              goedel::kInnerVar, fol::numeral(Natural(5)));
  for (auto _ : state) benchmark::DoNotOptimize(fol::eval_sigma0(inst));
}
BENCHMARK(gamma_instance);

}  // namespace

BENCHMARK_MAIN();
