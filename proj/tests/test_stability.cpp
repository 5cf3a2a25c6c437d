#include <set>

#include "doctest.h"
#include "support/generators.hpp"
#include "tc/programs.hpp"
#include "tc/sorts.hpp"
#include "tc/stability.hpp"
#include "tc/synthesis.hpp"

using namespace tc;
using namespace tc::stability;

namespace {

Entry plus(unsigned long b) { return {Natural(b), true}; }
Entry minus(unsigned long b) { return {Natural(b), false}; }

// b is stable iff the periodic tail never strikes it and its last
// occurrence overall carries +.
std::set<Natural> stable_by_cases(const StreamSpec& s) {
  std::set<Natural> out, seen;
  for (const auto& e : s.prefix) seen.insert(e.element);
  for (const auto& e : s.tail) seen.insert(e.element);
  for (const auto& b : seen) {
    bool tail_minus = false, tail_plus = false;
    for (const auto& e : s.tail)
      if (e.element == b) (e.plus ? tail_plus : tail_minus) = true;
    if (tail_minus) continue;
    if (tail_plus) {
      out.insert(b);
      continue;
    }
    bool last = false;
    for (const auto& e : s.prefix)
      if (e.element == b) last = e.plus;
    if (last) out.insert(b);
  }
  return out;
}

MachineCode constant_code(const Natural& v) { return encode_program(programs::constant(v)); }

// D(pair(b, n)) = + for n < 5, - from 5 on.
MachineCode plus_then_minus() {
  Assembler a;
  auto yes = a.label();
  a.unpair(0, 1, 2);
  for (int i = 0; i < 5; ++i) a.decjz(2, yes);
  a.load(3, 0);
  a.halt(3);
  a.bind(yes);
  a.load(3, 1);
  a.halt(3);
  return encode_program(a.build());
}

}  // namespace

TEST_CASE("l-stability") {
  CHECK(is_l_stable({plus(4)}, 4));
  CHECK_FALSE(is_l_stable({plus(4), minus(4)}, 4));
  CHECK(is_l_stable({minus(4), plus(4)}, 4));
  CHECK_FALSE(is_l_stable({}, 4));
  CHECK_FALSE(is_l_stable({plus(3)}, 4));
}

TEST_CASE("stabilization oracle: worked cases") {
  CHECK(stabilization_oracle({{}, {plus(7)}}) == std::set<Natural>{7});
  CHECK(stabilization_oracle({{plus(7)}, {minus(7)}}).empty());
  CHECK(stabilization_oracle({{plus(7), minus(8)}, {plus(8)}}) == std::set<Natural>{7, 8});
}

TEST_CASE("stabilization oracle agrees with case analysis and with long prefixes") {
  testing::Gen g(31);
  for (int k = 0; k < 300; ++k) {
    auto s = g.stream(6, 6, 5);
    auto oracle = stabilization_oracle(s);
    CHECK(oracle == stable_by_cases(s));
    // A stable element is l-stable in any prefix that covers a full period.
    // (The converse fails: a period may end on + and still strike b.)
    std::vector<Entry> unrolled = s.prefix;
    for (int rep = 0; rep < 3; ++rep) unrolled.insert(unrolled.end(), s.tail.begin(), s.tail.end());
    for (const auto& b : oracle) CHECK(is_l_stable(unrolled, b));
  }
}

TEST_CASE("stream codes") {
  testing::Gen g(32);
  for (int k = 0; k < 40; ++k) {
    auto s = g.stream(6, 4, 3);
    CHECK(decode_stream_spec(stream_spec_code(s)).has_value());
    auto code = stream_code(s);
    for (unsigned long n = 0; n < 12; ++n) {
      auto o = universal(code, n, 10000);
      auto want = stream_at(s, n);
      REQUIRE(want);
      REQUIRE(o.halted());
      CHECK(o.value == entry_code(*want));
    }
  }
  // empty tail: undefined past the prefix
  StreamSpec finite{{plus(1)}, {}};
  CHECK_FALSE(stream_at(finite, 1));
  CHECK_FALSE(universal(stream_code(finite), 1, 10000).halted());
}

TEST_CASE("coerce_K") {
  auto s = stream_code({{plus(2), minus(3)}, {plus(1)}});
  auto k = coerce_K(s, sorts::nat());
  for (unsigned long n = 0; n <= 20; ++n) CHECK(universal(k, n, 100000).value == universal(s, n, 100000).value);
  // 6 = pair(2, 2): sign 2 is off the image
  CHECK_FALSE(universal(coerce_K(constant_code(6), sorts::nat()), 0, 100000).halted());
  CHECK_FALSE(universal(coerce_K(encode_program(programs::diverge()), sorts::nat()), 0, 100000).halted());
}

TEST_CASE("total graph f^T") {
  auto points = [](const StreamSpec& s, unsigned long ranks) {
    auto f = total_graph(stream_code(s), sorts::nat());
    std::vector<GraphPoint> out;
    for (unsigned long r = 0; r <= ranks; ++r) {
      Fuel fuel(1000000);
      if (auto p = total_graph_at(f, r, fuel)) out.push_back(*p);
    }
    return out;
  };
  auto constant = points({{}, {plus(5)}}, 50);
  CHECK_FALSE(constant.empty());
  for (const auto& p : constant) CHECK(p.entry == plus(5));
  CHECK(points({{}, {}}, 50).empty());
  // defined only at index 2
  auto only2 = points({{Entry{0, false}, Entry{0, false}, plus(9)}, {}}, 60);
  std::set<Natural> at;
  for (const auto& p : only2) at.insert(p.index);
  CHECK(at == std::set<Natural>{0, 1, 2});
}

TEST_CASE("decision map G") {
  auto trace = [](const StreamSpec& s, unsigned long b, unsigned long horizon) {
    Fuel fuel(100000000);
    return decision_trace(b, stream_code(s), sorts::nat(), horizon, fuel);
  };
  auto pos = trace({{}, {plus(4)}}, 4, 40);
  auto first = std::find(pos.begin(), pos.end(), true);
  REQUIRE(first != pos.end());
  CHECK(std::all_of(first, pos.end(), [](bool v) { return v; }));
  auto neg = trace({{}, {minus(4)}}, 4, 40);
  CHECK(std::none_of(neg.begin(), neg.end(), [](bool v) { return v; }));
  auto absent = trace({{}, {plus(3)}}, 4, 40);
  CHECK(std::none_of(absent.begin(), absent.end(), [](bool v) { return v; }));
}

TEST_CASE("Dec_B as a machine matches G") {
  testing::Gen g(33);
  for (int k = 0; k < 50; ++k) {
    auto s = g.stream(4, 3, 3);
    auto code = stream_code(s);
    Natural b = g.natural(3) + 1, n = g.natural(12);
    Fuel f1(100000000), f2(100000000);
    bool direct = decision_G(b, code, sorts::nat(), n, f1);
    Natural via = evaluate(dec_B(code, sorts::nat()), pair(b, n), f2);
    CHECK(via == (direct ? 1 : 0));
  }
}

TEST_CASE("decided set equals stable set on random streams") {
  testing::Gen g(34);
  for (int k = 0; k < 30; ++k) {
    auto s = g.stream(6, 5, 5);
    CHECK(decided_by_tail_analysis(s, Natural(1000000000)) == stabilization_oracle(s));
  }
  CHECK(decided_by_tail_analysis({{}, {}}, Natural(100000000)).empty());
  CHECK(decided_by_tail_analysis({{plus(2)}, {}}, Natural(100000000)) == std::set<Natural>{2});
}

TEST_CASE("Omega restricts to signs") {
  auto one = omega(constant_code(1));
  auto zero = omega(constant_code(0));
  CHECK(universal(one, 3, 1000).value == 1);
  CHECK(universal(zero, 3, 1000).value == 0);
  CHECK_FALSE(universal(omega(constant_code(2)), 3, 1000).halted());
  CHECK_FALSE(universal(omega(encode_program(programs::diverge())), 3, 1000).halted());
}

TEST_CASE("decided-prefix verdicts") {
  using K = Verdict::Kind;
  Fuel f(100000000);
  auto always = is_decided_prefix(constant_code(1), 0, 30, f);
  CHECK(always.kind == K::PlusStableSoFar);
  CHECK(is_decided_prefix(constant_code(0), 0, 30, f).kind == K::Unknown);
  for (unsigned long h : {5ul, 9ul, 20ul}) {
    auto v = is_decided_prefix(plus_then_minus(), 0, h, f);
    CHECK(v.kind == K::RefutedAt);
    CHECK(v.at == 5);
  }
  CHECK(is_decided_prefix(plus_then_minus(), 0, 4, f).kind == K::PlusStableSoFar);
  CHECK(verdict_of({false, true, false, true}) == Verdict{K::PlusStableSoFar, 3});
}
