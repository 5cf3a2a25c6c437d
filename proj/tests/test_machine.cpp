#include <map>
#include <set>

#include "doctest.h"
#include "support/generators.hpp"
#include "tc/code.hpp"
#include "tc/programs.hpp"
#include "tc/synthesis.hpp"
#include "tc/universal.hpp"

using namespace tc;

namespace {

// Reference interpreter, kept apart from the library's.
std::optional<std::pair<Natural, std::size_t>> reference_run(const Program& p, const Natural& x, std::size_t fuel) {
  std::map<std::uint32_t, Natural> r;
  r[0] = x;
  std::size_t pc = 0, steps = 0;
  const auto& code = p.instructions();
  while (steps < fuel) {
    ++steps;
    if (pc >= code.size()) return std::make_pair(r[0], steps);
    const Instruction& i = code[pc];
    switch (i.op) {
      case Op::Inc: r[i.reg] += 1; ++pc; break;
      case Op::DecJz:
        if (r[i.reg] == 0) pc = i.arg;
        else r[i.reg] -= 1, ++pc;
        break;
      case Op::Const: r[i.reg] = i.constant; ++pc; break;
      case Op::Copy: r[i.reg] = Natural(r[i.arg]); ++pc; break;
      case Op::Jmp: pc = i.arg; break;
      case Op::Halt: return std::make_pair(r[i.reg], steps);
    }
  }
  return std::nullopt;
}

Outcome universal_of(const Program& p, const Natural& x, unsigned long fuel) {
  return universal(encode_program(p), x, Natural(fuel));
}

}  // namespace

TEST_CASE("run: stock programs") {
  auto o = run(programs::identity(), 7, 100);
  REQUIRE(o.halted());
  CHECK(o.value == 7);
  CHECK_FALSE(run(programs::diverge(), 0, 10000).halted());
  o = run(programs::successor(), 41, 100);
  REQUIRE(o.halted());
  CHECK(o.value == 42);
}

TEST_CASE("run: out of fuel reports the budget as steps") {
  auto o = run(programs::diverge(), 3, 57);
  CHECK_FALSE(o.halted());
  CHECK(o.steps == 57);
}

TEST_CASE("run agrees with the reference interpreter on random programs") {
  testing::Gen g(11);
  for (int k = 0; k < 400; ++k) {
    Program p = g.program(3, g.range(1, 8));
    Natural x = g.natural(5);
    auto ref = reference_run(p, x, 300);
    auto o = run(p, x, 300);
    REQUIRE(o.halted() == ref.has_value());
    if (ref) {
      CHECK(o.value == ref->first);
      CHECK(o.steps == ref->second);
    }
  }
}

TEST_CASE("program text round-trips") {
  testing::Gen g(12);
  for (int k = 0; k < 200; ++k) {
    Program p = g.program(4, g.range(1, 10));
    CHECK(parse_program(print_program(p)) == p);
  }
  Program q = parse_program("loop: DECJZ r0 done\nJMP loop\ndone: HALT r0 # comment\n");
  CHECK(q.size() == 3);
  CHECK_THROWS_AS(parse_program("FROB r1"), ProgramError);
}

TEST_CASE("codes: decode inverts encode, and the image is decidable") {
  testing::Gen g(13);
  for (int k = 0; k < 200; ++k) {
    Program p = g.program(3, g.range(0, 8));
    MachineCode c = encode_program(p);
    CHECK(is_valid_code(c.value));
    auto body = decode(c);
    REQUIRE(std::holds_alternative<Program>(body));
    CHECK(std::get<Program>(body) == p);
  }
  CHECK_FALSE(is_valid_code(0));
  CHECK_THROWS_AS(decode({0}), InvalidCode);
  // Distinct programs, distinct codes.
  std::set<Natural> seen;
  std::set<std::string> texts;
  for (int k = 0; k < 500; ++k) {
    Program p = g.program(2, g.range(0, 5));
    if (texts.insert(print_program(p)).second) CHECK(seen.insert(encode_program(p).value).second);
  }
}

TEST_CASE("universal") {
  auto o = universal_of(programs::identity(), 5, 1000);
  REQUIRE(o.halted());
  CHECK(o.value == 5);
  o = universal_of(programs::successor(), 9, 1000);
  REQUIRE(o.halted());
  CHECK(o.value == 10);
  Fuel f(100);
  CHECK_THROWS_AS(evaluate({0}, 1, f), InvalidCode);
}

TEST_CASE("s-m-n: specialized runs agree with direct runs") {
  auto proj = encode_program(programs::project_second());
  auto r = smn(proj, 3);
  for (int b = 0; b <= 2; ++b) {
    auto o = universal(r, b, 1000);
    REQUIRE(o.halted());
    CHECK(o.value == b);
  }
  auto add = smn(encode_program(programs::addition()), 2);
  auto o = universal(add, 5, 10000);
  REQUIRE(o.halted());
  CHECK(o.value == 7);
  auto dead = smn(encode_program(programs::diverge()), 1);
  for (int b = 0; b < 3; ++b) CHECK_FALSE(universal(dead, b, 5000).halted());
}

TEST_CASE("s-m-n on random two-input programs") {
  testing::Gen g(14);
  for (int k = 0; k < 60; ++k) {
    Program p = g.program(3, g.range(2, 8));
    MachineCode code = encode_program(p);
    Natural a = g.natural(4), b = g.natural(4);
    auto direct = universal(code, pair(a, b), 2000);
    if (!direct.halted()) continue;
    auto spec = universal(smn(code, a), b, 100000);
    REQUIRE(spec.halted());
    CHECK(spec.value == direct.value);
  }
}

TEST_CASE("totalize") {
  auto outputs = [](const MachineCode& code, unsigned upto) {
    auto tot = totalize(code);
    std::set<Natural> out;
    for (unsigned n = 0; n <= upto; ++n) {
      auto o = universal(tot, n, 1000000);
      REQUIRE(o.halted());
      if (o.value != kSentinel) out.insert(o.value);
    }
    return out;
  };
  auto id = outputs(encode_program(programs::identity()), 200);
  for (int n = 1; n <= 5; ++n) CHECK(id.count(n));
  for (const auto& v : id) CHECK(v >= 1);  // identity's own outputs, none is the sentinel here
  CHECK(outputs(encode_program(programs::diverge()), 50).empty());
  CHECK(outputs(encode_program(programs::point(3, 9)), 200) == std::set<Natural>{9});
}
