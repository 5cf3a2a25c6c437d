#include <set>

#include "doctest.h"
#include "support/generators.hpp"
#include "tc/diophantine.hpp"
#include "tc/sorts.hpp"
#include "tc/stability.hpp"

using namespace tc;
using namespace tc::dio;

namespace {

// Does any of N(0..n) zero the polynomial? Evaluated by direct substitution.
bool has_root_up_to(const Pol& p, unsigned long n) {
  for (unsigned long i = 0; i <= n; ++i) {
    auto pt = integer_point(i, std::max<std::size_t>(p.arity(), 1));
    Integer v = 0;
    for (const auto& [mono, c] : p.terms()) {
      Integer term = c;
      for (std::size_t k = 0; k < mono.size(); ++k)
        for (std::uint32_t e = 0; e < mono[k]; ++e) term *= pt[k];
      v += term;
    }
    if (v == 0) return true;
  }
  return false;
}

std::vector<bool> signs_of(const Pol& p, std::size_t ranks) {
  std::vector<bool> out;
  for (std::size_t n = 0; n < ranks; ++n) {
    auto a = enumerator_A(n);
    if (a.pol == p) out.push_back(a.plus);
  }
  return out;
}

}  // namespace

TEST_CASE("evaluation") {
  CHECK(parse_pol("x^2 + 1").evaluate({2}) == 5);
  CHECK(parse_pol("x - 3").evaluate({3}) == 0);
  CHECK(parse_pol("x*y - 6").evaluate({2, 3}) == 0);
  CHECK(parse_pol("2*x^2*y - 7").evaluate({1, 4}) == 1);
}

TEST_CASE("polynomial text and codes round-trip") {
  for (const char* text : {"x^2 + 1", "x - 3", "2*x - 7", "x*y - 6", "0", "-x^3*z + 4*w"}) {
    Pol p = parse_pol(text);
    CHECK(parse_pol(to_string(p)) == p);
    CHECK(decode_pol(pol_code(p)) == p);
    CHECK(is_pol_code(pol_code(p)));
  }
  CHECK_THROWS_AS(parse_pol("x^"), PolSyntaxError);
  for (std::size_t m = 0; m < 3000; ++m) CHECK(pol_index(pol_by_index(m)) == m);
}

TEST_CASE("integer points cover small boxes without repeats") {
  std::set<std::vector<Integer>> seen;
  for (unsigned long n = 0; n < 5000; ++n) CHECK(seen.insert(integer_point(n, 2)).second);
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) CHECK(seen.count({Integer(a), Integer(b)}));
  std::set<Integer> line;
  for (unsigned long n = 0; n <= 20; ++n) line.insert(integer_point(n, 1)[0]);
  CHECK(line.size() == 21);
  CHECK(*line.begin() == -10);
}

TEST_CASE("root search agrees with direct substitution") {
  testing::Gen g(41);
  for (int k = 0; k < 200; ++k) {
    Pol p = pol_by_index(g.below(2000));
    unsigned long n = g.below(60);
    CAPTURE(to_string(p));
    CHECK(no_root_up_to(p, n) == !has_root_up_to(p, n));
  }
}

TEST_CASE("stage lists extend one another") {
  for (std::size_t n = 1; n < 40; ++n) {
    auto a = stage_list(n), b = stage_list(n + 1);
    REQUIRE(a.size() == n * (n + 1) / 2);
    CHECK(std::equal(a.begin(), a.end(), b.begin()));
  }
  for (std::size_t n = 0; n < 300; ++n) CHECK(enumerator_A(n) == stage_list(n + 1)[n]);
}

TEST_CASE("signs of example polynomials") {
  auto square = signs_of(parse_pol("x^2 + 1"), 20000);
  REQUIRE_FALSE(square.empty());
  CHECK(std::all_of(square.begin(), square.end(), [](bool v) { return v; }));
  auto shifted = signs_of(parse_pol("x - 3"), 20000);
  REQUIRE(shifted.size() > 2);
  // every + is followed by a later -
  for (std::size_t i = 0; i + 1 < shifted.size(); ++i)
    if (shifted[i]) CHECK(std::find(shifted.begin() + i + 1, shifted.end(), false) != shifted.end());
  CHECK_FALSE(shifted.back());
}

TEST_CASE("the decider as a machine") {
  // The dovetail reaches index i only around rank cantor(i, steps), so the
  // machine-level check uses polynomials early in the order.
  Fuel fuel(Natural(1000000000));
  auto one = stability::decision_trace(pol_code(parse_pol("1")), enumerator_code(), sorts::pol(), 3000, fuel);
  auto v = stability::verdict_of(one);
  CHECK(v.kind == stability::Verdict::Kind::PlusStableSoFar);
  // x has the root N(0) = 0, so it never collects a +
  auto x = stability::decision_trace(pol_code(parse_pol("x")), enumerator_code(), sorts::pol(), 3000, fuel);
  CHECK(stability::verdict_of(x).kind == stability::Verdict::Kind::Unknown);
  // the machine's enumerator matches A
  for (unsigned long n = 0; n < 50; ++n) {
    Fuel f(Natural(100000000));
    Natural out = evaluate(enumerator_code(), n, f);
    auto a = enumerator_A(n);
    CHECK(out == pair(pol_code(a.pol), Natural(a.plus ? 1 : 0)));
  }
}
