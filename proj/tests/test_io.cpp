#include "doctest.h"
#include "tc/fol/encoding.hpp"
#include "tc/fol/syntax.hpp"
#include "tc/io.hpp"

using namespace tc;

TEST_CASE("stream files") {
  auto s = io::parse_stream("# comment\n3 +\n\nforall x. x = x -\nrepeat:\n5 +\n");
  REQUIRE(s.prefix.size() == 2);
  CHECK(s.prefix[0] == stability::Entry{3, true});
  CHECK(s.prefix[1] == stability::Entry{fol::formula_code(fol::parse_formula("forall x. x = x")), false});
  REQUIRE(s.tail.size() == 1);
  CHECK(s.tail[0] == stability::Entry{5, true});
  CHECK(io::parse_stream("").prefix.empty());
  CHECK_THROWS(io::parse_stream("3 *\n"));
  CHECK_THROWS(io::parse_stream("3\n"));
  CHECK_THROWS(io::parse_stream("repeat:\nrepeat:\n"));
}

TEST_CASE("theory files") {
  auto t = io::parse_theory("p\n# note\np -> q\n");
  REQUIRE(t.size() == 2);
  CHECK(t[1] == fol::parse_formula("p -> q"));
  CHECK_THROWS(io::parse_theory("x = 0\n"));
}
