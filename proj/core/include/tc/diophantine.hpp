#pragma once

// Integer polynomials and the enumerator whose stabilization is the set of
// polynomials without integer roots.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tc/code.hpp"
#include "tc/natural.hpp"

namespace tc::dio {

using Integer = mpz_class;
/// Exponent vector, trailing zeros trimmed; {} is the constant monomial.
using Monomial = std::vector<std::uint32_t>;

class Pol {
 public:
  Pol() = default;
  /// Drops zero coefficients and trims exponent vectors.
  explicit Pol(const std::map<Monomial, Integer>& terms);

  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Number of variables the polynomial depends on (highest index + 1).
  std::size_t arity() const;
  Integer evaluate(const std::vector<Integer>& point) const;

  friend bool operator==(const Pol&, const Pol&) = default;
  friend bool operator<(const Pol& a, const Pol& b) { return a.terms_ < b.terms_; }

 private:
  std::map<Monomial, Integer> terms_;
};

class PolSyntaxError : public std::invalid_argument {
 public:
  PolSyntaxError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at offset " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// Variables are x, y, z, w for indices 0..3 and x<k> in general.
Pol parse_pol(const std::string& text);
std::string to_string(const Pol& p);

Natural pol_code(const Pol& p);
std::optional<Pol> decode_pol(const Natural& code);
bool is_pol_code(const Natural& code);

/// N: N -> Z^k. k = 1 is the zig-zag order; larger k unfolds Cantor pairs.
std::vector<Integer> integer_point(const Natural& n, std::size_t k);
/// E(n, p) = p(N(n)) on the polynomial's own arity.
Integer eval_E(const Natural& n, const Pol& p);

/// Z: N -> Pol, ordered by weight sum(|c| + sum (i+1) e_i) and then by code.
Pol pol_by_index(std::size_t m);
/// Inverse of pol_by_index.
std::size_t pol_index(const Pol& p);

/// d^n(p): + iff none of N(0), ..., N(n) is a root.
bool no_root_up_to(const Pol& p, const Natural& n);

struct Signed {
  Pol pol;
  bool plus;
  friend bool operator==(const Signed&, const Signed&) = default;
};

/// A(n) = A_{n+1}(n).
Signed enumerator_A(const Natural& n);
/// The list A_n of the recursion (length n(n+1)/2).
std::vector<Signed> stage_list(std::size_t n);

/// Machine code of A with outputs pair(pol code, sign).
MachineCode enumerator_code();
/// P = Dec_Pol(A).
MachineCode decider_code();

}  // namespace tc::dio
