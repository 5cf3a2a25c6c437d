#pragma once

// Sorts: descriptors of encoded sets, with a total image test. A sort is
// itself a natural so it can travel as a node argument:
//   atom a            -> 2a
//   compound(tag, x)  -> 2 pair(tag, x) + 1

#include <optional>

#include "tc/natural.hpp"

namespace tc::sorts {

enum class Atom : unsigned {
  Nat = 0,      // identity on N
  Sign = 1,     // e(-) = 0, e(+) = 1
  Formula = 2,  // formula codes of the first-order kernel
  Code = 3,     // machine codes
  Pol = 4,      // Diophantine polynomial codes
  F0 = 5,       // Delta_0 formulas in the single free variable m
};

enum class Tag : unsigned {
  Pairing = 0,     // shifted Cantor pairing of two sorts
  PrimeProduct = 1,  // 2^a 3^b
  Sum = 2,         // left x -> 2^(x+1), right x -> 3^(x+1)
  List = 3,        // [] -> 1, l -> prod p_i^(l_i + 1)
};

inline Natural atom(Atom a) { return Natural(2 * static_cast<unsigned long>(a)); }
inline Natural nat() { return atom(Atom::Nat); }
inline Natural sign() { return atom(Atom::Sign); }
inline Natural formula() { return atom(Atom::Formula); }
inline Natural code() { return atom(Atom::Code); }
inline Natural pol() { return atom(Atom::Pol); }
inline Natural f0() { return atom(Atom::F0); }

inline Natural compound(Tag t, const Natural& payload) {
  return 2 * tc::pair(Natural(static_cast<unsigned long>(t)), payload) + 1;
}
inline Natural pairing(const Natural& a, const Natural& b) { return compound(Tag::Pairing, tc::pair(a, b)); }
inline Natural prime_product(const Natural& a, const Natural& b) {
  return compound(Tag::PrimeProduct, tc::pair(a, b));
}
inline Natural sum(const Natural& a, const Natural& b) { return compound(Tag::Sum, tc::pair(a, b)); }
inline Natural list(const Natural& a) { return compound(Tag::List, a); }
/// B x {+-} at machine level.
inline Natural signed_of(const Natural& b) { return pairing(b, sign()); }

bool is_sort(const Natural& s);
/// Total image test of the sort's encoding.
bool contains(const Natural& sort, const Natural& x);

// Helpers shared with the typed encodings.

/// 2^a 3^b decomposition; nullopt if other prime factors or zero.
std::optional<std::pair<Natural, Natural>> split_prime_product(const Natural& n);
/// Exponent vector of a prime-power list code (exponents already shifted down).
std::optional<std::vector<Natural>> split_list(const Natural& n);
Natural join_list(const std::vector<Natural>& elements);

}  // namespace tc::sorts
