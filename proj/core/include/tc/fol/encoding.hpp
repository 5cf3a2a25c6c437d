#pragma once

// Goedel numbering of formulas: a prefix token stream stored as a
// prime-power list code (token t at position i contributes p_i^(t+1)).
//
// Tokens: 0 zero, 1 s, 2 +, 3 *, 4 =, 5 <, 6 in, 7 ~, 8 &, 9 |, 10 ->,
// 11 forall, 12 exists, 13 forall<, 14 exists<, 15 relation, 16 function,
// 18+k variable with name number k. A quantifier is followed by the raw
// name number of its variable; relation and function symbols by their name
// number and arity. Token 17 is unused.

#include <optional>
#include <string>
#include <vector>

#include "tc/fol/formula.hpp"
#include "tc/natural.hpp"

namespace tc::fol {

/// Bijective base-64 numbering of identifiers over [a-zA-Z0-9_'];
/// valid names start with a letter.
Natural name_number(const std::string& name);
std::optional<std::string> name_of(const Natural& k);

std::vector<Natural> tokenize(const Formula& f);
std::optional<Formula> parse_tokens(const std::vector<Natural>& tokens);

/// Code of any formula (open or closed).
Natural formula_code(const Formula& f);
std::optional<Formula> decode_formula(const Natural& code);

/// Image test of the sentence encoding: a code of a closed formula.
bool is_formula_code(const Natural& code);

/// Formulas of arithmetic with at most the free variable m, all quantifiers
/// bounded, and bound variables named k0, k1, ... by nesting depth.
inline const std::string kF0Var = "m";
bool is_f0(const Formula& f);
bool is_f0_code(const Natural& code);

/// Bound variable name used at nesting depth d inside F0 formulas.
std::string f0_bound_name(std::size_t depth);

}  // namespace tc::fol
