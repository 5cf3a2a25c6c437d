#pragma once

// Arithmetic hierarchy classification, bounded-sentence truth, and Q.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tc/fol/formula.hpp"

namespace tc::fol {

struct Level {
  enum class Kind { Delta0, Sigma, Pi };
  Kind kind = Kind::Delta0;
  unsigned n = 0;
  friend bool operator==(const Level&, const Level&) = default;
};

std::string to_string(const Level& l);

class NotArithmetic : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// True iff the formula uses only 0, s, +, *, =, < and connectives.
bool is_arithmetic(const Formula& f);
/// No unbounded quantifiers.
bool is_delta0(const Formula& f);

/// Prenex classification: a block of unbounded quantifiers over a bounded
/// matrix, read through negations. Throws NotArithmetic on foreign symbols
/// and std::invalid_argument when unbounded quantifiers sit under a binary
/// connective or a bounded quantifier.
Level classify_prenex(const Formula& f);

/// Truth in N of a closed bounded arithmetic sentence.
bool eval_sigma0(const Formula& sentence);
/// Same with values for the free variables.
bool eval_delta0(const Formula& f, const std::map<std::string, Natural>& env);
Natural eval_term(const Term& t, const std::map<std::string, Natural>& env);

/// Robinson arithmetic with a defining axiom for <.
std::vector<Formula> q_axioms();

}  // namespace tc::fol
