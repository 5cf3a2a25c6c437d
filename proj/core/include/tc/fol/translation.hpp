#pragma once

// Interpretations between languages. Each commutes with the connectives and
// is injective on formulas.

#include <optional>
#include <string>

#include "tc/fol/formula.hpp"

namespace tc::fol {

enum class Translation : unsigned {
  Identity = 0,
  /// Arithmetic into the language of sets: numbers are von Neumann
  /// ordinals, 0 is the empty set, s(x) is x u {x}, < is membership.
  /// Quantifiers are relativised to the predicate nat(x); + and * become
  /// the defined predicates add(x, y, z) and mul(x, y, z).
  VonNeumann = 1,
};

std::optional<Translation> translation_from_id(const Natural& id);
Natural translation_id(Translation t);
std::string to_string(Translation t);

Formula translate(Translation t, const Formula& f);

}  // namespace tc::fol
