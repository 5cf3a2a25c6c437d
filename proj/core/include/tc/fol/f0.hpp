#pragma once

// Enumeration of bounded arithmetic formulas in the free variable m.

#include <cstddef>
#include <optional>

#include "tc/fol/formula.hpp"

namespace tc::fol {

/// Symbol count: every term and formula node counts 1.
std::size_t f0_weight(const Formula& f);

/// i-th formula of the F0 class, ordered by weight and then by a fixed
/// generation order. Every F0 formula appears exactly once.
Formula f0_at(std::size_t index);
/// Inverse of f0_at for formulas of the class.
std::optional<std::size_t> f0_index(const Formula& f);

/// phi(m) with m replaced by the numeral of `m`, evaluated in N.
bool f0_holds(const Formula& phi, const Natural& m);

}  // namespace tc::fol
