#pragma once

#include "tc/code.hpp"

namespace tc {

/// Reserved totalizer output meaning "nothing new discovered at this rank".
/// Zero lies outside the image of every pair-based encoding.
inline const Natural kSentinel{0};

/// s-m-n specializer: the result computes b -> code2(pair(a, b)).
/// Counter programs are specialized by prepending a pairing prologue; other
/// codes are wrapped in an Smn node. Throws InvalidCode.
MachineCode smn(const MachineCode& code2, const Natural& a);

/// Dovetailed totalization. On rank n = cantor(i, s) the result outputs
/// code(i) if code halts on i in exactly s steps, else kSentinel.
MachineCode totalize(const MachineCode& code);

/// Restriction of code's output to {0, 1}; off-image outputs diverge. Counter
/// programs are compiled to counter programs (the arithmetization relies on it).
MachineCode restrict_to_sign(const MachineCode& code);

}  // namespace tc
