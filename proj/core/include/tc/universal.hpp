#pragma once

#include <optional>

#include "tc/code.hpp"
#include "tc/machine.hpp"

namespace tc {

/// Step budget shared by a whole evaluation. Exhaustion unwinds with FuelExhausted.
class Fuel {
 public:
  explicit Fuel(Natural limit) : left_(std::move(limit)) {}

  const Natural& left() const { return left_; }
  const Natural& used() const { return used_; }
  void charge(const Natural& n);
  void charge(unsigned long n = 1) { charge(Natural(n)); }
  /// Consumes everything; used for undefined (divergent) results.
  [[noreturn]] void diverge();

 private:
  Natural left_;
  Natural used_ = 0;
};

struct FuelExhausted {};
/// Thrown where a result is undefined by construction (off-image values,
/// invalid sub-codes). Behaves as exhaustion inside dovetails.
struct Diverged : FuelExhausted {};

/// Evaluates code on input, drawing from fuel. Returns the output or throws
/// FuelExhausted; throws InvalidCode for an invalid top-level code.
Natural evaluate(const MachineCode& code, const Natural& input, Fuel& fuel);

/// As evaluate, but the computation is additionally capped at `cap` steps,
/// a cap that belongs to the semantics (a dovetail bound). nullopt means the
/// cap was reached; exhaustion of the outer fuel still throws. Invalid codes
/// behave as divergence.
std::optional<Natural> evaluate_capped(const MachineCode& code, const Natural& input,
                                       const Natural& cap, Fuel& fuel);

/// Result and exact step count of a computation that halted within `cap`.
struct Counted {
  Natural value;
  Natural steps;
};
std::optional<Counted> evaluate_counted(const MachineCode& code, const Natural& input, const Natural& cap,
                                        Fuel& fuel);

/// Universal function U(code, input) observed under a step budget.
Outcome universal(const MachineCode& code, const Natural& input, const Natural& fuel);

}  // namespace tc
