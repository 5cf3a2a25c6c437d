#pragma once

// Counter-machine model: unbounded natural registers, single input in r0,
// single output named by HALT.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tc/natural.hpp"

namespace tc {

enum class Op : std::uint8_t {
  Inc = 0,    // INC r
  DecJz = 1,  // DECJZ r L : if r == 0 jump to L, else r -= 1
  Const = 2,  // CONST r k
  Copy = 3,   // COPY r s  : r := s
  Jmp = 4,    // JMP L
  Halt = 5,   // HALT r    : stop with output r
};

struct Instruction {
  Op op = Op::Halt;
  std::uint32_t reg = 0;
  /// Jump target for DecJz/Jmp, source register for Copy.
  std::uint32_t arg = 0;
  /// Constant for Const.
  Natural constant = 0;

  friend bool operator==(const Instruction& a, const Instruction& b) {
    return a.op == b.op && a.reg == b.reg && a.arg == b.arg && a.constant == b.constant;
  }
};

class ProgramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite counter-machine program. Execution starts at instruction 0;
/// running off the end behaves as HALT r0.
class Program {
 public:
  Program() = default;
  explicit Program(std::vector<Instruction> instructions);

  const std::vector<Instruction>& instructions() const { return instructions_; }
  std::size_t size() const { return instructions_.size(); }
  /// One past the largest register index mentioned (at least 1).
  std::uint32_t register_count() const { return register_count_; }

  friend bool operator==(const Program& a, const Program& b) {
    return a.instructions_ == b.instructions_;
  }

 private:
  std::vector<Instruction> instructions_;
  std::uint32_t register_count_ = 1;
};

/// Throws ProgramError if an operand is out of range.
void validate(const Program& p);

struct Outcome {
  enum class Kind { Halted, OutOfFuel };
  Kind kind = Kind::OutOfFuel;
  Natural value = 0;
  /// Steps consumed (== fuel on OutOfFuel).
  Natural steps = 0;

  bool halted() const { return kind == Kind::Halted; }
  static Outcome halt(Natural v, Natural steps) { return {Kind::Halted, std::move(v), std::move(steps)}; }
  static Outcome out_of_fuel(Natural steps) { return {Kind::OutOfFuel, 0, std::move(steps)}; }
};

/// Runs p on input for at most fuel steps.
Outcome run(const Program& p, const Natural& input, const Natural& fuel);

/// Machine configuration; used by the arithmetization and its oracle.
struct StepState {
  std::uint32_t pc = 0;
  std::vector<Natural> registers;
  Natural fuel_consumed = 0;
};

StepState initial_state(const Program& p, const Natural& input);
bool is_halting(const Program& p, const StepState& s);
/// Output register value of a halting state.
const Natural& output_of(const Program& p, const StepState& s);
/// Deterministic successor; precondition !is_halting.
StepState step(const Program& p, const StepState& s);

/// Text format: one instruction per line (INC r, DECJZ r L, CONST r k,
/// COPY r s, JMP L, HALT r), labels as `name:`, comments after '#' or ';'.
Program parse_program(std::string_view text);
std::string print_program(const Program& p);

}  // namespace tc
