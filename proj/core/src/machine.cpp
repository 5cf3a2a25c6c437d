#include "tc/machine.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace tc {

Program::Program(std::vector<Instruction> instructions) : instructions_(std::move(instructions)) {
  for (const auto& ins : instructions_) {
    register_count_ = std::max(register_count_, ins.reg + 1);
    if (ins.op == Op::Copy) register_count_ = std::max(register_count_, ins.arg + 1);
  }
}

void validate(const Program& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& ins = p.instructions()[i];
    if ((ins.op == Op::DecJz || ins.op == Op::Jmp) && ins.arg > p.size())
      throw ProgramError("jump target out of range at instruction " + std::to_string(i));
    if (ins.op != Op::Const && ins.constant != 0)
      throw ProgramError("stray constant at instruction " + std::to_string(i));
    if (ins.op != Op::DecJz && ins.op != Op::Jmp && ins.op != Op::Copy && ins.arg != 0)
      throw ProgramError("stray operand at instruction " + std::to_string(i));
    if (ins.op == Op::Jmp && ins.reg != 0)
      throw ProgramError("stray register on JMP at instruction " + std::to_string(i));
  }
}

StepState initial_state(const Program& p, const Natural& input) {
  StepState s;
  s.registers.assign(p.register_count(), Natural(0));
  s.registers[0] = input;
  return s;
}

bool is_halting(const Program& p, const StepState& s) {
  return s.pc >= p.size() || p.instructions()[s.pc].op == Op::Halt;
}

const Natural& output_of(const Program& p, const StepState& s) {
  if (s.pc >= p.size()) return s.registers[0];
  return s.registers[p.instructions()[s.pc].reg];
}

namespace {

// Advances in place; returns false when the state is halting.
bool advance(const Program& p, StepState& s) {
  if (is_halting(p, s)) return false;
  const auto& ins = p.instructions()[s.pc];
  switch (ins.op) {
    case Op::Inc:
      ++s.registers[ins.reg];
      ++s.pc;
      break;
    case Op::DecJz:
      if (s.registers[ins.reg] == 0) {
        s.pc = ins.arg;
      } else {
        --s.registers[ins.reg];
        ++s.pc;
      }
      break;
    case Op::Const:
      s.registers[ins.reg] = ins.constant;
      ++s.pc;
      break;
    case Op::Copy:
      s.registers[ins.reg] = s.registers[ins.arg];
      ++s.pc;
      break;
    case Op::Jmp:
      s.pc = ins.arg;
      break;
    case Op::Halt:
      break;
  }
  ++s.fuel_consumed;
  return true;
}

}  // namespace

StepState step(const Program& p, const StepState& s) {
  StepState next = s;
  advance(p, next);
  return next;
}

Outcome run(const Program& p, const Natural& input, const Natural& fuel) {
  StepState s = initial_state(p, input);
  // The halting instruction itself costs one step.
  while (true) {
    if (is_halting(p, s)) {
      if (s.fuel_consumed + 1 > fuel) return Outcome::out_of_fuel(fuel);
      return Outcome::halt(output_of(p, s), s.fuel_consumed + 1);
    }
    if (s.fuel_consumed >= fuel) return Outcome::out_of_fuel(fuel);
    advance(p, s);
  }
}

// ---- text format ----

namespace {

std::string strip(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::uint32_t parse_register(const std::string& tok, int line) {
  std::string digits = tok;
  if (!digits.empty() && (digits[0] == 'r' || digits[0] == 'R')) digits = digits.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 9)
    throw ProgramError("line " + std::to_string(line) + ": bad register '" + tok + "'");
  return static_cast<std::uint32_t>(std::stoul(digits));
}

}  // namespace

Program parse_program(std::string_view text) {
  struct Pending {
    Instruction ins;
    std::string label;
    int line;
  };
  std::vector<Pending> pending;
  std::map<std::string, std::uint32_t> labels;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto cut = raw.find_first_of("#;");
    std::string line = strip(cut == std::string::npos ? raw : raw.substr(0, cut));
    while (true) {
      auto colon = line.find(':');
      if (colon == std::string::npos) break;
      std::string name = strip(line.substr(0, colon));
      if (name.empty() || name.find(' ') != std::string::npos)
        throw ProgramError("line " + std::to_string(line_no) + ": bad label");
      if (!labels.emplace(name, static_cast<std::uint32_t>(pending.size())).second)
        throw ProgramError("line " + std::to_string(line_no) + ": duplicate label " + name);
      line = strip(line.substr(colon + 1));
    }
    if (line.empty()) continue;

    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    std::string mnemonic = tok[0];
    std::transform(mnemonic.begin(), mnemonic.end(), mnemonic.begin(), ::toupper);
    auto need = [&](std::size_t n) {
      if (tok.size() != n + 1)
        throw ProgramError("line " + std::to_string(line_no) + ": " + mnemonic + " expects " +
                           std::to_string(n) + " operand(s)");
    };

    Pending p{{}, {}, line_no};
    if (mnemonic == "INC") {
      need(1);
      p.ins.op = Op::Inc;
      p.ins.reg = parse_register(tok[1], line_no);
    } else if (mnemonic == "DECJZ") {
      need(2);
      p.ins.op = Op::DecJz;
      p.ins.reg = parse_register(tok[1], line_no);
      p.label = tok[2];
    } else if (mnemonic == "CONST") {
      need(2);
      p.ins.op = Op::Const;
      p.ins.reg = parse_register(tok[1], line_no);
      auto k = parse_natural(tok[2]);
      if (!k) throw ProgramError("line " + std::to_string(line_no) + ": bad constant");
      p.ins.constant = *k;
    } else if (mnemonic == "COPY") {
      need(2);
      p.ins.op = Op::Copy;
      p.ins.reg = parse_register(tok[1], line_no);
      p.ins.arg = parse_register(tok[2], line_no);
    } else if (mnemonic == "JMP") {
      need(1);
      p.ins.op = Op::Jmp;
      p.label = tok[1];
    } else if (mnemonic == "HALT") {
      need(1);
      p.ins.op = Op::Halt;
      p.ins.reg = parse_register(tok[1], line_no);
    } else {
      throw ProgramError("line " + std::to_string(line_no) + ": unknown instruction " + tok[0]);
    }
    pending.push_back(std::move(p));
  }

  std::vector<Instruction> out;
  out.reserve(pending.size());
  for (auto& p : pending) {
    if (!p.label.empty()) {
      auto it = labels.find(p.label);
      if (it == labels.end())
        throw ProgramError("line " + std::to_string(p.line) + ": undefined label " + p.label);
      p.ins.arg = it->second;
    }
    out.push_back(p.ins);
  }
  Program prog(std::move(out));
  validate(prog);
  return prog;
}

std::string print_program(const Program& p) {
  std::vector<bool> target(p.size() + 1, false);
  for (const auto& ins : p.instructions())
    if (ins.op == Op::DecJz || ins.op == Op::Jmp) target[ins.arg] = true;

  std::ostringstream out;
  for (std::size_t i = 0; i <= p.size(); ++i) {
    if (target[i]) out << "L" << i << ":\n";
    if (i == p.size()) break;
    const auto& ins = p.instructions()[i];
    switch (ins.op) {
      case Op::Inc: out << "INC r" << ins.reg; break;
      case Op::DecJz: out << "DECJZ r" << ins.reg << " L" << ins.arg; break;
      case Op::Const: out << "CONST r" << ins.reg << " " << to_string(ins.constant); break;
      case Op::Copy: out << "COPY r" << ins.reg << " r" << ins.arg; break;
      case Op::Jmp: out << "JMP L" << ins.arg; break;
      case Op::Halt: out << "HALT r" << ins.reg; break;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace tc
