#include "tc/programs.hpp"

#include <stdexcept>

namespace tc {

Assembler::Label Assembler::label() {
  labels_.push_back(-1);
  return static_cast<Label>(labels_.size() - 1);
}

void Assembler::bind(Label l) { labels_.at(l) = static_cast<std::int64_t>(code_.size()); }

void Assembler::inc(std::uint32_t r) { code_.push_back({{Op::Inc, r, 0, 0}}); }

void Assembler::decjz(std::uint32_t r, Label target) {
  code_.push_back({{Op::DecJz, r, 0, 0}, true, target});
}

void Assembler::load(std::uint32_t r, const Natural& k) { code_.push_back({{Op::Const, r, 0, k}}); }

void Assembler::copy(std::uint32_t dst, std::uint32_t src) {
  code_.push_back({{Op::Copy, dst, src, 0}});
}

void Assembler::jmp(Label target) { code_.push_back({{Op::Jmp, 0, 0, 0}, true, target}); }

void Assembler::halt(std::uint32_t r) { code_.push_back({{Op::Halt, r, 0, 0}}); }

void Assembler::splice(const Program& p, Label exit) {
  auto offset = static_cast<std::uint32_t>(code_.size());
  for (const auto& ins : p.instructions()) {
    Pending pending{ins};
    if (ins.op == Op::DecJz || ins.op == Op::Jmp) {
      if (ins.arg >= p.size()) {
        pending.patch = true;
        pending.target = exit;
      } else {
        pending.ins.arg += offset;
      }
    }
    code_.push_back(pending);
  }
  // Falling off the end of the spliced program continues at `exit`.
  jmp(exit);
}

void Assembler::clear(std::uint32_t r) { load(r, 0); }

void Assembler::add(std::uint32_t dst, std::uint32_t src, std::uint32_t tmp) {
  Label loop = label(), restore = label(), done = label();
  bind(loop);
  decjz(src, restore);
  inc(dst);
  inc(tmp);
  jmp(loop);
  bind(restore);
  decjz(tmp, done);
  inc(src);
  jmp(restore);
  bind(done);
}

void Assembler::pair(std::uint32_t dst, std::uint32_t a, std::uint32_t b, std::uint32_t t1,
                     std::uint32_t t2, std::uint32_t t3) {
  // t1 := a + b; dst := t1 (t1 + 1) / 2 as 1 + 2 + ... + t1; dst += b + 1.
  clear(dst);
  add(t1, a, t3);
  add(t1, b, t3);
  Label loop = label(), done = label();
  bind(loop);
  copy(t2, t1);
  decjz(t2, done);
  add(dst, t1, t3);
  decjz(t1, done);
  jmp(loop);
  bind(done);
  clear(t1);
  clear(t2);
  add(dst, b, t3);
  inc(dst);
}

void Assembler::unpair(std::uint32_t z, std::uint32_t a, std::uint32_t b) {
  // Walks the Cantor order z - 1 times from (0, 0).
  Label bad = label(), loop = label(), swap = label(), done = label();
  clear(a);
  clear(b);
  decjz(z, bad);
  bind(loop);
  decjz(z, done);
  decjz(a, swap);
  inc(b);
  jmp(loop);
  bind(swap);
  copy(a, b);
  inc(a);
  clear(b);
  jmp(loop);
  bind(bad);
  diverge();
  bind(done);
}

void Assembler::diverge() {
  Label self = label();
  bind(self);
  jmp(self);
}

Program Assembler::build() const {
  std::vector<Instruction> out;
  out.reserve(code_.size());
  for (const auto& p : code_) {
    Instruction ins = p.ins;
    if (p.patch) {
      std::int64_t at = labels_.at(p.target);
      if (at < 0) throw std::logic_error("unbound label");
      ins.arg = static_cast<std::uint32_t>(at);
    }
    out.push_back(ins);
  }
  Program prog(std::move(out));
  validate(prog);
  return prog;
}

namespace programs {

Program identity() { return Program({{Op::Halt, 0, 0, 0}}); }

Program successor() { return Program({{Op::Inc, 0, 0, 0}, {Op::Halt, 0, 0, 0}}); }

Program diverge() { return Program({{Op::Jmp, 0, 0, 0}}); }

Program constant(const Natural& k) { return Program({{Op::Const, 0, 0, k}, {Op::Halt, 0, 0, 0}}); }

Program point(const Natural& at, const Natural& value) {
  // r1 := at; decrement r0 and r1 together, halting only if both hit zero at once.
  Assembler a;
  auto loop = a.label(), r0_zero = a.label(), miss = a.label(), hit = a.label();
  a.load(1, at);
  a.bind(loop);
  a.decjz(0, r0_zero);
  a.decjz(1, miss);
  a.jmp(loop);
  a.bind(r0_zero);
  a.decjz(1, hit);
  a.bind(miss);
  a.diverge();
  a.bind(hit);
  a.load(0, value);
  a.halt(0);
  return a.build();
}

Program project_first() {
  Assembler a;
  a.unpair(0, 1, 2);
  a.halt(1);
  return a.build();
}

Program project_second() {
  Assembler a;
  a.unpair(0, 1, 2);
  a.halt(2);
  return a.build();
}

Program addition() {
  Assembler a;
  a.unpair(0, 1, 2);
  a.add(1, 2, 3);
  a.halt(1);
  return a.build();
}

}  // namespace programs

}  // namespace tc
