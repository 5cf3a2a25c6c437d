#include "tc/synthesis.hpp"

#include <map>

#include "tc/programs.hpp"
#include "tc/sorts.hpp"

namespace tc {

MachineCode smn(const MachineCode& code2, const Natural& a) {
  CodeBody body = decode(code2);
  if (auto* p = std::get_if<Program>(&body)) {
    const std::uint32_t r = p->register_count();
    const std::uint32_t ra = r, rb = r + 1, t1 = r + 2, t2 = r + 3, t3 = r + 4;
    Assembler as;
    auto exit = as.label();
    as.load(ra, a);
    as.copy(rb, 0);
    as.pair(0, ra, rb, t1, t2, t3);
    as.splice(*p, exit);
    as.bind(exit);
    as.halt(0);
    return encode_program(as.build());
  }
  return encode_node({NodeKind::Smn, {code2.value, a}});
}

MachineCode totalize(const MachineCode& code) {
  decode(code);
  return encode_node({NodeKind::Totalize, {code.value}});
}

MachineCode restrict_to_sign(const MachineCode& code) {
  CodeBody body = decode(code);
  auto* p = std::get_if<Program>(&body);
  if (!p) return encode_node({NodeKind::Filter, {code.value, sorts::sign()}});

  const std::uint32_t out = p->register_count(), tmp = out + 1;
  Assembler as;
  std::vector<Assembler::Label> at(p->size() + 1);
  for (auto& l : at) l = as.label();
  std::map<std::uint32_t, Assembler::Label> check;
  auto check_for = [&](std::uint32_t reg) {
    auto it = check.find(reg);
    if (it == check.end()) it = check.emplace(reg, as.label()).first;
    return it->second;
  };
  for (std::size_t i = 0; i < p->size(); ++i) {
    const auto& ins = p->instructions()[i];
    as.bind(at[i]);
    switch (ins.op) {
      case Op::Inc: as.inc(ins.reg); break;
      case Op::DecJz: as.decjz(ins.reg, at[ins.arg]); break;
      case Op::Const: as.load(ins.reg, ins.constant); break;
      case Op::Copy: as.copy(ins.reg, ins.arg); break;
      case Op::Jmp: as.jmp(at[ins.arg]); break;
      case Op::Halt: as.jmp(check_for(ins.reg)); break;
    }
  }
  as.bind(at[p->size()]);
  as.jmp(check_for(0));

  auto verify = as.label(), ok = as.label();
  for (auto [reg, l] : check) {
    as.bind(l);
    as.copy(out, reg);
    as.jmp(verify);
  }
  as.bind(verify);
  as.copy(tmp, out);
  as.decjz(tmp, ok);
  as.decjz(tmp, ok);
  as.diverge();
  as.bind(ok);
  as.halt(out);
  return encode_program(as.build());
}

}  // namespace tc
