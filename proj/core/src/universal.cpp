#include "tc/universal.hpp"

#include "nodes.hpp"

namespace tc {

void Fuel::charge(const Natural& n) {
  if (n > left_) {
    used_ += left_;
    left_ = 0;
    throw FuelExhausted{};
  }
  left_ -= n;
  used_ += n;
}

void Fuel::diverge() {
  used_ += left_;
  left_ = 0;
  throw Diverged{};
}

Natural evaluate(const MachineCode& code, const Natural& input, Fuel& fuel) {
  CodeBody body = decode(code);
  if (auto* prog = std::get_if<Program>(&body)) {
    Outcome o = run(*prog, input, fuel.left());
    if (!o.halted()) fuel.diverge();
    fuel.charge(o.steps);
    return o.value;
  }
  fuel.charge(1);
  return detail::evaluate_node(std::get<Node>(body), input, fuel);
}

std::optional<Counted> evaluate_counted(const MachineCode& code, const Natural& input, const Natural& cap,
                                        Fuel& fuel) {
  bool cap_binds = cap <= fuel.left();
  Fuel local(cap_binds ? cap : fuel.left());
  try {
    Natural v;
    try {
      v = evaluate(code, input, local);
    } catch (const InvalidCode&) {
      local.diverge();
    }
    fuel.charge(local.used());
    return Counted{std::move(v), local.used()};
  } catch (const FuelExhausted&) {
    fuel.charge(local.used());
    if (cap_binds) return std::nullopt;
    fuel.diverge();
  }
}

std::optional<Natural> evaluate_capped(const MachineCode& code, const Natural& input,
                                       const Natural& cap, Fuel& fuel) {
  auto c = evaluate_counted(code, input, cap, fuel);
  if (!c) return std::nullopt;
  return std::move(c->value);
}

Outcome universal(const MachineCode& code, const Natural& input, const Natural& fuel) {
  Fuel f(fuel);
  try {
    Natural v = evaluate(code, input, f);
    return Outcome::halt(std::move(v), f.used());
  } catch (const FuelExhausted&) {
    return Outcome::out_of_fuel(fuel);
  }
}

}  // namespace tc
