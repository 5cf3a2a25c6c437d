#include "tc/category.hpp"

#include "nodes.hpp"

namespace tc::cat {

Encoding<Natural> nat_encoding() {
  return {sorts::nat(), [](const Natural& n) { return n; },
          [](const Natural& n) -> std::optional<Natural> { return n; }};
}

Encoding<bool> sign_encoding() {
  return {sorts::sign(), [](const bool& b) { return Natural(b ? 1 : 0); },
          [](const Natural& n) -> std::optional<bool> {
            if (n > 1) return std::nullopt;
            return n == 1;
          }};
}

ComputableMap<std::vector<Natural>, std::vector<Natural>> lu(const MachineCode& code) {
  return map_list(ComputableMap<Natural, Natural>{nat_encoding(), nat_encoding(), code});
}

std::optional<Natural> list_element_code(const Natural& list_code, const Natural& i) {
  auto l = sorts::split_list(list_code);
  if (!l || i >= l->size()) return std::nullopt;
  return (*l)[i.get_ui()];
}

std::optional<Natural> list_length_code(const Natural& list_code) {
  auto l = sorts::split_list(list_code);
  if (!l) return std::nullopt;
  return nat(l->size());
}

}  // namespace tc::cat

namespace tc::detail {

Natural eval_map_list(const Node& node, const Natural& input, Fuel& fuel) {
  auto elems = sorts::split_list(input);
  if (!elems) fuel.diverge();
  std::vector<Natural> out;
  for (const auto& e : *elems) {
    out.push_back(evaluate_sub(node.args[0], e, fuel));
    if (!out.back().fits_ulong_p()) fuel.diverge();
    fuel.charge(out.back() + 1);
  }
  return sorts::join_list(out);
}

}  // namespace tc::detail
