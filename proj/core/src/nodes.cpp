#include "nodes.hpp"

#include "tc/sorts.hpp"

namespace tc::detail {

Natural evaluate_sub(const Natural& code, const Natural& input, Fuel& fuel) {
  try {
    return evaluate({code}, input, fuel);
  } catch (const InvalidCode&) {
    fuel.diverge();
  }
}

namespace {

ProductScheme scheme_of(const Natural& n, Fuel& fuel) {
  if (n == 0) return ProductScheme::Cantor;
  if (n == 1) return ProductScheme::PrimePower;
  fuel.diverge();
}

Natural join(ProductScheme s, const Natural& a, const Natural& b) {
  if (s == ProductScheme::Cantor) return pair(a, b);
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), Natural(2).get_mpz_t(), a.get_ui());
  Natural three;
  mpz_pow_ui(three.get_mpz_t(), Natural(3).get_mpz_t(), b.get_ui());
  return out * three;
}

std::pair<Natural, Natural> split(ProductScheme s, const Natural& n, Fuel& fuel) {
  if (s == ProductScheme::Cantor) {
    auto p = unpair(n);
    if (!p) fuel.diverge();
    return *p;
  }
  auto p = sorts::split_prime_product(n);
  if (!p) fuel.diverge();
  return *p;
}

}  // namespace

Natural evaluate_node(const Node& node, const Natural& input, Fuel& fuel) {
  const auto& a = node.args;
  switch (node.kind) {
    case NodeKind::Smn: return evaluate_sub(a[0], pair(a[1], input), fuel);
    case NodeKind::Totalize: return eval_totalize(node, input, fuel);
    case NodeKind::Filter: {
      Natural v = evaluate_sub(a[0], input, fuel);
      fuel.charge(1);
      if (!sorts::contains(a[1], v)) fuel.diverge();
      return v;
    }
    case NodeKind::Graph: return eval_graph(node, input, fuel);
    case NodeKind::Dec: return eval_dec(node, input, fuel);
    case NodeKind::Spec: return eval_spec(node, input, fuel);
    case NodeKind::Closure: return eval_closure(node, input, fuel);
    case NodeKind::Tur: return eval_tur(node, input, fuel);
    case NodeKind::Compose: return evaluate_sub(a[0], evaluate_sub(a[1], input, fuel), fuel);
    case NodeKind::PairMaps: {
      auto s = scheme_of(a[2], fuel);
      Natural x = evaluate_sub(a[0], input, fuel);
      Natural y = evaluate_sub(a[1], input, fuel);
      if (s == ProductScheme::PrimePower) fuel.charge(x + y);
      return join(s, x, y);
    }
    case NodeKind::Parallel: {
      auto s = scheme_of(a[2], fuel);
      auto [l, r] = split(s, input, fuel);
      Natural x = evaluate_sub(a[0], l, fuel);
      Natural y = evaluate_sub(a[1], r, fuel);
      if (s == ProductScheme::PrimePower) fuel.charge(x + y);
      return join(s, x, y);
    }
    case NodeKind::Project: {
      auto s = scheme_of(a[1], fuel);
      auto [l, r] = split(s, input, fuel);
      if (a[0] == 0) return l;
      if (a[0] == 1) return r;
      fuel.diverge();
    }
    case NodeKind::MapList: return eval_map_list(node, input, fuel);
    case NodeKind::EnumeratorA: return eval_enumerator_a(node, input, fuel);
    case NodeKind::EnumeratorJ: return eval_enumerator_j(node, input, fuel);
    case NodeKind::Stream: return eval_stream(node, input, fuel);
  }
  fuel.diverge();
}

}  // namespace tc::detail
