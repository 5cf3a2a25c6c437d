#include "tc/stability.hpp"

#include <map>
#include <stdexcept>

#include "nodes.hpp"
#include "tc/sorts.hpp"
#include "tc/synthesis.hpp"

namespace tc::stability {

std::optional<Entry> decode_entry(const Natural& code) {
  auto p = unpair(code);
  if (!p || p->second > 1) return std::nullopt;
  return Entry{p->first, p->second == 1};
}

bool is_l_stable(const std::vector<Entry>& l, const Natural& b) {
  // Stable iff the last entry mentioning b carries +.
  for (auto it = l.rbegin(); it != l.rend(); ++it)
    if (it->element == b) return it->plus;
  return false;
}

std::set<Natural> stabilization_oracle(const StreamSpec& spec) {
  std::set<Natural> out;
  std::map<Natural, bool> last_prefix, all_tail_plus;
  for (const auto& e : spec.prefix) last_prefix[e.element] = e.plus;
  for (const auto& e : spec.tail) {
    auto [it, fresh] = all_tail_plus.emplace(e.element, e.plus);
    if (!fresh) it->second = it->second && e.plus;
  }
  // Tail elements recur forever: stable iff no tail occurrence is -.
  for (const auto& [b, ok] : all_tail_plus)
    if (ok) out.insert(b);
  for (const auto& [b, plus] : last_prefix)
    if (!all_tail_plus.count(b) && plus) out.insert(b);
  return out;
}

std::optional<Entry> stream_at(const StreamSpec& spec, const Natural& n) {
  if (n < spec.prefix.size()) return spec.prefix[n.get_ui()];
  if (spec.tail.empty()) return std::nullopt;
  Natural k = (n - spec.prefix.size()) % spec.tail.size();
  return spec.tail[k.get_ui()];
}

Natural stream_spec_code(const StreamSpec& spec) {
  BitWriter w;
  for (const auto* part : {&spec.prefix, &spec.tail}) {
    w.natural(nat(part->size()));
    for (const auto& e : *part) {
      w.natural(e.element);
      w.bit(e.plus);
    }
  }
  return w.finish();
}

std::optional<StreamSpec> decode_stream_spec(const Natural& code) {
  BitReader r(code);
  if (!r.ok()) return std::nullopt;
  StreamSpec spec;
  for (auto* part : {&spec.prefix, &spec.tail}) {
    auto n = r.natural();
    if (!n || *n > 1000000) return std::nullopt;
    for (unsigned long i = 0; i < n->get_ui(); ++i) {
      auto x = r.natural();
      auto s = r.bit();
      if (!x || !s) return std::nullopt;
      part->push_back({*x, *s});
    }
  }
  if (!r.done()) return std::nullopt;
  return spec;
}

MachineCode stream_code(const StreamSpec& spec) {
  return encode_node({NodeKind::Stream, {stream_spec_code(spec)}});
}

MachineCode coerce_K(const MachineCode& code, const Natural& sort) {
  decode(code);
  return encode_node({NodeKind::Filter, {code.value, sorts::signed_of(sort)}});
}

MachineCode graph_stream(const MachineCode& code, const Natural& sort) {
  decode(code);
  return encode_node({NodeKind::Graph, {code.value, sort}});
}

MachineCode total_graph(const MachineCode& code, const Natural& sort) {
  return totalize(graph_stream(code, sort));
}

std::optional<GraphPoint> total_graph_at(const MachineCode& graph_code, const Natural& rank, Fuel& fuel) {
  Natural v = evaluate(graph_code, rank, fuel);
  if (v == kSentinel) return std::nullopt;
  auto iv = unpair(v);
  if (!iv) throw std::logic_error("f^T produced a non-pair");
  auto e = decode_entry(iv->second);
  if (!e) throw std::logic_error("f^T produced an off-image entry");
  return GraphPoint{iv->first, *e};
}

namespace {

// Latest-index tracking: G(b, n) is the sign of the b-entry with the largest
// first coordinate among the graph points found so far.
struct Latest {
  std::optional<Natural> index;
  bool plus = false;

  void see(const GraphPoint& p, const Natural& b) {
    if (p.entry.element != b) return;
    if (!index || p.index > *index) {
      index = p.index;
      plus = p.entry.plus;
    }
  }
  bool sign() const { return index && plus; }
};

}  // namespace

std::vector<bool> decision_trace(const Natural& b, const MachineCode& code, const Natural& sort,
                                 const Natural& horizon, Fuel& fuel) {
  MachineCode f = total_graph(code, sort);
  std::vector<bool> out;
  Latest latest;
  for (Natural n = 0; n <= horizon; ++n) {
    if (auto p = total_graph_at(f, n, fuel)) latest.see(*p, b);
    out.push_back(latest.sign());
  }
  return out;
}

bool decision_G(const Natural& b, const MachineCode& code, const Natural& sort, const Natural& n, Fuel& fuel) {
  MachineCode f = total_graph(code, sort);
  Latest latest;
  for (Natural k = 0; k <= n; ++k)
    if (auto p = total_graph_at(f, k, fuel)) latest.see(*p, b);
  return latest.sign();
}

MachineCode dec_B(const MachineCode& code, const Natural& sort) {
  decode(code);
  return encode_node({NodeKind::Dec, {code.value, sort}});
}

MachineCode omega(const MachineCode& code) { return restrict_to_sign(code); }

Verdict verdict_of(const std::vector<bool>& signs) {
  std::optional<std::size_t> last_minus, last_plus;
  for (std::size_t i = 0; i < signs.size(); ++i) (signs[i] ? last_plus : last_minus) = i;
  if (!last_plus) return {};
  if (!last_minus || *last_plus > *last_minus) {
    std::size_t m = last_minus ? *last_minus + 1 : 0;
    while (!signs[m]) ++m;
    return {Verdict::Kind::PlusStableSoFar, nat(m)};
  }
  std::size_t k = *last_plus + 1;
  while (signs[k]) ++k;
  return {Verdict::Kind::RefutedAt, nat(k)};
}

Verdict is_decided_prefix(const MachineCode& decision, const Natural& b, const Natural& horizon, Fuel& fuel) {
  std::vector<bool> signs;
  for (Natural m = 0; m <= horizon; ++m) {
    Natural v = evaluate(decision, pair(b, m), fuel);
    if (v > 1) throw std::domain_error("decision machine produced a non-sign value");
    signs.push_back(v == 1);
  }
  return verdict_of(signs);
}

std::set<Natural> decided_by_tail_analysis(const StreamSpec& spec, const Natural& fuel) {
  const MachineCode m = stream_code(spec);
  const MachineCode f = total_graph(m, sorts::nat());
  const MachineCode d = dec_B(m, sorts::nat());
  const std::size_t P = spec.prefix.size(), p = spec.tail.size();
  // Indices whose discovery closes the prefix plus one period, and a second period.
  const std::size_t start_upto = p ? P + p : P, full_upto = p ? P + 2 * p : P;

  std::map<Natural, Natural> discovered;  // index -> rank
  std::map<Natural, Natural> steps;       // index -> halting time
  Natural rank = 0;
  while (discovered.size() < full_upto) {
    Fuel budget(fuel);
    if (auto pt = total_graph_at(f, rank, budget)) {
      discovered[pt->index] = rank;
      steps[pt->index] = uncantor(rank).second;
    }
    ++rank;
  }
  // The window argument needs a constant halting time over the tail.
  for (std::size_t i = P; i < full_upto; ++i)
    if (steps.at(nat(i)) != steps.at(nat(P))) throw std::logic_error("stream halting time is not uniform");

  Natural r_start = 0, r_full = 0;
  for (const auto& [i, r] : discovered) {
    if (i < start_upto) r_start = std::max(r_start, r);
    r_full = std::max(r_full, r);
  }

  std::set<Natural> symbols;
  for (const auto* part : {&spec.prefix, &spec.tail})
    for (const auto& e : *part) symbols.insert(e.element);

  std::set<Natural> out;
  for (const auto& b : symbols) {
    bool always_plus = true;
    for (Natural n = r_start; n <= r_full && always_plus; ++n) {
      Outcome o = universal(d, pair(b, n), fuel);
      if (!o.halted()) throw std::runtime_error("Dec_B evaluation exhausted its budget");
      always_plus = o.value == 1;
    }
    if (always_plus) out.insert(b);
  }
  return out;
}

}  // namespace tc::stability

namespace tc::detail {

Natural eval_totalize(const Node& node, const Natural& input, Fuel& fuel) {
  auto [i, s] = uncantor(input);
  auto c = evaluate_counted({node.args[0]}, i, s, fuel);
  if (c && c->steps == s) return c->value;
  return kSentinel;
}

Natural eval_graph(const Node& node, const Natural& input, Fuel& fuel) {
  fuel.charge(1);
  Node k{NodeKind::Filter, {node.args[0], sorts::signed_of(node.args[1])}};
  Natural v = evaluate_node(k, input, fuel);
  return pair(input, v);
}

Natural eval_dec(const Node& node, const Natural& input, Fuel& fuel) {
  auto bn = unpair(input);
  if (!bn) fuel.diverge();
  const MachineCode f = encode_node(
      {NodeKind::Totalize, {encode_node({NodeKind::Graph, {node.args[0], node.args[1]}}).value}});
  stability::Latest latest;
  for (Natural k = 0; k <= bn->second; ++k) {
    Natural v = evaluate(f, k, fuel);
    if (v == kSentinel) continue;
    auto iv = unpair(v);
    auto e = iv ? stability::decode_entry(iv->second) : std::nullopt;
    if (!e) fuel.diverge();
    latest.see({iv->first, *e}, bn->first);
  }
  return stability::sign_code(latest.sign());
}

Natural eval_stream(const Node& node, const Natural& input, Fuel& fuel) {
  auto spec = stability::decode_stream_spec(node.args[0]);
  if (!spec) fuel.diverge();
  auto e = stability::stream_at(*spec, input);
  if (!e) fuel.diverge();
  return stability::entry_code(*e);
}

}  // namespace tc::detail
