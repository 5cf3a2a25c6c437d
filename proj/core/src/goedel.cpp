#include "tc/goedel.hpp"

#include <map>
#include <mutex>

#include "nodes.hpp"
#include "tc/fol/encoding.hpp"
#include "tc/fol/f0.hpp"
#include "tc/sorts.hpp"
#include "tc/stability.hpp"

namespace tc::goedel {

namespace {

// Largest k with k(k+1)/2 <= n, and the offset past it.
std::pair<Natural, Natural> triangle(const Natural& n) {
  Natural disc = 8 * n + 1, root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  Natural k = (root - 1) / 2;
  return {k, n - k * (k + 1) / 2};
}

// Per formula index: how far phi(0), phi(1), ... are known to hold, and the
// first failure if one was seen.
struct Truth {
  Natural holds_below = 0;
  std::optional<Natural> first_failure;
};

bool holds_up_to(std::size_t index, const fol::Formula& phi, const Natural& k) {
  static std::mutex m;
  static std::map<std::size_t, Truth> memo;
  std::lock_guard lock(m);
  Truth& t = memo[index];
  while (!t.first_failure && t.holds_below <= k) {
    if (fol::f0_holds(phi, t.holds_below)) ++t.holds_below;
    else t.first_failure = t.holds_below;
  }
  return !t.first_failure || *t.first_failure > k;
}

std::size_t to_size(const Natural& n) {
  if (!n.fits_ulong_p()) throw std::overflow_error("index out of range");
  return n.get_ui();
}

MachineCode signed_formulas(const MachineCode& code) {
  return stability::coerce_K(code, sorts::formula());
}

}  // namespace

fol::Sentence alpha(const fol::Formula& phi) { return fol::Formula::forall(fol::kF0Var, phi); }

F0Entry enumerator_J(const Natural& n) {
  auto [k, m] = triangle(n);
  std::size_t index = to_size(m);
  fol::Formula phi = fol::f0_at(index);
  return {phi, holds_up_to(index, phi, k)};
}

MachineCode enumerator_j_code() { return encode_node({NodeKind::EnumeratorJ, {}}); }

MachineCode spec_i(const MachineCode& code, fol::Translation t) {
  decode(code);
  return encode_node({NodeKind::Spec, {code.value, fol::translation_id(t)}});
}

MachineCode closure_C(const MachineCode& code, const Natural& budget) {
  decode(code);
  return encode_node({NodeKind::Closure, {code.value, budget}});
}

MachineCode build_H_and_Tur(const MachineCode& f, fol::Translation t, const Natural& budget) {
  decode(f);
  return encode_node({NodeKind::Tur, {f.value, fol::translation_id(t), budget}});
}

ClosureEntry closure_entry(const MachineCode& code, const Natural& budget, const Natural& n, Fuel& fuel) {
  // Block j >= 1 holds 2^(j+1) premise lists (subsets of {0..j} by bit mask),
  // each followed through consequence steps 0..j.
  std::size_t j = 1;
  Natural start = 0;
  while (true) {
    fuel.charge(1);
    Natural size = (Natural(1) << (j + 1)) * (j + 1);
    if (n < start + size) break;
    start += size;
    ++j;
  }
  Natural offset = n - start;
  Natural mask = offset / (j + 1);
  std::size_t step = to_size(offset % (j + 1));

  const MachineCode graph = signed_formulas(code);
  std::vector<std::optional<stability::Entry>> points;
  for (std::size_t i = 0; i <= j; ++i) {
    std::optional<Natural> v;
    if (budget == 0) v = detail::evaluate_sub(graph.value, Natural(i), fuel);
    else v = evaluate_capped(graph, Natural(i), budget, fuel);
    points.push_back(v ? stability::decode_entry(*v) : std::nullopt);
  }
  std::vector<stability::Entry> observed;
  for (const auto& p : points)
    if (p) observed.push_back(*p);

  std::vector<std::size_t> indices;
  std::vector<fol::Sentence> premises;
  bool stable = true;
  for (std::size_t i = 0; i <= j; ++i) {
    if (!mpz_tstbit(mask.get_mpz_t(), i) || !points[i]) continue;
    auto f = fol::decode_formula(points[i]->element);
    if (!f) fuel.diverge();
    indices.push_back(i);
    premises.push_back(*f);
    stable = stable && stability::is_l_stable(observed, points[i]->element);
  }
  fol::Derived d = fol::phi_closure(premises, step, &fuel);
  return {d.sentence, stable, j, std::move(indices), std::move(premises), step, std::move(d.proof)};
}

GoedelSentence goedel_G(const MachineCode& f, fol::Translation t) {
  GoedelSentence g = sentence_s(build_H_and_Tur(f, t));
  if (t != fol::Translation::Identity) g.translated = fol::translate(t, g.sentence);
  return g;
}

}  // namespace tc::goedel

namespace tc::detail {

Natural eval_enumerator_j(const Node&, const Natural& input, Fuel& fuel) {
  fuel.charge(goedel::triangle(input).first + 1);
  auto e = goedel::enumerator_J(input);
  return pair(fol::formula_code(e.formula), Natural(e.plus ? 1 : 0));
}

Natural eval_spec(const Node& node, const Natural& input, Fuel& fuel) {
  auto t = fol::translation_from_id(node.args[1]);
  if (!t) fuel.diverge();
  Natural k = input / 2;
  if (input % 2 == 1) return evaluate_sub(goedel::signed_formulas({node.args[0]}).value, k, fuel);
  fuel.charge(goedel::triangle(k).first + 1);
  auto e = goedel::enumerator_J(k);
  return pair(fol::formula_code(fol::translate(*t, goedel::alpha(e.formula))), Natural(e.plus ? 1 : 0));
}

Natural eval_closure(const Node& node, const Natural& input, Fuel& fuel) {
  auto e = goedel::closure_entry({node.args[0]}, node.args[1], input, fuel);
  return pair(fol::formula_code(e.sentence), Natural(e.plus ? 1 : 0));
}

Natural eval_tur(const Node& node, const Natural& input, Fuel& fuel) {
  auto t = fol::translation_from_id(node.args[1]);
  auto tn = unpair(input);
  if (!t || !tn || !is_valid_code(tn->first)) fuel.diverge();
  // s(T) exists only for codes the arithmetization covers.
  fol::Sentence s = [&] {
    try {
      return goedel::sentence_s({tn->first}).sentence;
    } catch (const goedel::Unsupported&) {
      fuel.diverge();
    }
  }();
  Natural b = fol::formula_code(fol::translate(*t, s));
  fuel.charge(s.size());
  MachineCode spec = goedel::spec_i({node.args[0]}, *t);
  MachineCode decision = stability::dec_B(goedel::closure_C(spec, node.args[2]), sorts::formula());
  return evaluate_sub(decision.value, pair(b, tn->second), fuel);
}

}  // namespace tc::detail
