#include <algorithm>
#include <functional>
#include <set>

#include "tc/fol/encoding.hpp"
#include "tc/fol/proof.hpp"
#include "tc/fol/syntax.hpp"
#include "tc/sorts.hpp"
#include "tc/universal.hpp"

namespace tc::fol {

namespace {

constexpr unsigned long kBruteBlock = 256;
constexpr std::size_t kMaxInstantiatedVars = 2;

void collect_terms(const Term& t, std::set<Term>& out) {
  if (free_vars(t).empty()) out.insert(t);
  for (const auto& a : t.args()) collect_terms(a, out);
}

void collect(const Formula& f, std::set<Formula>& seeds, std::set<Formula>& closed_subs, std::set<Term>& terms) {
  if (is_closed(f)) closed_subs.insert(f);
  if (f.is_atomic() || f.is_quantifier()) seeds.insert(f);
  for (const auto& t : f.terms()) collect_terms(t, terms);
  if (f.is_atomic()) return;
  std::size_t n = f.is_quantifier() || f.kind() == Formula::Kind::Not ? 1 : 2;
  for (std::size_t i = 0; i < n; ++i) collect(f.sub(i), seeds, closed_subs, terms);
}

bool by_size_then_text(const Formula& a, const Formula& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return print(a) < print(b);
}

std::vector<Formula> sorted(const std::set<Formula>& s) {
  std::vector<Formula> v(s.begin(), s.end());
  std::stable_sort(v.begin(), v.end(), by_size_then_text);
  return v;
}

// All closed instances of f, free variables ranging over `terms`.
void instances(const Formula& f, const std::vector<Term>& terms, std::set<Formula>& out) {
  auto vars = free_vars(f);
  if (vars.size() > kMaxInstantiatedVars) return;
  std::vector<std::string> vs(vars.begin(), vars.end());
  std::function<void(std::size_t, const Formula&)> go = [&](std::size_t i, const Formula& g) {
    if (i == vs.size()) {
      out.insert(g);
      return;
    }
    for (const auto& t : terms) go(i + 1, substitute(g, vs[i], t));
  };
  go(0, f);
}

Term replace_all(const Term& a, const Term& s, const Term& t) {
  if (a == s) return t;
  switch (a.kind()) {
    case Term::Kind::Succ: return Term::succ(replace_all(a.arg(0), s, t));
    case Term::Kind::Add: return Term::add(replace_all(a.arg(0), s, t), replace_all(a.arg(1), s, t));
    case Term::Kind::Mul: return Term::mul(replace_all(a.arg(0), s, t), replace_all(a.arg(1), s, t));
    case Term::Kind::Apply: {
      std::vector<Term> args;
      for (const auto& x : a.args()) args.push_back(replace_all(x, s, t));
      return Term::apply(a.name(), args);
    }
    default: return a;
  }
}

Formula replace_all(const Formula& a, const Term& s, const Term& t) {
  std::vector<Term> ts;
  for (const auto& x : a.terms()) ts.push_back(replace_all(x, s, t));
  switch (a.kind()) {
    case Formula::Kind::Eq: return Formula::eq(ts[0], ts[1]);
    case Formula::Kind::Less: return Formula::less(ts[0], ts[1]);
    case Formula::Kind::In: return Formula::in(ts[0], ts[1]);
    default: return Formula::rel(a.symbol(), ts);
  }
}

}  // namespace

DerivationEnumerator::DerivationEnumerator(std::vector<Sentence> premises) : premises_(std::move(premises)) {
  std::vector<std::size_t> fresh;
  for (std::size_t i = 0; i < premises_.size(); ++i)
    add(premises_[i], Step::Rule::Premise, Schema::Weaken, i, 0, fresh);
  close_under_mp(fresh);
  std::set<std::size_t> seen;
  std::vector<std::size_t> out;
  // Premises first, in the given order, then their modus ponens closure.
  for (std::size_t i = 0; i < premises_.size(); ++i) {
    std::size_t id = index_.at(premises_[i]);
    if (is_closed(premises_[i]) && seen.insert(id).second) out.push_back(id);
  }
  std::vector<std::size_t> rest;
  for (std::size_t id : fresh)
    if (is_closed(nodes_[id].formula) && !seen.count(id)) rest.push_back(id);
  std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
    return by_size_then_text(nodes_[a].formula, nodes_[b].formula);
  });
  out.insert(out.end(), rest.begin(), rest.end());
  emitted_ = out;
  stage_end_.push_back(emitted_.size());
  stage_cost_.push_back(premises_.size() + fresh.size());
}

std::size_t DerivationEnumerator::add(const Formula& f, Step::Rule rule, Schema schema, std::size_t a,
                                      std::size_t b, std::vector<std::size_t>& fresh) {
  if (auto it = index_.find(f); it != index_.end()) return it->second;
  std::size_t id = nodes_.size();
  nodes_.push_back({f, rule, schema, a, b});
  index_.emplace(f, id);
  fresh.push_back(id);
  return id;
}

void DerivationEnumerator::close_under_mp(std::vector<std::size_t>& fresh) {
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    std::size_t id = fresh[i];
    Formula f = nodes_[id].formula;
    if (f.kind() == Formula::Kind::Imp) {
      if (auto it = index_.find(f.sub(0)); it != index_.end())
        add(f.sub(1), Step::Rule::ModusPonens, Schema::Weaken, it->second, id, fresh);
      else
        waiting_[f.sub(0)].push_back(id);
    }
    if (auto w = waiting_.find(f); w != waiting_.end()) {
      auto majors = std::move(w->second);
      waiting_.erase(w);
      for (std::size_t major : majors)
        add(nodes_[major].formula.sub(1), Step::Rule::ModusPonens, Schema::Weaken, id, major, fresh);
    }
  }
}

void DerivationEnumerator::run_stage() {
  const std::size_t k = stage_end_.size();
  unsigned long cost = 0;
  std::vector<std::size_t> fresh;

  std::set<Formula> seeds, closed_subs;
  std::set<Term> term_set;
  for (const auto& p : premises_) collect(p, seeds, closed_subs, term_set);
  for (std::size_t j = 0; j < k; ++j) term_set.insert(numeral(j));
  std::vector<Term> terms(term_set.begin(), term_set.end());

  std::set<Formula> base_set;
  base_set.insert(Formula::eq(Term::zero(), Term::zero()));
  for (const auto& s : seeds) instances(s, terms, base_set);
  std::vector<Formula> base = sorted(base_set);

  std::set<Formula> meta_set(closed_subs);
  meta_set.insert(base.begin(), base.end());
  std::vector<Formula> metas = sorted(meta_set);
  if (metas.size() > 8 + 2 * k) metas.erase(metas.begin() + static_cast<long>(8 + 2 * k), metas.end());

  auto axiom = [&](const Formula& f, Schema s) {
    ++cost;
    add(f, Step::Rule::Axiom, s, 0, 0, fresh);
  };
  using F = Formula;
  for (const auto& a : metas)
    for (const auto& b : metas) {
      axiom(F::imp(a, F::imp(b, a)), Schema::Weaken);
      axiom(F::imp(F::imp(F::neg(b), F::neg(a)), F::imp(a, b)), Schema::Contrapose);
      axiom(F::imp(F::conj(a, b), a), Schema::AndLeft);
      axiom(F::imp(F::conj(a, b), b), Schema::AndRight);
      axiom(F::imp(a, F::imp(b, F::conj(a, b))), Schema::AndIntro);
      axiom(F::imp(a, F::disj(a, b)), Schema::OrLeft);
      axiom(F::imp(b, F::disj(a, b)), Schema::OrRight);
      for (const auto& c : metas) {
        axiom(F::imp(F::imp(a, F::imp(b, c)), F::imp(F::imp(a, b), F::imp(a, c))), Schema::Distribute);
        axiom(F::imp(F::imp(a, c), F::imp(F::imp(b, c), F::imp(F::disj(a, b), c))), Schema::OrElim);
      }
    }
  for (const auto& q : base) {
    using Q = Formula::Kind;
    const std::string& x = q.is_quantifier() ? q.var() : std::string();
    switch (q.kind()) {
      case Q::Forall:
        for (const auto& t : terms) axiom(F::imp(q, substitute(q.body(), x, t)), Schema::Instantiate);
        if (q.body().kind() == Q::Imp && !free_vars(q.body().sub(0)).count(x))
          axiom(F::imp(q, F::imp(q.body().sub(0), F::forall(x, q.body().sub(1)))), Schema::ForallOverImp);
        break;
      case Q::Exists:
        for (const auto& t : terms) axiom(F::imp(substitute(q.body(), x, t), q), Schema::ExistsIntro);
        axiom(F::imp(q, F::neg(F::forall(x, F::neg(q.body())))), Schema::ExistsToForall);
        axiom(F::imp(F::neg(F::forall(x, F::neg(q.body()))), q), Schema::ForallToExists);
        break;
      case Q::ForallLt:
      case Q::ExistsLt: {
        if (free_vars(q.bound()).count(x)) break;
        bool all = q.kind() == Q::ForallLt;
        Formula guard = F::less(Term::var(x), q.bound());
        Formula open = all ? F::forall(x, F::imp(guard, q.body())) : F::exists(x, F::conj(guard, q.body()));
        axiom(F::imp(q, open), all ? Schema::BoundedForallOut : Schema::BoundedExistsOut);
        axiom(F::imp(open, q), all ? Schema::BoundedForallIn : Schema::BoundedExistsIn);
        break;
      }
      default:
        for (const auto& s : terms)
          for (const auto& t : terms)
            if (s != t) axiom(F::imp(F::eq(s, t), F::imp(q, replace_all(q, s, t))), Schema::EqSubst);
        break;
    }
  }
  for (const auto& t : terms) axiom(F::eq(t, t), Schema::EqRefl);

  // One block of brute-force candidates: each natural read as a list of formula codes.
  for (unsigned long c = kBruteBlock * (k - 1); c < kBruteBlock * k; ++c) {
    ++cost;
    auto codes = sorts::split_list(Natural(c));
    if (!codes || codes->empty()) continue;
    std::vector<Formula> lines;
    for (const auto& code : *codes) {
      auto f = decode_formula(code);
      if (!f) break;
      lines.push_back(*f);
    }
    if (lines.size() != codes->size()) continue;
    auto proof = justify(lines, premises_);
    if (!proof) continue;
    std::vector<std::size_t> ids;
    for (const auto& st : *proof) {
      std::size_t a = st.a, b = st.b;
      if (st.rule == Step::Rule::ModusPonens) a = ids[a], b = ids[b];
      if (st.rule == Step::Rule::Generalize) a = ids[a];
      ids.push_back(add(st.formula, st.rule, st.schema, a, b, fresh));
    }
  }

  std::size_t before = fresh.size();
  close_under_mp(fresh);
  cost += fresh.size() - before;

  std::vector<std::size_t> out;
  for (std::size_t id : fresh)
    if (is_closed(nodes_[id].formula)) out.push_back(id);
  std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    return by_size_then_text(nodes_[a].formula, nodes_[b].formula);
  });
  emitted_.insert(emitted_.end(), out.begin(), out.end());
  stage_end_.push_back(emitted_.size());
  stage_cost_.push_back(cost);
}

Proof DerivationEnumerator::proof_of(std::size_t id) const {
  std::map<std::size_t, std::size_t> line_of;
  Proof proof;
  std::function<std::size_t(std::size_t)> visit = [&](std::size_t n) -> std::size_t {
    if (auto it = line_of.find(n); it != line_of.end()) return it->second;
    const Node& node = nodes_[n];
    Step st{node.formula, node.rule, node.schema, node.a, node.b};
    if (node.rule == Step::Rule::ModusPonens) {
      st.a = visit(node.a);
      st.b = visit(node.b);
    } else if (node.rule == Step::Rule::Generalize) {
      st.a = visit(node.a);
    }
    proof.push_back(st);
    return line_of[n] = proof.size() - 1;
  };
  visit(id);
  return proof;
}

std::size_t DerivationEnumerator::stage_of(std::size_t n) {
  std::lock_guard lock(mutex_);
  while (emitted_.size() <= n) run_stage();
  return std::upper_bound(stage_end_.begin(), stage_end_.end(), n) - stage_end_.begin();
}

Derived DerivationEnumerator::at(std::size_t n, Fuel* fuel) {
  std::lock_guard lock(mutex_);
  Natural spent = 0;
  std::size_t stage = 0;
  for (;; ++stage) {
    while (stage_end_.size() <= stage) {
      if (fuel && spent > fuel->left()) fuel->charge(spent);
      run_stage();
    }
    spent += stage_cost_[stage];
    if (stage_end_[stage] > n) break;
  }
  if (fuel) fuel->charge(spent);
  std::size_t id = emitted_[n];
  return {nodes_[id].formula, proof_of(id)};
}

std::optional<std::size_t> DerivationEnumerator::position_of(const Sentence& s, std::size_t max_stage) {
  std::lock_guard lock(mutex_);
  while (stage_end_.size() <= max_stage) run_stage();
  for (std::size_t i = 0; i < stage_end_[max_stage]; ++i)
    if (nodes_[emitted_[i]].formula == s) return i;
  return std::nullopt;
}

std::shared_ptr<DerivationEnumerator> enumerator_for(const std::vector<Sentence>& premises) {
  static std::mutex m;
  static std::map<std::vector<Sentence>, std::shared_ptr<DerivationEnumerator>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[premises];
  if (!slot) slot = std::make_shared<DerivationEnumerator>(premises);
  return slot;
}

Derived phi_closure(const std::vector<Sentence>& premises, std::size_t n, Fuel* fuel) {
  return enumerator_for(premises)->at(n, fuel);
}

}  // namespace tc::fol
