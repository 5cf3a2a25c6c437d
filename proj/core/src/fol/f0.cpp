#include "tc/fol/f0.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "tc/fol/arith.hpp"
#include "tc/fol/encoding.hpp"

namespace tc::fol {

namespace {

std::size_t term_weight(const Term& t) {
  std::size_t w = 1;
  for (const auto& a : t.args()) w += term_weight(a);
  return w;
}

// Exact-weight generation, memoised by (weight, depth). Depth d allows the
// variables m, k0..k(d-1) in terms.
class Generator {
 public:
  const std::vector<Term>& terms(std::size_t w, std::size_t d) {
    auto key = std::make_pair(w, d);
    if (auto it = terms_.find(key); it != terms_.end()) return it->second;
    std::vector<Term> out;
    if (w == 1) {
      out.push_back(Term::zero());
      out.push_back(Term::var(kF0Var));
      for (std::size_t i = 0; i < d; ++i) out.push_back(Term::var(f0_bound_name(i)));
    } else {
      for (const auto& t : terms(w - 1, d)) out.push_back(Term::succ(t));
      for (std::size_t l = 1; l + 1 < w; ++l)
        for (const auto& a : terms(l, d))
          for (const auto& b : terms(w - 1 - l, d)) {
            out.push_back(Term::add(a, b));
            out.push_back(Term::mul(a, b));
          }
    }
    return terms_[key] = std::move(out);
  }

  const std::vector<Formula>& formulas(std::size_t w, std::size_t d) {
    auto key = std::make_pair(w, d);
    if (auto it = formulas_.find(key); it != formulas_.end()) return it->second;
    std::vector<Formula> out;
    using F = Formula;
    if (w >= 3) {
      for (std::size_t l = 1; l + 1 < w; ++l)
        for (const auto& a : terms(l, d))
          for (const auto& b : terms(w - 1 - l, d)) {
            out.push_back(F::eq(a, b));
            out.push_back(F::less(a, b));
          }
      for (const auto& g : formulas(w - 1, d)) out.push_back(F::neg(g));
      for (std::size_t l = 3; l + 1 < w; ++l)
        for (const auto& a : formulas(l, d))
          for (const auto& b : formulas(w - 1 - l, d)) {
            out.push_back(F::conj(a, b));
            out.push_back(F::disj(a, b));
            out.push_back(F::imp(a, b));
          }
      std::string k = f0_bound_name(d);
      for (std::size_t l = 1; l + 1 < w; ++l)
        for (const auto& bound : terms(l, d))
          for (const auto& body : formulas(w - 1 - l, d + 1)) {
            out.push_back(F::forall_lt(k, bound, body));
            out.push_back(F::exists_lt(k, bound, body));
          }
    }
    return formulas_[key] = std::move(out);
  }

  const Formula& at(std::size_t index) {
    while (flat_.size() <= index) {
      ++weight_;
      const auto& next = formulas(weight_, 0);
      flat_.insert(flat_.end(), next.begin(), next.end());
      class_start_.push_back(flat_.size());
    }
    return flat_[index];
  }

  std::optional<std::size_t> index_of(const Formula& f) {
    std::size_t w = f0_weight(f);
    while (weight_ < w) at(flat_.size());
    std::size_t lo = w >= 2 ? class_start_[w - 2] : 0;
    std::size_t hi = class_start_[w - 1];
    for (std::size_t i = lo; i < hi; ++i)
      if (flat_[i] == f) return i;
    return std::nullopt;
  }

 private:
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> terms_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Formula>> formulas_;
  std::vector<Formula> flat_;
  std::vector<std::size_t> class_start_;  // flat_ size after each weight
  std::size_t weight_ = 0;
};

Generator& generator() {
  static Generator g;
  return g;
}

std::mutex& generator_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::size_t f0_weight(const Formula& f) {
  std::size_t w = 1;
  for (const auto& t : f.terms()) w += term_weight(t);
  if (f.is_atomic()) return w;
  std::size_t n = f.is_quantifier() || f.kind() == Formula::Kind::Not ? 1 : 2;
  for (std::size_t i = 0; i < n; ++i) w += f0_weight(f.sub(i));
  return w;
}

Formula f0_at(std::size_t index) {
  std::lock_guard lock(generator_mutex());
  return generator().at(index);
}

std::optional<std::size_t> f0_index(const Formula& f) {
  if (!is_f0(f)) return std::nullopt;
  std::lock_guard lock(generator_mutex());
  return generator().index_of(f);
}

bool f0_holds(const Formula& phi, const Natural& m) {
  return eval_sigma0(substitute(phi, kF0Var, numeral(m)));
}

}  // namespace tc::fol
