#include "tc/fol/encoding.hpp"

#include <stdexcept>

#include "tc/sorts.hpp"

namespace tc::fol {

namespace {

const std::string kAlphabet = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_'";

enum Token : unsigned long {
  kZero = 0, kSucc, kAdd, kMul, kEq, kLess, kIn, kNot, kAnd, kOr, kImp,
  kForall, kExists, kForallLt, kExistsLt, kRel, kFn, kUnused, kVarBase
};

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

void emit(const Term& t, std::vector<Natural>& out) {
  switch (t.kind()) {
    case Term::Kind::Var: out.push_back(kVarBase + name_number(t.name())); return;
    case Term::Kind::Zero: out.push_back(kZero); return;
    case Term::Kind::Succ: out.push_back(kSucc); break;
    case Term::Kind::Add: out.push_back(kAdd); break;
    case Term::Kind::Mul: out.push_back(kMul); break;
    case Term::Kind::Apply:
      out.push_back(kFn);
      out.push_back(name_number(t.name()));
      out.push_back(nat(t.args().size()));
      break;
  }
  for (const auto& a : t.args()) emit(a, out);
}

void emit(const Formula& f, std::vector<Natural>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Less:
    case K::In:
      out.push_back(f.kind() == K::Eq ? kEq : f.kind() == K::Less ? kLess : kIn);
      emit(f.terms()[0], out);
      emit(f.terms()[1], out);
      return;
    case K::Rel:
      out.push_back(kRel);
      out.push_back(name_number(f.symbol()));
      out.push_back(nat(f.terms().size()));
      for (const auto& t : f.terms()) emit(t, out);
      return;
    case K::Not:
      out.push_back(kNot);
      emit(f.sub(0), out);
      return;
    case K::And:
    case K::Or:
    case K::Imp:
      out.push_back(f.kind() == K::And ? kAnd : f.kind() == K::Or ? kOr : kImp);
      emit(f.sub(0), out);
      emit(f.sub(1), out);
      return;
    case K::Forall:
    case K::Exists:
      out.push_back(f.kind() == K::Forall ? kForall : kExists);
      out.push_back(name_number(f.var()));
      emit(f.body(), out);
      return;
    case K::ForallLt:
    case K::ExistsLt:
      out.push_back(f.kind() == K::ForallLt ? kForallLt : kExistsLt);
      out.push_back(name_number(f.var()));
      emit(f.bound(), out);
      emit(f.body(), out);
      return;
  }
}

class TokenParser {
 public:
  explicit TokenParser(const std::vector<Natural>& t) : toks_(t) {}

  std::optional<Formula> formula(int depth = 0) {
    if (depth > 100000) return std::nullopt;
    auto t = next();
    if (!t) return std::nullopt;
    switch (*t) {
      case kEq:
      case kLess:
      case kIn: {
        auto a = term(depth + 1);
        if (!a) return std::nullopt;
        auto b = term(depth + 1);
        if (!b) return std::nullopt;
        if (*t == kEq) return Formula::eq(*a, *b);
        if (*t == kLess) return Formula::less(*a, *b);
        return Formula::in(*a, *b);
      }
      case kRel: {
        auto name = next_name();
        auto n = next();
        if (!name || !n || *n > toks_.size()) return std::nullopt;
        std::vector<Term> args;
        for (unsigned long i = 0; i < *n; ++i) {
          auto a = term(depth + 1);
          if (!a) return std::nullopt;
          args.push_back(*a);
        }
        return Formula::rel(*name, std::move(args));
      }
      case kNot: {
        auto a = formula(depth + 1);
        if (!a) return std::nullopt;
        return Formula::neg(*a);
      }
      case kAnd:
      case kOr:
      case kImp: {
        auto a = formula(depth + 1);
        if (!a) return std::nullopt;
        auto b = formula(depth + 1);
        if (!b) return std::nullopt;
        if (*t == kAnd) return Formula::conj(*a, *b);
        if (*t == kOr) return Formula::disj(*a, *b);
        return Formula::imp(*a, *b);
      }
      case kForall:
      case kExists: {
        auto v = next_name();
        if (!v) return std::nullopt;
        auto body = formula(depth + 1);
        if (!body) return std::nullopt;
        return *t == kForall ? Formula::forall(*v, *body) : Formula::exists(*v, *body);
      }
      case kForallLt:
      case kExistsLt: {
        auto v = next_name();
        if (!v) return std::nullopt;
        auto bound = term(depth + 1);
        if (!bound) return std::nullopt;
        auto body = formula(depth + 1);
        if (!body) return std::nullopt;
        return *t == kForallLt ? Formula::forall_lt(*v, *bound, *body) : Formula::exists_lt(*v, *bound, *body);
      }
      default: return std::nullopt;
    }
  }

  std::optional<Term> term(int depth) {
    if (depth > 100000 || pos_ >= toks_.size()) return std::nullopt;
    const Natural& raw = toks_[pos_++];
    if (raw >= kVarBase) {
      auto name = name_of(raw - kVarBase);
      if (!name) return std::nullopt;
      return Term::var(*name);
    }
    switch (raw.get_ui()) {
      case kZero: return Term::zero();
      case kSucc: {
        auto a = term(depth + 1);
        if (!a) return std::nullopt;
        return Term::succ(*a);
      }
      case kAdd:
      case kMul: {
        auto a = term(depth + 1);
        if (!a) return std::nullopt;
        auto b = term(depth + 1);
        if (!b) return std::nullopt;
        return raw == kAdd ? Term::add(*a, *b) : Term::mul(*a, *b);
      }
      case kFn: {
        auto name = next_name();
        auto n = next();
        if (!name || !n || *n > toks_.size()) return std::nullopt;
        std::vector<Term> args;
        for (unsigned long i = 0; i < *n; ++i) {
          auto a = term(depth + 1);
          if (!a) return std::nullopt;
          args.push_back(*a);
        }
        return Term::apply(*name, std::move(args));
      }
      default: return std::nullopt;
    }
  }

  bool done() const { return pos_ == toks_.size(); }

 private:
  std::optional<unsigned long> next() {
    if (pos_ >= toks_.size() || !toks_[pos_].fits_ulong_p()) return std::nullopt;
    return toks_[pos_++].get_ui();
  }
  std::optional<std::string> next_name() {
    if (pos_ >= toks_.size()) return std::nullopt;
    return name_of(toks_[pos_++]);
  }

  const std::vector<Natural>& toks_;
  std::size_t pos_ = 0;
};

bool arithmetic_term(const Term& t) {
  if (t.kind() == Term::Kind::Apply) return false;
  for (const auto& a : t.args())
    if (!arithmetic_term(a)) return false;
  return true;
}

bool f0_shape(const Formula& f, std::size_t depth) {
  using K = Formula::Kind;
  auto terms_ok = [&] {
    for (const auto& t : f.terms()) {
      if (!arithmetic_term(t)) return false;
      for (const auto& v : free_vars(t)) {
        if (v == kF0Var) continue;
        bool bound_above = false;
        for (std::size_t d = 0; d < depth; ++d) bound_above = bound_above || v == f0_bound_name(d);
        if (!bound_above) return false;
      }
    }
    return true;
  };
  switch (f.kind()) {
    case K::Eq:
    case K::Less: return terms_ok();
    case K::In:
    case K::Rel:
    case K::Forall:
    case K::Exists: return false;
    case K::Not: return f0_shape(f.sub(0), depth);
    case K::And:
    case K::Or:
    case K::Imp: return f0_shape(f.sub(0), depth) && f0_shape(f.sub(1), depth);
    case K::ForallLt:
    case K::ExistsLt:
      return f.var() == f0_bound_name(depth) && terms_ok() && f0_shape(f.body(), depth + 1);
  }
  return false;
}

}  // namespace

Natural name_number(const std::string& name) {
  Natural k = 0;
  for (char c : name) {
    auto pos = kAlphabet.find(c);
    if (pos == std::string::npos) throw std::invalid_argument("bad identifier character in '" + name + "'");
    k = k * 64 + (pos + 1);
  }
  return k;
}

std::optional<std::string> name_of(const Natural& k) {
  if (k <= 0 || mpz_sizeinbase(k.get_mpz_t(), 2) > 6 * 64) return std::nullopt;
  std::string out;
  Natural rest = k;
  while (rest > 0) {
    Natural digit = (rest - 1) % 64;
    out.insert(out.begin(), kAlphabet[digit.get_ui()]);
    rest = (rest - 1) / 64;
  }
  if (!is_letter(out[0])) return std::nullopt;
  return out;
}

std::vector<Natural> tokenize(const Formula& f) {
  std::vector<Natural> out;
  emit(f, out);
  return out;
}

std::optional<Formula> parse_tokens(const std::vector<Natural>& tokens) {
  TokenParser p(tokens);
  auto f = p.formula();
  if (!f || !p.done()) return std::nullopt;
  return f;
}

Natural formula_code(const Formula& f) {
  // Product tree keeps multiplication cost near-linear in the result size.
  auto toks = tokenize(f);
  std::vector<Natural> factors(toks.size());
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (!toks[i].fits_ulong_p() || toks[i] > (1UL << 20)) throw std::overflow_error("identifier too long to encode");
    mpz_ui_pow_ui(factors[i].get_mpz_t(), nth_prime(i), toks[i].get_ui() + 1);
  }
  if (factors.empty()) return 1;
  while (factors.size() > 1) {
    std::vector<Natural> next;
    for (std::size_t i = 0; i + 1 < factors.size(); i += 2) next.push_back(factors[i] * factors[i + 1]);
    if (factors.size() % 2) next.push_back(factors.back());
    factors.swap(next);
  }
  return factors[0];
}

std::optional<Formula> decode_formula(const Natural& code) {
  auto toks = sorts::split_list(code);
  if (!toks) return std::nullopt;
  return parse_tokens(*toks);
}

bool is_formula_code(const Natural& code) {
  auto f = decode_formula(code);
  return f && is_closed(*f);
}

std::string f0_bound_name(std::size_t depth) { return "k" + std::to_string(depth); }

bool is_f0(const Formula& f) { return f0_shape(f, 0); }

bool is_f0_code(const Natural& code) {
  auto f = decode_formula(code);
  return f && is_f0(*f);
}

}  // namespace tc::fol
