#include "tc/sorts.hpp"

#include <stdexcept>

#include "tc/code.hpp"
#include "tc/diophantine.hpp"
#include "tc/fol/encoding.hpp"

namespace tc::sorts {

namespace {

struct Compound {
  Tag tag;
  Natural payload;
};

std::optional<Compound> as_compound(const Natural& s) {
  if (s < 0 || mpz_even_p(s.get_mpz_t())) return std::nullopt;
  auto tp = unpair((s - 1) / 2);
  if (!tp || tp->first > 3) return std::nullopt;
  return Compound{static_cast<Tag>(tp->first.get_ui()), tp->second};
}

// Powers of a single prime: n = p^(k+1), returns k.
std::optional<Natural> shifted_power(Natural n, unsigned long p) {
  if (n <= 1) return std::nullopt;
  unsigned long k = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++k;
  }
  if (n != 1) return std::nullopt;
  return Natural(k - 1);
}

}  // namespace

bool is_sort(const Natural& s) {
  if (s < 0) return false;
  if (mpz_even_p(s.get_mpz_t())) return s <= 2 * static_cast<unsigned long>(Atom::F0);
  auto c = as_compound(s);
  if (!c) return false;
  if (c->tag == Tag::List) return is_sort(c->payload);
  auto ab = unpair(c->payload);
  return ab && is_sort(ab->first) && is_sort(ab->second);
}

bool contains(const Natural& sort, const Natural& x) {
  if (x < 0) return false;
  if (mpz_even_p(sort.get_mpz_t())) {
    if (sort > 2 * static_cast<unsigned long>(Atom::F0)) return false;
    switch (static_cast<Atom>(sort.get_ui() / 2)) {
      case Atom::Nat: return true;
      case Atom::Sign: return x <= 1;
      case Atom::Formula: return fol::is_formula_code(x);
      case Atom::Code: return is_valid_code(x);
      case Atom::Pol: return dio::is_pol_code(x);
      case Atom::F0: return fol::is_f0_code(x);
    }
    return false;
  }
  auto c = as_compound(sort);
  if (!c) return false;
  if (c->tag == Tag::List) {
    auto elems = split_list(x);
    if (!elems) return false;
    for (const auto& e : *elems)
      if (!contains(c->payload, e)) return false;
    return true;
  }
  auto ab = unpair(c->payload);
  if (!ab) return false;
  switch (c->tag) {
    case Tag::Pairing: {
      auto p = unpair(x);
      return p && contains(ab->first, p->first) && contains(ab->second, p->second);
    }
    case Tag::PrimeProduct: {
      auto p = split_prime_product(x);
      return p && contains(ab->first, p->first) && contains(ab->second, p->second);
    }
    case Tag::Sum: {
      if (auto k = shifted_power(x, 2)) return contains(ab->first, *k);
      if (auto k = shifted_power(x, 3)) return contains(ab->second, *k);
      return false;
    }
    default: return false;
  }
}

std::optional<std::pair<Natural, Natural>> split_prime_product(const Natural& n) {
  if (n <= 0) return std::nullopt;
  Natural rest = n;
  unsigned long a = 0, b = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 2);
    ++a;
  }
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 3)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 3);
    ++b;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(Natural(a), Natural(b));
}

std::optional<std::vector<Natural>> split_list(const Natural& n) {
  if (n <= 0) return std::nullopt;
  std::vector<Natural> out;
  Natural rest = n;
  for (std::size_t i = 0; rest != 1; ++i) {
    unsigned long p = nth_prime(i);
    Natural prime = p;
    unsigned long k = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
    if (k == 0) return std::nullopt;
    out.push_back(Natural(k - 1));
  }
  return out;
}

Natural join_list(const std::vector<Natural>& elements) {
  Natural out = 1;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!elements[i].fits_ulong_p()) throw std::overflow_error("list element too large for a prime-power code");
    Natural f;
    mpz_ui_pow_ui(f.get_mpz_t(), nth_prime(i), elements[i].get_ui() + 1);
    out *= f;
  }
  return out;
}

}  // namespace tc::sorts
