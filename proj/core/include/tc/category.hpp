#pragma once

// Encodings as objects and computable maps between them.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tc/code.hpp"
#include "tc/natural.hpp"
#include "tc/programs.hpp"
#include "tc/sorts.hpp"
#include "tc/universal.hpp"

namespace tc::cat {

/// Injective total map into N with a decidable image and an inverse on it.
/// `sort` describes the image and is what boundary checks compare.
template <class T>
struct Encoding {
  Natural sort;
  std::function<Natural(const T&)> encode;
  std::function<std::optional<T>(const Natural&)> decode;

  bool contains(const Natural& n) const { return sorts::contains(sort, n); }
};

Encoding<Natural> nat_encoding();
Encoding<bool> sign_encoding();

template <class A, class B>
Encoding<std::pair<A, B>> product_encoding(const Encoding<A>& ea, const Encoding<B>& eb) {
  Encoding<std::pair<A, B>> e;
  e.sort = sorts::prime_product(ea.sort, eb.sort);
  e.encode = [ea, eb](const std::pair<A, B>& x) {
    Natural a = ea.encode(x.first), b = eb.encode(x.second);
    if (!a.fits_ulong_p() || !b.fits_ulong_p()) throw std::overflow_error("component too large for 2^a 3^b");
    Natural out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, a.get_ui());
    Natural three;
    mpz_ui_pow_ui(three.get_mpz_t(), 3, b.get_ui());
    return Natural(out * three);
  };
  e.decode = [ea, eb](const Natural& n) -> std::optional<std::pair<A, B>> {
    auto ab = sorts::split_prime_product(n);
    if (!ab) return std::nullopt;
    auto a = ea.decode(ab->first);
    auto b = eb.decode(ab->second);
    if (!a || !b) return std::nullopt;
    return std::make_pair(*a, *b);
  };
  return e;
}

/// Shifted Cantor pairing, the layout used inside machines.
template <class A, class B>
Encoding<std::pair<A, B>> pairing_encoding(const Encoding<A>& ea, const Encoding<B>& eb) {
  Encoding<std::pair<A, B>> e;
  e.sort = sorts::pairing(ea.sort, eb.sort);
  e.encode = [ea, eb](const std::pair<A, B>& x) { return pair(ea.encode(x.first), eb.encode(x.second)); };
  e.decode = [ea, eb](const Natural& n) -> std::optional<std::pair<A, B>> {
    auto ab = unpair(n);
    if (!ab) return std::nullopt;
    auto a = ea.decode(ab->first);
    auto b = eb.decode(ab->second);
    if (!a || !b) return std::nullopt;
    return std::make_pair(*a, *b);
  };
  return e;
}

/// left x -> 2^(e(x)+1), right y -> 3^(e(y)+1).
template <class A, class B>
Encoding<std::variant<A, B>> sum_encoding(const Encoding<A>& ea, const Encoding<B>& eb) {
  Encoding<std::variant<A, B>> e;
  e.sort = sorts::sum(ea.sort, eb.sort);
  e.encode = [ea, eb](const std::variant<A, B>& x) {
    bool left = x.index() == 0;
    Natural k = left ? ea.encode(std::get<0>(x)) : eb.encode(std::get<1>(x));
    if (!k.fits_ulong_p()) throw std::overflow_error("summand too large");
    Natural out;
    mpz_ui_pow_ui(out.get_mpz_t(), left ? 2 : 3, k.get_ui() + 1);
    return out;
  };
  e.decode = [ea, eb](const Natural& n) -> std::optional<std::variant<A, B>> {
    auto ab = sorts::split_prime_product(n);
    if (!ab) return std::nullopt;
    if (ab->first > 0 && ab->second == 0) {
      auto a = ea.decode(ab->first - 1);
      if (!a) return std::nullopt;
      return std::variant<A, B>(std::in_place_index<0>, *a);
    }
    if (ab->first == 0 && ab->second > 0) {
      auto b = eb.decode(ab->second - 1);
      if (!b) return std::nullopt;
      return std::variant<A, B>(std::in_place_index<1>, *b);
    }
    return std::nullopt;
  };
  return e;
}

/// [] -> 1, l -> prod p_i^(e(l_i)+1).
template <class A>
Encoding<std::vector<A>> list_encoding(const Encoding<A>& ea) {
  Encoding<std::vector<A>> e;
  e.sort = sorts::list(ea.sort);
  e.encode = [ea](const std::vector<A>& l) {
    std::vector<Natural> codes;
    for (const auto& x : l) codes.push_back(ea.encode(x));
    return sorts::join_list(codes);
  };
  e.decode = [ea](const Natural& n) -> std::optional<std::vector<A>> {
    auto codes = sorts::split_list(n);
    if (!codes) return std::nullopt;
    std::vector<A> out;
    for (const auto& c : *codes) {
      auto x = ea.decode(c);
      if (!x) return std::nullopt;
      out.push_back(*x);
    }
    return out;
  };
  return e;
}

class BoundaryMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Status { Defined, Undefined, Exhausted };

template <class B>
struct Applied {
  Status status = Status::Exhausted;
  std::optional<B> value;
};

template <class A, class B>
struct ComputableMap {
  Encoding<A> source;
  Encoding<B> target;
  MachineCode code;

  Applied<B> apply(const A& x, const Natural& fuel) const {
    Fuel f(fuel);
    try {
      Natural v = evaluate(code, source.encode(x), f);
      auto y = target.decode(v);
      if (!y) return {Status::Undefined, std::nullopt};
      return {Status::Defined, std::move(y)};
    } catch (const Diverged&) {
      return {Status::Undefined, std::nullopt};
    } catch (const FuelExhausted&) {
      return {Status::Exhausted, std::nullopt};
    }
  }
};

namespace detail {
inline void check_boundary(const Natural& a, const Natural& b) {
  if (a != b) throw BoundaryMismatch("encodings at the glued boundary differ");
}
inline MachineCode node(NodeKind k, std::vector<Natural> args) { return encode_node({k, std::move(args)}); }
}  // namespace detail

template <class A>
ComputableMap<A, A> identity(const Encoding<A>& e) {
  return {e, e, encode_program(programs::identity())};
}

template <class A, class B, class C>
ComputableMap<A, C> compose(const ComputableMap<B, C>& g, const ComputableMap<A, B>& f) {
  detail::check_boundary(f.target.sort, g.source.sort);
  return {f.source, g.target, detail::node(NodeKind::Compose, {g.code.value, f.code.value})};
}

/// a -> (f(a), g(a)) in the 2^a 3^b product.
template <class A, class B, class C>
ComputableMap<A, std::pair<B, C>> pair_maps(const ComputableMap<A, B>& f, const ComputableMap<A, C>& g) {
  detail::check_boundary(f.source.sort, g.source.sort);
  return {f.source, product_encoding(f.target, g.target),
          detail::node(NodeKind::PairMaps,
                       {f.code.value, g.code.value, Natural(static_cast<unsigned>(ProductScheme::PrimePower))})};
}

/// (a, b) -> (f(a), g(b)).
template <class A, class B, class C, class D>
ComputableMap<std::pair<A, C>, std::pair<B, D>> parallel(const ComputableMap<A, B>& f,
                                                         const ComputableMap<C, D>& g) {
  return {product_encoding(f.source, g.source), product_encoding(f.target, g.target),
          detail::node(NodeKind::Parallel,
                       {f.code.value, g.code.value, Natural(static_cast<unsigned>(ProductScheme::PrimePower))})};
}

template <class A, class B>
ComputableMap<std::pair<A, B>, A> project_first(const Encoding<A>& ea, const Encoding<B>& eb) {
  return {product_encoding(ea, eb), ea,
          detail::node(NodeKind::Project, {0, Natural(static_cast<unsigned>(ProductScheme::PrimePower))})};
}

template <class A, class B>
ComputableMap<std::pair<A, B>, B> project_second(const Encoding<A>& ea, const Encoding<B>& eb) {
  return {product_encoding(ea, eb), eb,
          detail::node(NodeKind::Project, {1, Natural(static_cast<unsigned>(ProductScheme::PrimePower))})};
}

/// e^{-1}: N -> A, defined exactly on the image of e.
template <class A>
ComputableMap<Natural, A> inverse_map(const Encoding<A>& e) {
  return {nat_encoding(), e,
          detail::node(NodeKind::Filter, {encode_program(programs::identity()).value, e.sort})};
}

/// L(f): elementwise on prime-power lists.
template <class A, class B>
ComputableMap<std::vector<A>, std::vector<B>> map_list(const ComputableMap<A, B>& f) {
  return {list_encoding(f.source), list_encoding(f.target), detail::node(NodeKind::MapList, {f.code.value})};
}

/// LU(code): L(N) -> L(N).
ComputableMap<std::vector<Natural>, std::vector<Natural>> lu(const MachineCode& code);

/// l1 followed by l2.
template <class A>
std::vector<A> list_union(const std::vector<A>& l1, const std::vector<A>& l2) {
  std::vector<A> out = l1;
  out.insert(out.end(), l2.begin(), l2.end());
  return out;
}

/// P(l, i): the i'th element; nullopt past the end.
template <class A>
std::optional<A> list_element(const std::vector<A>& l, std::size_t i) {
  if (i >= l.size()) return std::nullopt;
  return l[i];
}

/// P and length on codes, through the list encoding.
std::optional<Natural> list_element_code(const Natural& list_code, const Natural& i);
std::optional<Natural> list_length_code(const Natural& list_code);

}  // namespace tc::cat
