#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tc {

/// Arbitrary-precision natural number. Every code in the library is one of these.
using Natural = mpz_class;

inline Natural nat(std::uint64_t v) { return Natural(static_cast<unsigned long>(v)); }

std::string to_string(const Natural& n);
std::optional<Natural> parse_natural(const std::string& text);

/// Cantor pairing shifted by one: pair(a, b) = (a+b)(a+b+1)/2 + b + 1.
/// Zero is never a pair code; it is reserved as the totalizer sentinel.
Natural pair(const Natural& a, const Natural& b);
/// Inverse of pair(); nullopt on 0.
std::optional<std::pair<Natural, Natural>> unpair(const Natural& code);

/// Plain (unshifted) Cantor pairing, a bijection N x N -> N. Used for dovetailing.
Natural cantor(const Natural& a, const Natural& b);
std::pair<Natural, Natural> uncantor(const Natural& z);

/// The n'th prime, p_0 = 2.
std::uint64_t nth_prime(std::size_t n);

/// Exponent of prime p in n (n > 0).
std::uint64_t prime_exponent(Natural n, std::uint64_t p);

/// Integer power base^e for small e.
Natural power(std::uint64_t base, std::uint64_t e);

/// Zig-zag bijection N -> Z: 0,-1,1,-2,2,...
mpz_class zigzag(const Natural& n);
Natural unzigzag(const mpz_class& z);

}  // namespace tc
