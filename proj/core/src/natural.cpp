#include "tc/natural.hpp"

#include <mutex>
#include <stdexcept>

namespace tc {

std::string to_string(const Natural& n) { return n.get_str(10); }

std::optional<Natural> parse_natural(const std::string& text) {
  if (text.empty()) return std::nullopt;
  for (char c : text)
    if (c < '0' || c > '9') return std::nullopt;
  return Natural(text, 10);
}

Natural cantor(const Natural& a, const Natural& b) {
  Natural s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<Natural, Natural> uncantor(const Natural& z) {
  // w = floor((sqrt(8z+1)-1)/2)
  Natural disc = 8 * z + 1;
  Natural root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  Natural w = (root - 1) / 2;
  Natural t = w * (w + 1) / 2;
  Natural b = z - t;
  Natural a = w - b;
  return {a, b};
}

Natural pair(const Natural& a, const Natural& b) { return cantor(a, b) + 1; }

std::optional<std::pair<Natural, Natural>> unpair(const Natural& code) {
  if (code <= 0) return std::nullopt;
  return uncantor(code - 1);
}

std::uint64_t nth_prime(std::size_t n) {
  static std::mutex mu;
  static std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  std::lock_guard lock(mu);
  while (primes.size() <= n) {
    std::uint64_t candidate = primes.back() + 2;
    for (;; candidate += 2) {
      bool is_prime = true;
      for (std::uint64_t p : primes) {
        if (p * p > candidate) break;
        if (candidate % p == 0) {
          is_prime = false;
          break;
        }
      }
      if (is_prime) break;
    }
    primes.push_back(candidate);
  }
  return primes[n];
}

std::uint64_t prime_exponent(Natural n, std::uint64_t p) {
  if (n <= 0) throw std::invalid_argument("prime_exponent of zero");
  Natural pp = static_cast<unsigned long>(p);
  return mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t());
}

Natural power(std::uint64_t base, std::uint64_t e) {
  Natural r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

mpz_class zigzag(const Natural& n) {
  // even -> n/2, odd -> -(n+1)/2
  if (mpz_even_p(n.get_mpz_t())) return n / 2;
  return -((n + 1) / 2);
}

Natural unzigzag(const mpz_class& z) {
  if (z >= 0) return 2 * z;
  return -2 * z - 1;
}

}  // namespace tc
