#include "tc/diophantine.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

#include "nodes.hpp"
#include "tc/sorts.hpp"
#include "tc/stability.hpp"

namespace tc::dio {

// ---- Pol ----

Pol::Pol(const std::map<Monomial, Integer>& terms) {
  for (const auto& [key, c] : terms) {
    Monomial m = key;
    while (!m.empty() && m.back() == 0) m.pop_back();
    if (c == 0) continue;
    terms_[m] += c;
    if (terms_[m] == 0) terms_.erase(m);
  }
}

std::size_t Pol::arity() const {
  std::size_t k = 0;
  for (const auto& [m, c] : terms_) k = std::max(k, m.size());
  return k;
}

Integer Pol::evaluate(const std::vector<Integer>& point) const {
  Integer sum = 0;
  for (const auto& [m, c] : terms_) {
    Integer term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      Integer x = i < point.size() ? point[i] : Integer(0);
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), m[i]);
      term *= p;
    }
    sum += term;
  }
  return sum;
}

// ---- text ----

namespace {

std::string var_name(std::size_t i) {
  static const char* names[] = {"x", "y", "z", "w"};
  return i < 4 ? names[i] : "x" + std::to_string(i);
}

class PolParser {
 public:
  explicit PolParser(const std::string& s) : s_(s) {}

  Pol parse() {
    std::map<Monomial, Integer> acc;
    skip();
    bool first = true;
    while (pos_ < s_.size() || first) {
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw PolSyntaxError("expected '+' or '-'", pos_);
      }
      auto [m, c] = term();
      c *= sign;
      Pol single({{m, c}});
      for (const auto& [mm, cc] : single.terms()) acc[mm] += cc;
      first = false;
      skip();
    }
    return Pol(acc);
  }

 private:
  std::pair<Monomial, Integer> term() {
    Integer coef = 1;
    Monomial m;
    bool any = false;
    while (true) {
      skip();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        coef *= Integer(s_.substr(start, pos_ - start));
      } else if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
        std::size_t start = pos_;
        std::size_t idx = variable();
        std::uint32_t e = 1;
        skip();
        if (peek('^')) {
          ++pos_;
          skip();
          std::size_t es = pos_;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
          if (es == pos_) throw PolSyntaxError("expected exponent", pos_);
          e = static_cast<std::uint32_t>(std::stoul(s_.substr(es, pos_ - es)));
        }
        if (idx > 64) throw PolSyntaxError("variable index too large", start);
        if (m.size() <= idx) m.resize(idx + 1, 0);
        m[idx] += e;
      } else {
        throw PolSyntaxError("expected number or variable", pos_);
      }
      any = true;
      skip();
      if (peek('*')) {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) throw PolSyntaxError("empty term", pos_);
    return {m, coef};
  }

  std::size_t variable() {
    char c = s_[pos_++];
    std::size_t idx;
    switch (c) {
      case 'x': idx = 0; break;
      case 'y': idx = 1; break;
      case 'z': idx = 2; break;
      case 'w': idx = 3; break;
      default: throw PolSyntaxError(std::string("unknown variable '") + c + "'", pos_ - 1);
    }
    if (c == 'x' && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      idx = std::stoul(s_.substr(start, pos_ - start));
    }
    return idx;
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Pol parse_pol(const std::string& text) { return PolParser(text).parse(); }

std::string to_string(const Pol& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest monomials first reads naturally: 2*x^2*y - 7.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += var_name(i);
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    if (factors.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += factors;
    }
  }
  return out;
}

// ---- code ----

Natural pol_code(const Pol& p) {
  BitWriter w;
  w.natural(nat(p.terms().size()));
  for (const auto& [m, c] : p.terms()) {
    w.natural(unzigzag(c));
    w.natural(nat(m.size()));
    for (auto e : m) w.natural(nat(e));
  }
  return w.finish();
}

std::optional<Pol> decode_pol(const Natural& code) {
  BitReader r(code);
  if (!r.ok()) return std::nullopt;
  auto n = r.natural();
  if (!n || *n > 100000) return std::nullopt;
  std::map<Monomial, Integer> terms;
  std::optional<Monomial> last;
  for (unsigned long i = 0; i < n->get_ui(); ++i) {
    auto zc = r.natural();
    auto len = r.natural();
    if (!zc || !len || *len > 64) return std::nullopt;
    Integer c = zigzag(*zc);
    if (c == 0) return std::nullopt;
    Monomial m;
    for (unsigned long j = 0; j < len->get_ui(); ++j) {
      auto e = r.natural();
      if (!e || *e > 0xffffffffUL) return std::nullopt;
      m.push_back(static_cast<std::uint32_t>(e->get_ui()));
    }
    if (!m.empty() && m.back() == 0) return std::nullopt;
    if (last && !(*last < m)) return std::nullopt;
    last = m;
    terms[m] = c;
  }
  if (!r.done()) return std::nullopt;
  return Pol(terms);
}

bool is_pol_code(const Natural& code) { return decode_pol(code).has_value(); }

// ---- roots ----

std::vector<Integer> integer_point(const Natural& n, std::size_t k) {
  std::vector<Integer> out;
  if (k == 0) return out;
  Natural rest = n;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    auto [a, b] = uncantor(rest);
    out.push_back(zigzag(a));
    rest = b;
  }
  out.push_back(zigzag(rest));
  return out;
}

Integer eval_E(const Natural& n, const Pol& p) { return p.evaluate(integer_point(n, p.arity())); }

namespace {

// Per-polynomial memo of the root search: how far it has looked and the
// first root index found.
struct RootMemo {
  Natural searched = -1;
  std::optional<Natural> first_root;
};

std::mutex root_mutex;
std::map<Pol, RootMemo> root_memo;

}  // namespace

bool no_root_up_to(const Pol& p, const Natural& n) {
  RootMemo memo;
  {
    std::lock_guard lock(root_mutex);
    memo = root_memo[p];
  }
  if (memo.first_root) return *memo.first_root > n;
  if (memo.searched >= n) return true;
  for (Natural j = memo.searched + 1; j <= n; ++j) {
    if (eval_E(j, p) == 0) {
      memo.first_root = j;
      break;
    }
    memo.searched = j;
  }
  {
    std::lock_guard lock(root_mutex);
    root_memo[p] = memo;
  }
  return !memo.first_root;
}

// ---- Z ----

namespace {

unsigned long monomial_cost(const Monomial& m) {
  unsigned long c = 0;
  for (std::size_t i = 0; i < m.size(); ++i) c += (i + 1) * m[i];
  return c;
}

// Exponent vectors of cost exactly d: partitions of d into parts i+1.
void monomials_of_cost(unsigned long d, std::size_t var, Monomial& cur, std::vector<Monomial>& out) {
  if (d == 0) {
    Monomial m = cur;
    while (!m.empty() && m.back() == 0) m.pop_back();
    out.push_back(m);
    return;
  }
  if (var + 1 > d) return;
  for (unsigned long e = 0; e * (var + 1) <= d; ++e) {
    if (cur.size() <= var) cur.resize(var + 1, 0);
    cur[var] = static_cast<std::uint32_t>(e);
    monomials_of_cost(d - e * (var + 1), var + 1, cur, out);
    cur[var] = 0;
  }
}

std::vector<Pol> polys_of_weight(unsigned long w) {
  std::vector<std::pair<Monomial, unsigned long>> monos;
  for (unsigned long d = 0; d < w; ++d) {
    std::vector<Monomial> ms;
    Monomial cur;
    monomials_of_cost(d, 0, cur, ms);
    for (auto& m : ms) monos.emplace_back(m, d);
  }
  std::sort(monos.begin(), monos.end());
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::vector<Pol> out;
  std::map<Monomial, Integer> cur;
  auto rec = [&](auto&& self, std::size_t idx, unsigned long left) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (idx == monos.size()) return;
    self(self, idx + 1, left);
    const auto& [m, cost] = monos[idx];
    for (unsigned long c = 1; c + cost <= left; ++c) {
      for (int sgn : {1, -1}) {
        cur[m] = Integer(static_cast<long>(c)) * sgn;
        self(self, idx + 1, left - c - cost);
        cur.erase(m);
      }
    }
  };
  rec(rec, 0, w);
  std::vector<std::pair<Natural, Pol>> keyed;
  for (auto& p : out) keyed.emplace_back(pol_code(p), std::move(p));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Pol> sorted;
  for (auto& [k, p] : keyed) sorted.push_back(std::move(p));
  return sorted;
}

std::mutex z_mutex;
std::vector<Pol> z_table;
unsigned long z_weight = 0;  // weights < z_weight are in the table

unsigned long weight(const Pol& p) {
  unsigned long w = 0;
  for (const auto& [m, c] : p.terms()) w += Integer(abs(c)).get_ui() + monomial_cost(m);
  return w;
}

}  // namespace

Pol pol_by_index(std::size_t m) {
  std::lock_guard lock(z_mutex);
  while (z_table.size() <= m) {
    auto ps = polys_of_weight(z_weight++);
    z_table.insert(z_table.end(), ps.begin(), ps.end());
  }
  return z_table[m];
}

std::size_t pol_index(const Pol& p) {
  unsigned long w = weight(p);
  std::lock_guard lock(z_mutex);
  while (z_weight <= w) {
    auto ps = polys_of_weight(z_weight++);
    z_table.insert(z_table.end(), ps.begin(), ps.end());
  }
  for (std::size_t i = 0; i < z_table.size(); ++i)
    if (z_table[i] == p) return i;
  throw std::logic_error("polynomial missing from its weight class");
}

// ---- A ----

namespace {

// Stage k of the recursion covers ranks [k(k+1)/2, (k+1)(k+2)/2).
std::pair<Natural, Natural> stage_of(const Natural& n) {
  Natural k = (sqrt(8 * n + 1) - 1) / 2;
  return {k, n - k * (k + 1) / 2};
}

}  // namespace

Signed enumerator_A(const Natural& n) {
  auto [k, m] = stage_of(n);
  Pol p = pol_by_index(m.get_ui());
  return {p, no_root_up_to(p, k)};
}

std::vector<Signed> stage_list(std::size_t n) {
  std::vector<Signed> a;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m <= k; ++m) {
      Pol p = pol_by_index(m);
      a.push_back({p, no_root_up_to(p, nat(k))});
    }
  return a;
}

MachineCode enumerator_code() { return encode_node({NodeKind::EnumeratorA, {}}); }

MachineCode decider_code() { return stability::dec_B(enumerator_code(), sorts::pol()); }

}  // namespace tc::dio

namespace tc::detail {

Natural eval_enumerator_a(const Node&, const Natural& input, Fuel& fuel) {
  auto [k, m] = dio::stage_of(input);
  fuel.charge(k + 1);
  auto s = dio::enumerator_A(input);
  return pair(dio::pol_code(s.pol), Natural(s.plus ? 1 : 0));
}

}  // namespace tc::detail
