// Acceptance run: one PASS/FAIL line per criterion. Exit status is 0 when
// every failure is a documented known gap, 1 otherwise.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "support/generators.hpp"
#include "tc/category.hpp"
#include "tc/diophantine.hpp"
#include "tc/fol/encoding.hpp"
#include "tc/fol/proof.hpp"
#include "tc/fol/syntax.hpp"
#include "tc/goedel.hpp"
#include "tc/programs.hpp"
#include "tc/sorts.hpp"
#include "tc/stability.hpp"
#include "tc/synthesis.hpp"

using namespace tc;

namespace {

// Pinned limits, in seconds, per criterion.
constexpr double kLimit1 = 10, kLimit2 = 30, kLimit3 = 60, kLimit4 = 120, kLimit5 = 120, kLimit6 = 120,
                 kLimit7 = 300;
constexpr unsigned long kDirectSteps = 10000;     // criterion 2
constexpr unsigned long kPlusBy = 10000;          // criterion 4
constexpr unsigned long kDioHorizon = 100000;     // criterion 4
constexpr std::size_t kPhiSteps = 100000;         // criterion 5
constexpr unsigned long kSpecHorizon = 1000;      // criterion 6
constexpr unsigned long kGrid = 8;                // criterion 7

struct Result {
  bool pass = false;
  std::string detail;
  // Set when the failure is one of the documented gaps.
  std::string known_gap;
};

fol::Formula P(const std::string& s) { return fol::parse_formula(s); }

// ---- 1: encodings ----

Result encodings(std::uint64_t seed, std::ostream& trace) {
  const auto N = cat::nat_encoding();
  auto prod = cat::product_encoding(N, N);
  auto sum = cat::sum_encoding(N, N);
  auto list = cat::list_encoding(N);
  using S = std::variant<Natural, Natural>;
  std::size_t bad = 0;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) {
      ++bad;
      trace << "encodings: " << what << " failed\n";
    }
  };
  expect(prod.encode({2, 1}) == 12, "product (2,1)");
  expect(prod.encode({0, 0}) == 1, "product (0,0)");
  expect(sum.encode(S(std::in_place_index<0>, 3)) == 16, "sum left 3");
  expect(sum.encode(S(std::in_place_index<1>, 0)) == 3, "sum right 0");
  expect(list.encode({3, 1}) == 144, "list [3,1]");

  testing::Gen g(seed);
  std::set<Natural> prod_codes, sum_codes, list_codes, formula_codes;
  std::set<std::pair<Natural, Natural>> pairs;
  std::set<std::vector<Natural>> lists;
  std::set<S> sums;
  std::set<fol::Formula> formulas;
  for (int k = 0; k < 10000; ++k) {
    Natural a = g.natural(60), b = g.natural(60);
    Natural c = prod.encode({a, b});
    expect(prod.decode(c) == std::make_pair(a, b), "product round trip");
    if (pairs.insert({a, b}).second) expect(prod_codes.insert(c).second, "product injectivity");

    S v = g.coin() ? S(std::in_place_index<0>, a) : S(std::in_place_index<1>, a);
    Natural sc = sum.encode(v);
    expect(sum.decode(sc) == v, "sum round trip");
    if (sums.insert(v).second) expect(sum_codes.insert(sc).second, "sum injectivity");

    std::vector<Natural> l;
    for (std::size_t i = 0, n = g.below(5); i < n; ++i) l.push_back(g.natural(8));
    Natural lc = list.encode(l);
    expect(list.decode(lc) == l, "list round trip");
    if (lists.insert(l).second) expect(list_codes.insert(lc).second, "list injectivity");

    fol::Formula f = g.formula(2);
    Natural fc = fol::formula_code(f);
    expect(fol::decode_formula(fc) == f, "formula round trip");
    expect(fol::is_formula_code(fc) == fol::is_closed(f), "formula image on codes");
    if (formulas.insert(f).second) expect(formula_codes.insert(fc).second, "formula injectivity");
  }
  // Image tests: anything accepted decodes and re-encodes to itself.
  std::size_t accepted = 0;
  for (unsigned long n = 0; n <= 20000; ++n) {
    Natural c(n);
    if (prod.contains(c)) expect(prod.encode(*prod.decode(c)) == c, "product image");
    if (sum.contains(c)) expect(sum.encode(*sum.decode(c)) == c, "sum image");
    if (list.contains(c)) expect(list.encode(*list.decode(c)) == c, "list image");
    if (fol::is_formula_code(c)) {
      ++accepted;
      auto f = fol::decode_formula(c);
      expect(f && fol::is_closed(*f) && fol::formula_code(*f) == c, "formula image");
    }
  }
  std::ostringstream d;
  d << formulas.size() << " distinct formulas, " << accepted << " formula codes below 20001, " << bad << " failures";
  trace << "encodings: " << d.str() << "\n";
  return {bad == 0, d.str(), ""};
}

// ---- 2: s-m-n and universality ----

Result specialization(std::uint64_t seed, std::ostream& trace) {
  testing::Gen g(seed);
  std::size_t compared = 0, mismatches = 0;
  for (int k = 0; k < 20; ++k) {
    Program p = g.program(3, g.range(2, 8));
    MachineCode code = encode_program(p);
    for (int j = 0; j < 20; ++j) {
      Natural a = g.natural(6), b = g.natural(6);
      auto direct = run(p, pair(a, b), kDirectSteps);
      if (!direct.halted()) continue;
      ++compared;
      auto via_universal = universal(code, pair(a, b), Natural(kDirectSteps) * 100);
      auto specialized = universal(smn(code, a), b, Natural(kDirectSteps) * 100);
      bool ok = via_universal.halted() && specialized.halted() && via_universal.value == direct.value &&
                specialized.value == direct.value;
      if (!ok) ++mismatches;
      trace << "smn " << k << " " << a << " " << b << " " << direct.value << " "
            << (specialized.halted() ? specialized.value.get_str() : "-") << "\n";
    }
  }
  std::ostringstream d;
  d << compared << " halting pairs compared, " << mismatches << " mismatches";
  return {mismatches == 0 && compared > 0, d.str(), ""};
}

// ---- 3: stable set vs decided set ----

Result convert(std::uint64_t seed, std::ostream& trace) {
  testing::Gen g(seed);
  std::size_t mismatches = 0;
  for (int k = 0; k < 50; ++k) {
    auto s = g.stream(6, 6, 5);
    auto oracle = stability::stabilization_oracle(s);
    auto decided = stability::decided_by_tail_analysis(s, Natural(1000000000));
    if (oracle != decided) ++mismatches;
    trace << "convert " << k << " {";
    for (const auto& b : oracle) trace << " " << b;
    trace << " } {";
    for (const auto& b : decided) trace << " " << b;
    trace << " }\n";
  }
  std::ostringstream d;
  d << "50 streams, " << mismatches << " mismatches";
  return {mismatches == 0, d.str(), ""};
}

// ---- 4: Diophantine examples ----

// Ranks (below the horizon) at which A lists p, with their signs.
std::vector<std::pair<unsigned long, bool>> occurrences(const std::vector<dio::Signed>& ranks, const dio::Pol& p) {
  std::vector<std::pair<unsigned long, bool>> out;
  for (std::size_t n = 0; n < ranks.size(); ++n)
    if (ranks[n].pol == p) out.push_back({n, ranks[n].plus});
  return out;
}

Result diophantine(std::uint64_t, std::ostream& trace) {
  std::size_t stages = 1;
  while (stages * (stages + 1) / 2 < kDioHorizon) ++stages;
  auto ranks = dio::stage_list(stages);
  ranks.resize(kDioHorizon);
  bool pass = true;
  std::vector<std::string> missing;
  std::ostringstream d;
  for (const char* text : {"x^2 + 1", "2*x - 7"}) {
    auto occ = occurrences(ranks, dio::parse_pol(text));
    auto plus = std::find_if(occ.begin(), occ.end(), [](auto& o) { return o.second && o.first < kPlusBy; });
    bool reached = plus != occ.end();
    bool refuted = reached && std::any_of(plus, occ.end(), [](auto& o) { return !o.second; });
    trace << "dio " << text << " occurrences " << occ.size() << " plus-by " << reached << " refuted " << refuted << "\n";
    d << text << ": " << (reached ? "plus at " + std::to_string(plus->first) : std::string("no plus")) << "; ";
    if (!reached || refuted) {
      pass = false;
      missing.push_back(text);
    }
  }
  auto occ = occurrences(ranks, dio::parse_pol("x - 3"));
  bool every_plus_refuted = !occ.empty();
  for (std::size_t i = 0; i < occ.size(); ++i)
    if (occ[i].second)
      every_plus_refuted =
          every_plus_refuted && std::any_of(occ.begin() + i + 1, occ.end(), [](auto& o) { return !o.second; });
  trace << "dio x - 3 occurrences " << occ.size() << " every-plus-refuted " << every_plus_refuted << "\n";
  d << "x - 3: " << occ.size() << " occurrences, every + refuted " << (every_plus_refuted ? "yes" : "no");
  if (!every_plus_refuted) {
    pass = false;
    missing.push_back("x - 3");
  }
  std::string gap;
  if (missing == std::vector<std::string>{"2*x - 7"})
    gap = "2x-7 has list index " + std::to_string(dio::pol_index(dio::parse_pol("2*x - 7"))) +
          " and first appears far beyond the horizon";
  return {pass, d.str(), gap};
}


// ---- 5: closure under consequence ----

Result consequences(std::uint64_t, std::ostream& trace) {
  struct Corpus {
    std::vector<std::string> premises, expected;
  };
  const std::vector<Corpus> corpora{
      {{"p", "p -> q"}, {"q"}},
      {{"p", "p -> q", "q -> r", "r -> t"}, {"q", "r", "t"}},
      {{"a", "b", "a -> (b -> c)", "c -> d"}, {"b -> c", "c", "d"}},
  };
  std::size_t missing = 0, checked = 0, rejected = 0;
  for (const auto& corpus : corpora) {
    std::vector<fol::Sentence> prem;
    for (const auto& s : corpus.premises) prem.push_back(P(s));
    fol::DerivationEnumerator e(prem);
    std::size_t last = 0;
    for (const auto& s : corpus.expected) {
      auto pos = e.position_of(P(s), 3);
      trace << "phi " << s << " at " << (pos ? std::to_string(*pos) : "-") << "\n";
      if (!pos || *pos >= kPhiSteps) {
        ++missing;
        continue;
      }
      last = std::max(last, *pos);
    }
    // every sentence emitted up to the last one needed, and at least 1000
    for (std::size_t n = 0; n <= std::max<std::size_t>(last, 999); ++n) {
      auto d = e.at(n);
      ++checked;
      bool ok = fol::is_closed(d.sentence) && d.proof.back().formula == d.sentence && fol::check_proof(d.proof, prem).ok;
      if (!ok) {
        ++rejected;
        trace << "phi rejected at " << n << ": " << fol::print(d.sentence) << "\n";
      }
    }
  }
  std::ostringstream d;
  d << missing << " consequences missing, " << checked << " emitted sentences checked, " << rejected << " rejected";
  trace << "phi " << d.str() << "\n";
  return {missing == 0 && rejected == 0, d.str(), ""};
}

// ---- 6: Spec ----

// Streams over true closed sentences, so every input is consistent.
stability::StreamSpec toy_stream(testing::Gen& g, bool total) {
  static const std::vector<std::string> pool{"0 = 0", "s(0) = s(0)", "p -> p", "~s(0) = 0", "0 < s(0)",
                                             "forall m. m + 0 = m"};
  auto entry = [&] { return stability::Entry{fol::formula_code(P(pool[g.below(pool.size())])), g.coin()}; };
  stability::StreamSpec s;
  for (std::size_t i = 0, n = g.below(5); i < n; ++i) s.prefix.push_back(entry());
  if (total)
    for (std::size_t i = 0, n = g.range(1, 4); i < n; ++i) s.tail.push_back(entry());
  return s;
}

std::set<Natural> l_stable_set(const std::vector<stability::Entry>& l) {
  std::set<Natural> out;
  for (const auto& e : l)
    if (stability::is_l_stable(l, e.element)) out.insert(e.element);
  return out;
}

Result spec_properties(std::uint64_t seed, std::ostream& trace) {
  testing::Gen g(seed);
  const Natural cap = 10000000;
  std::size_t parity_bad = 0, superset_bad = 0, totality_bad = 0, contradictions = 0;
  for (int k = 0; k < 20; ++k) {
    const bool total = k < 16;
    auto s = toy_stream(g, total);
    auto code = stability::stream_code(s);
    auto spec = goedel::spec_i(code, fol::Translation::Identity);
    auto k_code = stability::coerce_K(code, sorts::formula());
    std::vector<stability::Entry> entries;
    std::size_t undefined = 0;
    for (unsigned long n = 0; n < kSpecHorizon; ++n) {
      Fuel f(cap + 1), h(cap + 1);
      auto v = evaluate_capped(spec, n, cap, f);
      std::optional<Natural> want;
      if (n % 2 == 1) {
        want = evaluate_capped(k_code, n / 2, cap, h);
      } else {
        auto j = goedel::enumerator_J(n / 2);
        want = pair(fol::formula_code(goedel::alpha(j.formula)), stability::sign_code(j.plus));
      }
      if (v != want) ++parity_bad;
      if (!v) {
        ++undefined;
        continue;
      }
      auto e = stability::decode_entry(*v);
      if (e) entries.push_back(*e);
    }
    if (total && undefined > 0) ++totality_bad;
    // stable part of the input, as far as the horizon reaches it
    std::vector<stability::Entry> input;
    for (unsigned long n = 0; n < kSpecHorizon / 2; ++n)
      if (auto e = stability::stream_at(s, n)) input.push_back(*e);
    auto spec_stable = l_stable_set(entries);
    auto input_stable = l_stable_set(input);
    if (total)
      for (const auto& b : stability::stabilization_oracle(s)) input_stable.insert(b);
    for (const auto& b : input_stable)
      if (!spec_stable.count(b)) ++superset_bad;
    for (const auto& c : spec_stable) {
      auto f = fol::decode_formula(c);
      if (f && spec_stable.count(fol::formula_code(fol::Formula::neg(*f)))) ++contradictions;
    }
    trace << "spec " << k << " defined " << entries.size() << " stable " << spec_stable.size() << " input-stable "
          << input_stable.size() << "\n";
  }
  std::ostringstream d;
  d << "parity mismatches " << parity_bad << ", superset misses " << superset_bad << ", totality failures "
    << totality_bad << ", contradictory pairs " << contradictions;
  return {parity_bad + superset_bad + totality_bad + contradictions == 0, d.str(), ""};
}

// ---- 7: Goedel pipeline ----

Result goedel_pipeline(std::uint64_t seed, std::ostream& trace) {
  testing::Gen g(seed);
  std::vector<MachineCode> codes;
  for (int k = 0; k < 10; ++k) codes.push_back(encode_program(g.program(3, g.range(0, 6))));
  for (int k = 0; k < 5; ++k) codes.push_back(stability::stream_code(g.stream(4, 3, 3)));
  codes.push_back(encode_program(programs::diverge()));
  codes.push_back(totalize(encode_program(programs::diverge())));
  codes.push_back(goedel::enumerator_j_code());
  codes.push_back(goedel::closure_C(stability::stream_code({})));
  codes.push_back(stability::dec_B(stability::stream_code({}), sorts::formula()));
  std::size_t produced = 0, unsupported = 0, malformed = 0;
  const fol::Level sigma2{fol::Level::Kind::Sigma, 2}, delta0{};
  auto well_formed = [&](const goedel::GoedelSentence& s) {
    return fol::is_closed(s.sentence) && fol::is_closed(s.negation) && fol::classify_prenex(s.negation) == sigma2 &&
           fol::classify_prenex(s.matrix) == delta0;
  };
  for (const auto& f : codes) {
    try {
      auto s = goedel::goedel_G(f, fol::Translation::Identity);
      ++produced;
      if (!well_formed(s)) ++malformed;
    } catch (const goedel::Unsupported&) {
      ++unsupported;
    }
  }
  trace << "goedel G produced " << produced << " unsupported " << unsupported << "\n";
  // s(T) on plain program codes, where the arithmetization applies
  std::size_t programs_bad = 0;
  for (int k = 0; k < 20; ++k) {
    auto s = goedel::sentence_s(encode_program(g.program(3, g.range(1, 6))));
    if (!well_formed(s)) ++programs_bad;
  }
  // gamma against the simulation oracle for a tiny enumerator
  MachineCode tiny = encode_program(parse_program("CONST r1 1\nHALT r1\n"));
  auto s = goedel::sentence_s(tiny);
  Program q = std::get<Program>(decode(restrict_to_sign(tiny)));
  std::size_t disagreements = 0;
  for (unsigned long M = 0; M <= kGrid; ++M)
    for (unsigned long N = 0; N <= kGrid; ++N) {
      auto inst = fol::substitute(fol::substitute(s.matrix, goedel::kOuterVar, fol::numeral(Natural(M))),
                                  goedel::kInnerVar, fol::numeral(Natural(N)));
      bool formula = fol::eval_sigma0(inst);
      bool oracle = goedel::matrix_oracle(q, tiny.value, M, N);
      disagreements += formula != oracle;
      trace << "gamma " << M << " " << N << " " << formula << "\n";
    }
  std::ostringstream d;
  d << "G total on " << produced << "/20 codes (" << unsupported << " unsupported), " << malformed + programs_bad
    << " malformed sentences, " << disagreements << " grid disagreements";
  bool rest_ok = malformed == 0 && programs_bad == 0 && disagreements == 0;
  std::string gap;
  if (rest_ok && produced + unsupported == codes.size() && unsupported > 0)
    gap = "G is only arithmetized for plain program codes; Tur(F) is a composite code";
  return {rest_ok && produced == codes.size(), d.str(), gap};
}

struct Criterion {
  const char* name;
  double limit;
  std::function<Result(std::uint64_t, std::ostream&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"encodings", kLimit1, encodings},      {"s-m-n and universality", kLimit2, specialization},
      {"stable set vs decided set", kLimit3, convert},    {"diophantine examples", kLimit4, diophantine},
      {"closure under consequence", kLimit5, consequences}, {"spec properties", kLimit6, spec_properties},
      {"goedel pipeline", kLimit7, goedel_pipeline},
  };
  return all;
}

struct Run {
  std::vector<Result> results;
  std::vector<double> seconds;
  std::string trace;
};

Run run_suite(std::uint64_t seed) {
  Run out;
  std::ostringstream trace;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    trace << "# criterion " << i + 1 << "\n";
    auto start = std::chrono::steady_clock::now();
    out.results.push_back(criteria()[i].run(seed + i + 1, trace));
    out.seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  out.trace = trace.str();
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::uint64_t seed = 1;
  std::string dir = ".";
  app.add_option("--seed", seed, "base seed");
  app.add_option("--trace-dir", dir, "where the two trace files go");
  CLI11_PARSE(app, argc, argv);

  bool unexpected = false;
  auto report = [&](std::size_t index, bool pass, const std::string& detail, const std::string& gap) {
    std::cout << index << " " << (pass ? "PASS" : "FAIL") << "  " << detail;
    if (!pass && !gap.empty()) std::cout << "  [known gap: " << gap << "]";
    std::cout << "\n" << std::flush;
    if (!pass && gap.empty()) unexpected = true;
  };

  Run first = run_suite(seed);
  for (std::size_t i = 0; i < first.results.size(); ++i) {
    const auto& r = first.results[i];
    bool in_time = first.seconds[i] < criteria()[i].limit;
    std::ostringstream d;
    d << criteria()[i].name << ": " << r.detail << " (" << std::fixed << std::setprecision(2) << first.seconds[i]
      << " s, limit " << criteria()[i].limit << " s)";
    report(i + 1, r.pass && in_time, d.str(), in_time ? r.known_gap : "");
  }

  Run second = run_suite(seed);
  std::filesystem::create_directories(dir);
  auto a = std::filesystem::path(dir) / "acceptance-trace-1.txt";
  auto b = std::filesystem::path(dir) / "acceptance-trace-2.txt";
  std::ofstream(a, std::ios::binary) << first.trace;
  std::ofstream(b, std::ios::binary) << second.trace;
  std::string ta = slurp(a), tb = slurp(b);
  std::ostringstream d;
  d << "determinism: " << ta.size() << " trace bytes, " << (ta == tb ? "identical" : "different");
  report(8, !ta.empty() && ta == tb, d.str(), "");
  return unexpected ? 1 : 0;
}
