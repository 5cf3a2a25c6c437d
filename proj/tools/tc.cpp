#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tc/category.hpp"
#include "tc/diophantine.hpp"
#include "tc/fol/arith.hpp"
#include "tc/fol/encoding.hpp"
#include "tc/fol/proof.hpp"
#include "tc/fol/syntax.hpp"
#include "tc/goedel.hpp"
#include "tc/io.hpp"
#include "tc/machine.hpp"
#include "tc/sorts.hpp"
#include "tc/stability.hpp"

namespace {

using namespace tc;

constexpr int kOk = 0;
constexpr int kBudget = 1;
constexpr int kUsage = 2;
constexpr int kUnsupported = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Natural natural_arg(const std::string& text, const char* what) {
  auto n = parse_natural(text);
  if (!n) throw UsageError(std::string(what) + " must be a natural number");
  return *n;
}

Natural default_fuel() {
  if (const char* env = std::getenv("TC_FUEL")) return natural_arg(env, "TC_FUEL");
  return Natural(10000000);
}

std::string sign_text(bool plus) { return plus ? "+" : "-"; }

// rank, payload, sign, note
void record(const Natural& rank, const std::string& payload, const std::string& sign, const std::string& note) {
  std::cout << to_string(rank) << '\t' << payload << '\t' << sign << '\t' << note << '\n';
}

fol::Translation translation_arg(const std::string& name) {
  if (name == "identity") return fol::Translation::Identity;
  if (name == "vonneumann") return fol::Translation::VonNeumann;
  throw UsageError("unknown translation " + name);
}

// Formula code if the payload decodes as a formula, the number otherwise.
std::string payload_text(const Natural& code) {
  if (auto f = fol::decode_formula(code)) return fol::print(*f);
  return to_string(code);
}

// Each rank gets its own budget; a rank that does not finish has no value.
std::optional<stability::Entry> value_at(const MachineCode& code, const Natural& rank, const Natural& fuel) {
  Fuel budget(fuel);
  auto v = evaluate_capped(code, rank, fuel, budget);
  return v ? stability::decode_entry(*v) : std::nullopt;
}

int cmd_run(const std::string& path, const std::string& input, const Natural& fuel) {
  Program p = parse_program(io::read_file(path));
  Outcome o = tc::run(p, natural_arg(input, "--input"), fuel);
  if (!o.halted()) {
    std::cout << "out-of-fuel\t" << to_string(o.steps) << '\n';
    return kBudget;
  }
  std::cout << "halt\t" << to_string(o.value) << '\t' << to_string(o.steps) << '\n';
  return kOk;
}

int cmd_encode(const std::string& scheme, const std::vector<std::string>& values) {
  std::vector<Natural> v;
  for (const auto& s : values) v.push_back(natural_arg(s, "--values"));
  auto n = cat::nat_encoding();
  Natural code;
  if (scheme == "list") {
    code = cat::list_encoding(n).encode(v);
  } else {
    if (v.size() != 2) throw UsageError(scheme + " takes exactly two values");
    if (scheme == "product") code = cat::product_encoding(n, n).encode({v[0], v[1]});
    else if (scheme == "pair") code = cat::pairing_encoding(n, n).encode({v[0], v[1]});
    else if (scheme == "sum") {
      // side 0 = left summand, 1 = right
      if (v[0] > 1) throw UsageError("sum takes <side 0|1> <value>");
      using Sum = std::variant<Natural, Natural>;
      Sum x = v[0] == 0 ? Sum(std::in_place_index<0>, v[1]) : Sum(std::in_place_index<1>, v[1]);
      code = cat::sum_encoding(n, n).encode(x);
    } else {
      throw UsageError("unknown scheme " + scheme);
    }
  }
  std::cout << to_string(code) << '\n';
  return kOk;
}

int cmd_decode(const std::string& scheme, const std::string& code_text) {
  Natural code = natural_arg(code_text, "--code");
  auto n = cat::nat_encoding();
  std::vector<Natural> out;
  bool ok = true;
  if (scheme == "list") {
    auto l = cat::list_encoding(n).decode(code);
    if ((ok = l.has_value())) out = *l;
  } else if (scheme == "product" || scheme == "pair") {
    auto e = scheme == "product" ? cat::product_encoding(n, n) : cat::pairing_encoding(n, n);
    auto p = e.decode(code);
    if ((ok = p.has_value())) out = {p->first, p->second};
  } else if (scheme == "sum") {
    auto s = cat::sum_encoding(n, n).decode(code);
    if ((ok = s.has_value())) out = {Natural(s->index()), s->index() == 0 ? std::get<0>(*s) : std::get<1>(*s)};
  } else {
    throw UsageError("unknown scheme " + scheme);
  }
  if (!ok) throw UsageError(code_text + " is not in the image of " + scheme);
  for (std::size_t i = 0; i < out.size(); ++i) std::cout << (i ? "\t" : "") << to_string(out[i]);
  std::cout << '\n';
  return kOk;
}

int cmd_stabilize(const std::string& path, const Natural& horizon, const Natural& fuel) {
  MachineCode stream = stability::stream_code(io::parse_stream(io::read_file(path)));
  std::vector<stability::Entry> seen;
  std::set<Natural> stable;
  for (Natural rank = 0; rank <= horizon; ++rank) {
    auto e = value_at(stream, rank, fuel);
    if (!e) {
      record(rank, "", "", "no value within fuel");
      continue;
    }
    seen.push_back(*e);
    bool now = stability::is_l_stable(seen, e->element);
    bool before = stable.count(e->element) > 0;
    std::string delta;
    if (now && !before) delta = "+" + to_string(e->element), stable.insert(e->element);
    if (!now && before) delta = "-" + to_string(e->element), stable.erase(e->element);
    record(rank, to_string(e->element), sign_text(e->plus), delta);
  }
  return kOk;
}

int cmd_dio(const std::string& path, const Natural& horizon, const Natural& fuel) {
  dio::Pol p = dio::parse_pol(io::read_file(path));
  Fuel budget(fuel);
  auto signs = stability::decision_trace(dio::pol_code(p), dio::enumerator_code(), sorts::pol(), horizon, budget);
  std::string payload = dio::to_string(p);
  for (std::size_t m = 0; m < signs.size(); ++m) record(Natural(m), payload, sign_text(signs[m]), "");
  auto v = stability::verdict_of(signs);
  switch (v.kind) {
    case stability::Verdict::Kind::PlusStableSoFar: std::cout << "verdict\tplus-stable-so-far\t" << to_string(v.at) << '\n'; break;
    case stability::Verdict::Kind::RefutedAt: std::cout << "verdict\trefuted-at\t" << to_string(v.at) << '\n'; break;
    case stability::Verdict::Kind::Unknown: std::cout << "verdict\tunknown\n"; break;
  }
  return kOk;
}

int cmd_closure(const std::string& path, const Natural& steps, const Natural& fuel) {
  auto premises = io::parse_theory(io::read_file(path));
  auto e = fol::enumerator_for(premises);
  Fuel budget(fuel);
  for (Natural n = 0; n < steps; ++n) {
    fol::Derived d = e->at(n.get_ui(), &budget);
    auto check = fol::check_proof(d.proof, premises);
    record(n, fol::print(d.sentence), "+", "proof-lines=" + std::to_string(d.proof.size()) + (check.ok ? "" : " unchecked"));
  }
  return kOk;
}

int cmd_spec(const std::string& path, const std::string& translation, const Natural& horizon, const Natural& fuel) {
  MachineCode spec = goedel::spec_i(stability::stream_code(io::parse_stream(io::read_file(path))),
                                    translation_arg(translation));
  for (Natural rank = 0; rank <= horizon; ++rank) {
    auto e = value_at(spec, rank, fuel);
    std::string layout = rank % 2 == 0 ? "speculative" : "stream";
    if (!e) record(rank, "", "", layout + ", no value within fuel");
    else record(rank, payload_text(e->element), sign_text(e->plus), layout);
  }
  return kOk;
}

void print_certificate(const goedel::GoedelSentence& g) {
  auto bits = [](const fol::Formula& f) { return std::to_string(mpz_sizeinbase(fol::formula_code(f).get_mpz_t(), 2)); };
  std::cout << "closed\t" << (fol::is_closed(g.sentence) ? "yes" : "no") << '\n'
            << "sentence\t" << fol::to_string(g.sentence_level) << '\n'
            << "negation\t" << fol::to_string(g.negation_level) << '\n'
            << "matrix\t" << fol::to_string(g.matrix_level) << '\n'
            << "size\t" << g.sentence.size() << '\n'
            << "code-bits\t" << bits(g.sentence) << '\n';
  if (g.translated) std::cout << "translated-size\t" << g.translated->size() << '\n';
}

int cmd_goedel(const std::string& enumerator, const std::string& program, const std::string& translation,
               const std::string& emit) {
  fol::Translation t = translation_arg(translation);
  if (emit != "sentence" && emit != "matrix" && emit != "certificate") throw UsageError("unknown --emit " + emit);
  goedel::GoedelSentence g = [&] {
    if (!program.empty()) {
      // s(T) for a counter program T, translated like G(F).
      auto s = goedel::sentence_s(encode_program(parse_program(io::read_file(program))));
      if (t != fol::Translation::Identity) s.translated = fol::translate(t, s.sentence);
      return s;
    }
    return goedel::goedel_G(stability::stream_code(io::parse_stream(io::read_file(enumerator))), t);
  }();
  if (emit == "sentence") std::cout << fol::print(g.translated ? *g.translated : g.sentence) << '\n';
  else if (emit == "matrix") std::cout << fol::print(g.matrix) << '\n';
  else print_certificate(g);
  return kOk;
}

int cmd_eval(const std::string& text) {
  fol::Formula f = fol::parse_formula(text);
  if (!fol::is_closed(f)) throw UsageError("not a sentence");
  if (!fol::is_delta0(f)) throw UsageError("only bounded sentences can be evaluated");
  std::cout << (fol::eval_sigma0(f) ? "true" : "false") << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tc: counter machines, stable computability and arithmetized sentences"};
  app.require_subcommand(1);
  std::string fuel_text;
  app.add_option("--fuel", fuel_text, "step budget (default: TC_FUEL or 10000000)");

  std::string path, input = "0", scheme, code, horizon = "100", steps = "10", translation = "identity",
                    emit = "sentence", sentence, program;
  std::vector<std::string> values;

  auto* run = app.add_subcommand("run", "run a counter program");
  run->add_option("--program", path, "program file")->required();
  run->add_option("--input", input, "input value");
  run->add_option("--fuel", fuel_text, "step budget");

  auto* enc = app.add_subcommand("encode", "print the code of a tuple");
  enc->add_option("--scheme", scheme, "product|pair|sum|list")->required();
  enc->add_option("--values", values, "components")->required();

  auto* dec = app.add_subcommand("decode", "invert an encoding");
  dec->add_option("--scheme", scheme, "product|pair|sum|list")->required();
  dec->add_option("--code", code, "code to decode")->required();

  auto* stab = app.add_subcommand("stabilize", "trace the stabilization of a signed stream");
  stab->add_option("--stream", path, "stream file")->required();
  stab->add_option("--horizon", horizon, "last rank");
  stab->add_option("--fuel", fuel_text, "step budget");

  auto* dio = app.add_subcommand("dio", "decision trace for a polynomial");
  dio->add_option("--poly", path, "polynomial file")->required();
  dio->add_option("--horizon", horizon, "last rank");
  dio->add_option("--fuel", fuel_text, "step budget");

  auto* clo = app.add_subcommand("closure", "enumerate consequences of a theory");
  clo->add_option("--axioms", path, "one sentence per line")->required();
  clo->add_option("--steps", steps, "number of ranks");
  clo->add_option("--fuel", fuel_text, "step budget");

  auto* spec = app.add_subcommand("spec", "speculative extension of a stream of sentences");
  spec->add_option("--stream", path, "stream file")->required();
  spec->add_option("--translation", translation, "identity|vonneumann");
  spec->add_option("--horizon", horizon, "last rank");
  spec->add_option("--fuel", fuel_text, "step budget");

  auto* goe = app.add_subcommand("goedel", "arithmetized sentence of an enumerator");
  auto* en = goe->add_option("--enumerator", path, "stream file");
  auto* pr = goe->add_option("--program", program, "counter program, in place of an enumerator");
  en->excludes(pr);
  goe->add_option("--translation", translation, "identity|vonneumann");
  goe->add_option("--emit", emit, "sentence|matrix|certificate");

  auto* ev = app.add_subcommand("eval", "truth value of a bounded sentence");
  ev->add_option("--sentence", sentence, "sentence")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Natural fuel = fuel_text.empty() ? default_fuel() : natural_arg(fuel_text, "--fuel");
    if (fuel < 1) throw UsageError("fuel must be at least 1");
    if (*run) return cmd_run(path, input, fuel);
    if (*enc) return cmd_encode(scheme, values);
    if (*dec) return cmd_decode(scheme, code);
    if (*stab) return cmd_stabilize(path, natural_arg(horizon, "--horizon"), fuel);
    if (*dio) return cmd_dio(path, natural_arg(horizon, "--horizon"), fuel);
    if (*clo) return cmd_closure(path, natural_arg(steps, "--steps"), fuel);
    if (*spec) return cmd_spec(path, translation, natural_arg(horizon, "--horizon"), fuel);
    if (*goe) {
      if (path.empty() && program.empty()) throw UsageError("goedel needs --enumerator or --program");
      return cmd_goedel(path, program, translation, emit);
    }
    if (*ev) return cmd_eval(sentence);
  } catch (const FuelExhausted&) {
    std::cout.flush();
    std::cerr << "tc: budget exhausted\n";
    return kBudget;
  } catch (const goedel::Unsupported& e) {
    std::cout.flush();
    std::cerr << "tc: unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "tc: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
