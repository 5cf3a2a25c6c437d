#pragma once

// The diagonal pipeline: the speculative enumerator J, Spec, the closure
// machine C, Tur, and the arithmetized sentence s(T).

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tc/code.hpp"
#include "tc/fol/arith.hpp"
#include "tc/fol/formula.hpp"
#include "tc/fol/proof.hpp"
#include "tc/fol/translation.hpp"
#include "tc/universal.hpp"

namespace tc::goedel {

// ---- J ----

struct F0Entry {
  fol::Formula formula;
  bool plus = false;
};

/// J(n): stage k and slot m with n = k(k+1)/2 + m; the entry is the m-th F0
/// formula, signed + iff it holds at 0, ..., k.
F0Entry enumerator_J(const Natural& n);
/// Machine code of J; outputs pair(formula code, sign).
MachineCode enumerator_j_code();
/// forall m. phi
fol::Sentence alpha(const fol::Formula& phi);

// ---- Spec ----

/// Rank 2k+1 carries K(T)'(k); rank 2k carries (t(alpha_phi), sign) for J(k) = (phi, sign).
MachineCode spec_i(const MachineCode& code, fol::Translation t);

// ---- C ----

/// budget 0: graph points of T' are evaluated without a cap, so C(T)
/// diverges where T' does. budget b > 0: each point gets b steps and points
/// that do not finish are left out.
MachineCode closure_C(const MachineCode& code, const Natural& budget = 0);

struct ClosureEntry {
  fol::Sentence sentence;
  bool plus = false;
  std::size_t stage = 0;              // the U block the rank falls in
  std::vector<std::size_t> indices;   // premise list l, as indices into T'
  std::vector<fol::Sentence> premises;
  std::size_t step = 0;               // position in the consequence enumeration
  fol::Proof proof;
};

/// C(T)'(n) with its provenance.
ClosureEntry closure_entry(const MachineCode& code, const Natural& budget, const Natural& n, Fuel& fuel);

// ---- Tur ----

/// Tur(F): pair(T, n) -> Dec(C(Spec(F)))(pair(code of t(s(T)), n)).
MachineCode build_H_and_Tur(const MachineCode& f, fol::Translation t, const Natural& budget = 0);

// ---- s(T) ----

class Unsupported : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct GoedelSentence {
  /// s(T) in prenex form: forall M. exists N. ~gamma(M, N).
  fol::Sentence sentence;
  /// Its negation: exists M. forall N. gamma(M, N).
  fol::Sentence negation;
  /// gamma with free variables M and N.
  fol::Formula matrix;
  fol::Level sentence_level, negation_level, matrix_level;
  /// t(s(T)) for a non-identity translation.
  std::optional<fol::Sentence> translated;
};

inline const std::string kOuterVar = "M";
inline const std::string kInnerVar = "N";

/// s(T) = "T is not Omega(T)-decided", with b = T itself. Only counter
/// programs can be arithmetized; composite codes raise Unsupported.
GoedelSentence sentence_s(const MachineCode& code);

/// G(F) = s(Tur(F)). Tur(F) is a composite code, so this raises Unsupported
/// unless the arithmetization covers composite codes.
GoedelSentence goedel_G(const MachineCode& f, fol::Translation t);

// ---- arithmetization internals, exposed for their oracles ----

/// Goedel beta function: c mod (1 + (i + 1) d).
Natural beta(const Natural& c, const Natural& d, const Natural& i);

struct BetaCode {
  Natural c, d;
};
/// Some (c, d) with beta(c, d, i) = seq[i] for every i.
BetaCode beta_witness(const std::vector<Natural>& seq);

/// Flattened configurations (pc, r0, ..., r(R-1)) of a run of q on x up to
/// and including the halting configuration; nullopt if q does not halt
/// within `fuel` steps.
std::optional<std::vector<Natural>> trace_sequence(const Program& q, const Natural& x, const Natural& fuel);

/// Delta0 formula in the free variables c, d, t, v and those of `input`:
/// (c, d) beta-codes the first t configurations of q on the input, the
/// last of which halts with output v (so q takes exactly t steps).
/// `input(y)` must say that y is the input value.
fol::Formula trace_formula(const Program& q, const std::function<fol::Formula(const fol::Term&)>& input);

/// Simulation oracle for trace_formula.
bool trace_holds(const Program& q, const Natural& c, const Natural& d, const Natural& x, const Natural& t,
                 const Natural& v);

/// z = pair(a, b) as an atomic formula.
fol::Formula pair_eq(const fol::Term& z, const fol::Term& a, const fol::Term& b);

/// gamma(M, N) evaluated by simulation for program q = Omega(T) and b = T.
bool matrix_oracle(const Program& q, const Natural& b, const Natural& M, const Natural& N);

}  // namespace tc::goedel
