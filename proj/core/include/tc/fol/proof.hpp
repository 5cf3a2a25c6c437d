#pragma once

// Hilbert-style calculus with equality, a proof checker, and a fair
// enumerator of consequences of a finite premise list.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tc/fol/formula.hpp"

namespace tc {
class Fuel;
}

namespace tc::fol {

enum class Schema {
  Weaken,           // a -> (b -> a)
  Distribute,       // (a -> (b -> c)) -> ((a -> b) -> (a -> c))
  Contrapose,       // (~b -> ~a) -> (a -> b)
  AndLeft,          // a & b -> a
  AndRight,         // a & b -> b
  AndIntro,         // a -> (b -> a & b)
  OrLeft,           // a -> a | b
  OrRight,          // b -> a | b
  OrElim,           // (a -> c) -> ((b -> c) -> (a | b -> c))
  Instantiate,      // (forall x. a) -> a[t/x]
  ForallOverImp,    // (forall x. (a -> b)) -> (a -> forall x. b), x not free in a
  ExistsIntro,      // a[t/x] -> exists x. a
  ExistsToForall,   // (exists x. a) -> ~forall x. ~a
  ForallToExists,   // ~(forall x. ~a) -> exists x. a
  BoundedForallOut, // (forall x < t. a) -> forall x. (x < t -> a)
  BoundedForallIn,  // converse
  BoundedExistsOut, // (exists x < t. a) -> exists x. (x < t & a)
  BoundedExistsIn,  // converse
  EqRefl,           // t = t
  EqSubst,          // s = t -> (A -> A'), A atomic, A' replaces some s by t
};

std::string to_string(Schema s);
bool is_instance(const Formula& f, Schema s);
std::optional<Schema> identify_axiom(const Formula& f);

struct Step {
  enum class Rule { Premise, Axiom, ModusPonens, Generalize };
  Formula formula;
  Rule rule;
  Schema schema = Schema::Weaken;  // Axiom
  std::size_t a = 0;               // Premise: premise index; MP: minor line; Gen: line
  std::size_t b = 0;               // MP: major line (a -> formula)
};
using Proof = std::vector<Step>;

struct ProofCheck {
  bool ok = true;
  std::size_t first_bad = 0;
  std::string reason;
};

/// Generalization over x is allowed only when x is free in no premise.
ProofCheck check_proof(const Proof& proof, const std::vector<Formula>& premises);

/// Finds justifications for a bare list of formulas; nullopt if some line has none.
std::optional<Proof> justify(const std::vector<Formula>& lines, const std::vector<Formula>& premises);

struct Derived {
  Sentence sentence;
  Proof proof;
};

/// Emits the closed consequences of the premises, each once, with a proof.
/// Stage 0 lists the premises; stage k adds axiom instances over closed
/// terms up to depth k, closes under modus ponens, and also checks one
/// block of brute-force candidate proofs so every derivation is reached
/// eventually. New sentences of a stage come out by size, then by printed
/// form. All work is charged to the fuel so costs do not depend on caching.
class DerivationEnumerator {
 public:
  explicit DerivationEnumerator(std::vector<Sentence> premises);

  /// n-th emitted sentence. Charges the cost of every stage up to the one
  /// that emits it.
  Derived at(std::size_t n, Fuel* fuel = nullptr);
  /// Position of a sentence if it is emitted within `max_stage` stages.
  std::optional<std::size_t> position_of(const Sentence& s, std::size_t max_stage);
  std::size_t stage_of(std::size_t n);
  const std::vector<Sentence>& premises() const { return premises_; }

 private:
  struct Node {
    Formula formula;
    Step::Rule rule;
    Schema schema = Schema::Weaken;
    std::size_t a = 0, b = 0;
  };
  std::size_t add(const Formula& f, Step::Rule rule, Schema schema, std::size_t a, std::size_t b,
                  std::vector<std::size_t>& fresh);
  void close_under_mp(std::vector<std::size_t>& fresh);
  void run_stage();
  Proof proof_of(std::size_t id) const;

  std::vector<Sentence> premises_;
  std::vector<Node> nodes_;
  std::map<Formula, std::size_t> index_;
  std::map<Formula, std::vector<std::size_t>> waiting_;  // antecedent -> implications
  std::vector<std::size_t> emitted_;                     // node ids in output order
  std::vector<std::size_t> stage_end_;                   // emitted_ size after each stage
  std::vector<unsigned long> stage_cost_;
  std::mutex mutex_;
};

/// n-th consequence of the premises (shared enumerators, cached by premise list).
Derived phi_closure(const std::vector<Sentence>& premises, std::size_t n, Fuel* fuel = nullptr);
std::shared_ptr<DerivationEnumerator> enumerator_for(const std::vector<Sentence>& premises);

}  // namespace tc::fol
