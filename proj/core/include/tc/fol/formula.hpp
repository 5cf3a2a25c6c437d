#pragma once

// First-order terms and formulas as immutable shared trees.

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tc/natural.hpp"

namespace tc::fol {

class Term {
 public:
  enum class Kind { Var, Zero, Succ, Add, Mul, Apply };

  static Term var(std::string name);
  static Term zero();
  static Term succ(Term t);
  static Term add(Term a, Term b);
  static Term mul(Term a, Term b);
  /// Uninterpreted function symbol (any signature other than arithmetic).
  static Term apply(std::string symbol, std::vector<Term> args);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const std::vector<Term>& args() const { return node_->args; }
  const Term& arg(std::size_t i) const { return node_->args.at(i); }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator<(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// n° = s^n(0) for small n; larger values use a binary Horner form built
/// from s, + and *, so numerals stay linear in the bit length.
Term numeral(const Natural& n);
/// Value of a closed arithmetic term, nullopt on variables or foreign symbols.
std::optional<Natural> term_value(const Term& t);

class Formula {
 public:
  enum class Kind {
    Eq,         // t = u
    Less,       // t < u
    In,         // t in u
    Rel,        // R(t, ...) including 0-ary propositional atoms
    Not,
    And,
    Or,
    Imp,
    Forall,
    Exists,
    ForallLt,   // forall x < t. F
    ExistsLt,   // exists x < t. F
  };

  static Formula eq(Term a, Term b);
  static Formula less(Term a, Term b);
  static Formula in(Term a, Term b);
  static Formula rel(std::string symbol, std::vector<Term> args = {});
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  static Formula forall_lt(std::string var, Term bound, Formula body);
  static Formula exists_lt(std::string var, Term bound, Formula body);
  /// Conjunction / disjunction of a list; empty lists give 0 = 0 and ~(0 = 0).
  static Formula all_of(const std::vector<Formula>& fs);
  static Formula any_of(const std::vector<Formula>& fs);

  Kind kind() const { return node_->kind; }
  bool is_atomic() const { return kind() <= Kind::Rel; }
  bool is_quantifier() const { return kind() >= Kind::Forall; }
  bool is_bounded_quantifier() const { return kind() == Kind::ForallLt || kind() == Kind::ExistsLt; }

  /// Atom arguments (for Eq/Less/In: lhs, rhs).
  const std::vector<Term>& terms() const { return node_->terms; }
  const std::string& symbol() const { return node_->name; }
  /// Quantified variable.
  const std::string& var() const { return node_->name; }
  const Term& bound() const { return node_->terms.at(0); }
  const Formula& sub(std::size_t i) const { return node_->subs.at(i); }
  const Formula& body() const { return node_->subs.at(0); }
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> terms;
    std::vector<Formula> subs;
    std::size_t size;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Kind k, std::string name, std::vector<Term> terms, std::vector<Formula> subs);
  std::shared_ptr<const Node> node_;
};

using Sentence = Formula;

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
bool is_closed(const Formula& f);

/// Capture-avoiding substitution of `replacement` for free occurrences of `var`.
Term substitute(const Term& t, const std::string& var, const Term& replacement);
Formula substitute(const Formula& f, const std::string& var, const Term& replacement);

/// A variable name not occurring in `avoid`, derived from `base`.
std::string fresh_var(const std::string& base, const std::set<std::string>& avoid);

/// Replaces bounded quantifiers by their unbounded definitions:
/// forall x < t. F -> forall x. (x < t -> F), exists x < t. F -> exists x. (x < t & F).
Formula expand_bounded(const Formula& f);

}  // namespace tc::fol
