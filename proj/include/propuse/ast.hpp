#ifndef PROPUSE_AST_HPP
#define PROPUSE_AST_HPP

#include <compare>
#include <string>
#include <vector>

namespace propuse {

// Ground term: a constant (no arguments) or a function application.
class Term {
 public:
  Term() = default;
  explicit Term(std::string symbol) : head_(std::move(symbol)) {}
  Term(std::string head, std::vector<Term> args)
      : head_(std::move(head)), args_(std::move(args)) {}

  const std::string& head() const { return head_; }
  const std::vector<Term>& args() const { return args_; }
  bool is_constant() const { return args_.empty(); }

  void print(std::string& out) const;
  std::string str() const;

  bool operator==(const Term& other) const;
  // Total order by printed form; used for canonical sets and solver atom order.
  bool operator<(const Term& other) const;

 private:
  std::string head_;
  std::vector<Term> args_;
};

// Ground atom: predicate application, or equality when pred == "=".
struct Atom {
  std::string pred;
  std::vector<Term> args;

  bool is_equality() const { return pred == "="; }
  void print(std::string& out) const;
  std::string str() const;

  bool operator==(const Atom& other) const;
  bool operator<(const Atom& other) const;
};

// Quantifier-free ground formula over atoms.
class Formula {
 public:
  enum class Kind { Atom, Not, And, Or, Implies, Iff };

  Formula() = default;  // invalid placeholder atom; never produced by the parser

  static Formula atom(Atom a);
  static Formula atom(std::string pred, std::vector<Term> args);
  static Formula equality(Term lhs, Term rhs);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> fs);
  static Formula disjunction(std::vector<Formula> fs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);

  Kind kind() const { return kind_; }
  const Atom& atom_ref() const { return atom_; }
  const std::vector<Formula>& children() const { return children_; }

  void print(std::string& out) const;
  std::string str() const;

  bool operator==(const Formula& other) const;
  bool operator<(const Formula& other) const;  // by printed form

  // Visits every atom in the tree.
  template <typename F>
  void for_each_atom(F&& fn) const {
    if (kind_ == Kind::Atom) {
      fn(atom_);
      return;
    }
    for (const Formula& child : children_) child.for_each_atom(fn);
  }

 private:
  Kind kind_ = Kind::Atom;
  Atom atom_;
  std::vector<Formula> children_;
};

}  // namespace propuse

#endif
