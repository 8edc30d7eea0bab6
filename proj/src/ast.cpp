#include "propuse/ast.hpp"

#include <utility>

namespace propuse {

void Term::print(std::string& out) const {
  if (is_constant()) {
    out += head_;
    return;
  }
  out += '(';
  out += head_;
  for (const Term& arg : args_) {
    out += ' ';
    arg.print(out);
  }
  out += ')';
}

std::string Term::str() const {
  std::string out;
  print(out);
  return out;
}

bool Term::operator==(const Term& other) const {
  return head_ == other.head_ && args_ == other.args_;
}

bool Term::operator<(const Term& other) const {
  return str() < other.str();
}

void Atom::print(std::string& out) const {
  out += '(';
  out += pred;
  for (const Term& arg : args) {
    out += ' ';
    arg.print(out);
  }
  out += ')';
}

std::string Atom::str() const {
  std::string out;
  print(out);
  return out;
}

bool Atom::operator==(const Atom& other) const {
  return pred == other.pred && args == other.args;
}

bool Atom::operator<(const Atom& other) const {
  return str() < other.str();
}

Formula Formula::atom(Atom a) {
  Formula f;
  f.kind_ = Kind::Atom;
  f.atom_ = std::move(a);
  return f;
}

Formula Formula::atom(std::string pred, std::vector<Term> args) {
  return atom(Atom{std::move(pred), std::move(args)});
}

Formula Formula::equality(Term lhs, Term rhs) {
  return atom("=", {std::move(lhs), std::move(rhs)});
}

Formula Formula::negation(Formula f) {
  Formula out;
  out.kind_ = Kind::Not;
  out.children_.push_back(std::move(f));
  return out;
}

Formula Formula::conjunction(std::vector<Formula> fs) {
  Formula out;
  out.kind_ = Kind::And;
  out.children_ = std::move(fs);
  return out;
}

Formula Formula::disjunction(std::vector<Formula> fs) {
  Formula out;
  out.kind_ = Kind::Or;
  out.children_ = std::move(fs);
  return out;
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  Formula out;
  out.kind_ = Kind::Implies;
  out.children_.push_back(std::move(lhs));
  out.children_.push_back(std::move(rhs));
  return out;
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  Formula out;
  out.kind_ = Kind::Iff;
  out.children_.push_back(std::move(lhs));
  out.children_.push_back(std::move(rhs));
  return out;
}

namespace {

const char* connective_name(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Not: return "not";
    case Formula::Kind::And: return "and";
    case Formula::Kind::Or: return "or";
    case Formula::Kind::Implies: return "implies";
    case Formula::Kind::Iff: return "iff";
    case Formula::Kind::Atom: break;
  }
  return "";
}

}  // namespace

void Formula::print(std::string& out) const {
  if (kind_ == Kind::Atom) {
    atom_.print(out);
    return;
  }
  out += '(';
  out += connective_name(kind_);
  for (const Formula& child : children_) {
    out += ' ';
    child.print(out);
  }
  out += ')';
}

std::string Formula::str() const {
  std::string out;
  print(out);
  return out;
}

bool Formula::operator==(const Formula& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::Atom) return atom_ == other.atom_;
  return children_ == other.children_;
}

bool Formula::operator<(const Formula& other) const {
  return str() < other.str();
}

}  // namespace propuse
